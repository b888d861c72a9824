#ifndef PLATORDER_PLAT_HPP
#define PLATORDER_PLAT_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "platorder/braid.hpp"
#include "platorder/laurent.hpp"

namespace platorder {

// Plat closure of a braid on 2n strands: adjacent endpoint pairs
// (1,2), (3,4), ... are joined by caps at top and bottom.

// Noncrossing perfect matching of the 2n points at one horizontal level;
// the state basis of the bracket transfer. arc[i] is the partner of i.
struct PlanarMatching {
  std::vector<int> arc;

  static PlanarMatching caps(int points);  // the adjacent matching
  friend bool operator==(const PlanarMatching&, const PlanarMatching&) = default;
  friend auto operator<=>(const PlanarMatching& a, const PlanarMatching& b) {
    return a.arc <=> b.arc;
  }
};

// All noncrossing perfect matchings of the given number of points
// (Catalan(points/2) of them), in lexicographic arc order.
std::vector<PlanarMatching> planar_matchings(int points);

// Composes the cup-cap tangle joining positions k, k+1 below the matching.
// Returns the number of loops this closes (0 or 1).
int apply_cup_cap(PlanarMatching& m, int k);

// Number of link components of the plat closure.
int component_count(const BraidWord& w);

// Kauffman bracket of the plat diagram, unknot-normalized. Crossings are
// resolved as A * (identity smoothing) + A^-1 * (cup-cap smoothing) for a
// positive letter, with closed loops contributing -A^2 - A^-2.
LaurentPoly kauffman_bracket_plat(const BraidWord& w);

// Orientation-independent crossing bookkeeping for the writhe: the diagram
// is traced once with a reference orientation per component; reversing
// component k flips the sign of every crossing between k and any other
// component while self-crossings are unaffected.
struct WritheData {
  int components = 0;
  long long self_writhe = 0;
  std::map<std::pair<int, int>, long long> pair_writhe;

  long long writhe(const std::vector<int>& orientation_signs) const;
};

WritheData trace_writhe(const BraidWord& w);

// (component count, multiset of kink-normalized brackets over orientation
// classes). Signature equality is necessary, never sufficient, for link
// type equality; downstream grouping is by signature class only.
struct PlatSignature {
  int components = 1;
  std::vector<LaurentPoly> brackets;  // sorted, one per orientation class

  std::string key() const;
  friend bool operator==(const PlatSignature&, const PlatSignature&) = default;
};

PlatSignature plat_signature(const BraidWord& w);

// Checks e_i e_i = delta e_i and e_i e_{i+-1} e_i = e_i on every basis state.
bool tl_relations_hold(int points);

}  // namespace platorder

#endif
