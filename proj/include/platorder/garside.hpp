#ifndef PLATORDER_GARSIDE_HPP
#define PLATORDER_GARSIDE_HPP

#include <string>
#include <utility>
#include <vector>

#include "platorder/braid.hpp"

namespace platorder {

// Left normal form: delta^inf * f_1 * ... * f_l with every f_i a
// permutation braid (simple element), no factor equal to the identity or to
// delta, and every adjacent pair left-weighted. This is the canonical
// identity of a group element and the dedup key used everywhere.
struct BraidElement {
  int strands = 2;
  int inf = 0;
  std::vector<Permutation> factors;

  int sup() const { return inf + static_cast<int>(factors.size()); }
  int canonical_length() const { return static_cast<int>(factors.size()); }
  bool is_identity() const { return inf == 0 && factors.empty(); }

  // Stable serialization "inf|perm_1|perm_2|..." with one-line image
  // notation per factor; appears verbatim in reports as "nf_key".
  std::string key() const;

  friend bool operator==(const BraidElement&, const BraidElement&) = default;
};

// Simple-element (permutation braid) helpers. Divisibility is the prefix
// order on positive braids; for simples it is inversion-set containment.
Permutation half_twist(int n);                       // delta as a permutation
Permutation tau_conjugate(const Permutation& p);     // delta^-1 p delta
bool divides_simple(const Permutation& t, const Permutation& s);
Permutation left_meet(const Permutation& a, const Permutation& b);
Permutation right_complement(const Permutation& a);  // a^-1 delta
bool left_weighted(const Permutation& a, const Permutation& b);

// Canonical positive word for a permutation braid: repeatedly emit the
// lowest descent. Length equals the inversion count.
BraidWord simple_word(int strands, const Permutation& p);

BraidElement normal_form(const BraidWord& w);
BraidWord word_of(const BraidElement& e);  // delta^inf word then factor words
std::pair<int, int> inf_sup(const BraidElement& e);
bool word_problem_equal(const BraidWord& u, const BraidWord& v);

}  // namespace platorder

#endif
