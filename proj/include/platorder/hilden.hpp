#ifndef PLATORDER_HILDEN_HPP
#define PLATORDER_HILDEN_HPP

#include <string>
#include <vector>

#include "platorder/braid.hpp"

namespace platorder {

// Generating family for the subgroup of B_2n preserving the standard cap
// system, i.e. the braids fixing the trivial plat. Three classical families:
//   cap twist        sigma_{2i-1}                        1 <= i <= n
//   cap through      sigma_{2i} sigma_{2i-1}^2 sigma_{2i}  1 <= i <= n-1
//   cap interchange  sigma_{2i} sigma_{2i+1} sigma_{2i-1} sigma_{2i}
// The family may be redundant; exploration only needs a generating set.
struct HildenGenerator {
  enum Family { CapTwist, CapThrough, CapInterchange } family;
  int index;  // the i above, 1-based
  BraidWord word;

  std::string name() const;  // e.g. "CapTwist(1)"
};

// All generators at level n (strand count 2n), twists first, then throughs,
// then interchanges, each by ascending index.
std::vector<HildenGenerator> hilden_generators(int n);

struct GeneratorCheck {
  std::string name;
  bool inverted = false;
  bool ok = false;
};

// Necessary-condition guard: every generator and its inverse must have the
// n-component unlink plat signature. Throws an integrity error naming the
// first failing generator; this would mean a wrong generator table.
std::vector<GeneratorCheck> verify_generators(int n, int max_n = 4);

}  // namespace platorder

#endif
