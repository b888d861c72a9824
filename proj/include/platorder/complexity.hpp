#ifndef PLATORDER_COMPLEXITY_HPP
#define PLATORDER_COMPLEXITY_HPP

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "platorder/garside.hpp"

namespace platorder {

constexpr std::size_t kDefaultElementCap = 5'000'000;

// Proper complexity function on the group: every sublevel set is finite.
//   geodesic_artin : exact Artin length of the element, certified by ball
//                    search up to radius_limit.
//   garside_proper : |inf| + canonical length (the |inf| term is what makes
//                    the Garside variant proper; delta powers alone all have
//                    canonical length zero).
struct ComplexityFunction {
  enum Kind { GeodesicArtin, GarsideProper } kind = GeodesicArtin;
  int radius_limit = 8;

  static ComplexityFunction geodesic(int radius_limit);
  static ComplexityFunction garside();
  static ComplexityFunction parse(const std::string& text);  // "geodesic:8" | "garside"
  std::string str() const;
};

struct BallEntry {
  BraidElement element;
  BraidWord witness;  // one geodesic word, deterministic
  int length = 0;     // geodesic length of the element
};

// All elements of geodesic Artin length <= radius, sorted by (length, key).
struct Ball {
  int strands = 2;
  int radius = 0;
  std::vector<BallEntry> entries;
  std::unordered_map<std::string, int> index;  // nf key -> entry position

  const BallEntry* find(const std::string& key) const;
};

Ball ball_enumerate(int strands, int radius,
                    std::size_t element_cap = kDefaultElementCap);

// Exact element-level Artin length, certified by bidirectional ball search;
// not-found error when the element has no representative within the limit.
int geodesic_length(const BraidWord& w, int radius_limit,
                    std::size_t element_cap = kDefaultElementCap);

int garside_complexity(const BraidElement& e);

int complexity_of(const ComplexityFunction& c, const BraidWord& w);

}  // namespace platorder

#endif
