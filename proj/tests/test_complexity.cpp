#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "platorder/complexity.hpp"
#include "platorder/dehornoy.hpp"
#include "platorder/errors.hpp"
#include "testutil.hpp"

using namespace platorder;

namespace {

// geodesic-length oracle independent of the ball machinery: enumerate raw
// words by length and decide equality by handle reduction, which is a word
// problem route that bypasses normal forms entirely
bool equal_by_handles(const BraidWord& u, const BraidWord& v) {
  return handle_reduce(concat(inverse(u), v)).is_identity_word();
}

int geodesic_oracle(const BraidWord& w, int limit) {
  std::vector<BraidWord> level{BraidWord(w.strands)};
  for (int len = 0; len <= limit; ++len) {
    for (const auto& cand : level)
      if (equal_by_handles(cand, w)) return len;
    std::vector<BraidWord> next;
    for (const auto& cand : level) {
      for (int i = 1; i < w.strands; ++i) {
        for (int s : {i, -i}) {
          BraidWord ext = cand;
          ext.letters.push_back(s);
          next.push_back(std::move(ext));
        }
      }
    }
    level = std::move(next);
  }
  return -1;
}

// all left-weighted factor sequences with |inf| + length <= bound, built
// directly from the simple-element lattice
std::vector<BraidElement> garside_sublevel(int strands, int bound) {
  std::vector<Permutation> simples;
  {
    std::vector<int> img(static_cast<size_t>(strands));
    std::iota(img.begin(), img.end(), 0);
    const Permutation delta = half_twist(strands);
    do {
      Permutation p{img};
      if (!p.is_identity() && p != delta) simples.push_back(p);
    } while (std::next_permutation(img.begin(), img.end()));
  }
  std::vector<BraidElement> out;
  for (int inf = -bound; inf <= bound; ++inf) {
    int room = bound - std::abs(inf);
    std::vector<std::vector<Permutation>> stack{{}};
    for (int len = 0; len <= room; ++len) {
      for (const auto& seq : stack)
        out.push_back(BraidElement{strands, inf, seq});
      std::vector<std::vector<Permutation>> next;
      for (const auto& seq : stack) {
        for (const auto& s : simples) {
          if (!seq.empty() && !left_weighted(seq.back(), s)) continue;
          auto ext = seq;
          ext.push_back(s);
          next.push_back(std::move(ext));
        }
      }
      stack = std::move(next);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("ball sizes in the infinite cyclic group B_2") {
  for (int r = 0; r <= 10; ++r)
    CHECK(ball_enumerate(2, r).entries.size() == static_cast<size_t>(2 * r + 1));
}

TEST_CASE("B_4 ball fixtures and monotonicity") {
  CHECK(ball_enumerate(4, 0).entries.size() == 1);
  CHECK(ball_enumerate(4, 1).entries.size() == 7);
  size_t prev = 0;
  for (int r = 0; r <= 5; ++r) {
    size_t size = ball_enumerate(4, r).entries.size();
    CHECK(size > prev);
    prev = size;
  }
}

TEST_CASE("ball entries carry geodesic witnesses") {
  Ball b = ball_enumerate(4, 3);
  std::set<std::string> keys;
  for (const auto& e : b.entries) {
    CHECK(e.witness.length() == e.length);
    CHECK(normal_form(e.witness) == e.element);
    CHECK(e.length <= 3);
    CHECK(keys.insert(e.element.key()).second);
    CHECK(geodesic_length(e.witness, 3) == e.length);
  }
  // deterministic order: (length, key)
  for (size_t i = 1; i < b.entries.size(); ++i) {
    const auto& a = b.entries[i - 1];
    const auto& c = b.entries[i];
    CHECK((a.length < c.length ||
           (a.length == c.length && a.element.key() < c.element.key())));
  }
}

TEST_CASE("ball element cap raises a budget error") {
  CHECK_THROWS_AS(ball_enumerate(4, 4, 10), budget_error);
}

TEST_CASE("geodesic_length fixtures") {
  CHECK(geodesic_length(BraidWord(4), 5) == 0);
  CHECK(geodesic_length(BraidWord(4, {1, -1}), 5) == 0);
  CHECK(geodesic_length(BraidWord(4, {1, 2}), 5) == 2);
  CHECK(geodesic_length(BraidWord(3, {1, 2, 1}), 5) == 3);
  CHECK_THROWS_AS(geodesic_length(BraidWord(2, {1, 1, 1}), 2), not_found_error);
}

TEST_CASE("geodesic_length agrees with the raw-word oracle") {
  std::mt19937 rng(83);
  for (int i = 0; i < 60; ++i) {
    BraidWord w = testutil::random_word(rng, 4, 4);
    int expect = geodesic_oracle(w, 4);
    REQUIRE(expect >= 0);
    CHECK(geodesic_length(w, 6) == expect);
  }
}

TEST_CASE("triangle inequality on sampled pairs") {
  std::mt19937 rng(89);
  for (int i = 0; i < 80; ++i) {
    BraidWord u = testutil::random_word(rng, 4, 3);
    BraidWord v = testutil::random_word(rng, 4, 3);
    int du = geodesic_length(u, 8);
    int dv = geodesic_length(v, 8);
    CHECK(geodesic_length(concat(u, v), 8) <= du + dv);
  }
}

TEST_CASE("garside_complexity fixtures") {
  CHECK(garside_complexity(normal_form(BraidWord(4))) == 0);
  CHECK(garside_complexity(normal_form(BraidWord(4, {1}))) == 1);
  BraidWord delta4 = simple_word(4, half_twist(4));
  CHECK(garside_complexity(normal_form(inverse(delta4))) == 1);
  // delta powers are not flat: |inf| grows
  CHECK(garside_complexity(normal_form(concat(delta4, delta4))) == 2);
}

TEST_CASE("garside sublevel sets are finite and consistent") {
  auto sublevel = garside_sublevel(4, 3);
  CHECK(sublevel.size() > 0);
  std::set<std::string> keys;
  for (const auto& e : sublevel) {
    CHECK(garside_complexity(e) <= 3);
    CHECK(keys.insert(e.key()).second);  // pairwise distinct
    // the enumerated sequence really is a left normal form
    CHECK(normal_form(word_of(e)) == e);
  }
  // every ball element of complexity <= 3 appears in the direct enumeration
  Ball b = ball_enumerate(4, 4);
  for (const auto& e : b.entries)
    if (garside_complexity(e.element) <= 3) CHECK(keys.count(e.element.key()));
}

TEST_CASE("complexity dispatch is constant on word-problem classes") {
  std::mt19937 rng(97);
  ComplexityFunction geo = ComplexityFunction::geodesic(10);
  ComplexityFunction gar = ComplexityFunction::garside();
  CHECK(complexity_of(geo, BraidWord(4, {1, -1})) == 0);
  CHECK(complexity_of(gar, BraidWord(4, {1})) == 1);
  CHECK(complexity_of(geo, BraidWord(3, {1, 2, 1})) == 3);
  for (int i = 0; i < 40; ++i) {
    BraidWord w = testutil::random_word(rng, 4, 5);
    BraidWord v = testutil::rewritten(rng, w, 12, 12);
    CHECK(complexity_of(geo, w) == complexity_of(geo, v));
    CHECK(complexity_of(gar, w) == complexity_of(gar, v));
  }
}

TEST_CASE("complexity function parsing round-trips") {
  CHECK(ComplexityFunction::parse("garside").kind == ComplexityFunction::GarsideProper);
  ComplexityFunction g = ComplexityFunction::parse("geodesic:7");
  CHECK(g.kind == ComplexityFunction::GeodesicArtin);
  CHECK(g.radius_limit == 7);
  CHECK(ComplexityFunction::parse(g.str()).radius_limit == 7);
  CHECK_THROWS_AS(ComplexityFunction::parse("fancy"), usage_error);
  CHECK_THROWS_AS(ComplexityFunction::parse("geodesic:x"), usage_error);
}
