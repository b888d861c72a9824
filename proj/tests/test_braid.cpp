#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "platorder/braid.hpp"
#include "platorder/errors.hpp"
#include "testutil.hpp"

using namespace platorder;

TEST_CASE("parse_word reads whitespace-separated signed letters") {
  BraidWord w = parse_word("1 -2 1", 4);
  CHECK(w.letters == std::vector<int>{1, -2, 1});
  CHECK(parse_word("", 4).is_identity_word());
  CHECK(parse_word("   \t\n ", 4).is_identity_word());
  CHECK(parse_word("  3   -1 ", 4).letters == std::vector<int>{3, -1});
}

TEST_CASE("parse_word rejects out-of-range and malformed tokens") {
  CHECK_THROWS_AS(parse_word("4", 4), usage_error);
  CHECK_THROWS_AS(parse_word("0", 4), usage_error);
  CHECK_THROWS_AS(parse_word("-4", 4), usage_error);
  CHECK_THROWS_AS(parse_word("1 x 2", 4), usage_error);
  CHECK_THROWS_AS(parse_word("1.5", 4), usage_error);
  CHECK_THROWS_WITH_AS(parse_word("1 7 2", 4),
                       doctest::Contains("'7'"), usage_error);
}

TEST_CASE("format_word round-trips") {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    BraidWord w = testutil::random_word(rng, (i % 2) ? 4 : 6, 12);
    CHECK(parse_word(format_word(w), w.strands) == w);
  }
}

TEST_CASE("free_reduce removes cancelling pairs") {
  CHECK(free_reduce(BraidWord(4, {1, -1})).is_identity_word());
  CHECK(free_reduce(BraidWord(4, {1, 2, -2, -1})).is_identity_word());
  CHECK(free_reduce(BraidWord(4, {1, 2, 1})).letters == std::vector<int>{1, 2, 1});
}

TEST_CASE("free_reduce is idempotent and permutation-invariant") {
  std::mt19937 rng(11);
  for (int i = 0; i < 400; ++i) {
    BraidWord w = testutil::random_word(rng, 4, 12);
    BraidWord r = free_reduce(w);
    CHECK(free_reduce(r) == r);
    CHECK(permutation_of(w) == permutation_of(r));
  }
}

TEST_CASE("permutation_of on fixtures") {
  CHECK(permutation_of(BraidWord(4)).is_identity());
  CHECK(permutation_of(BraidWord(4, {1})) == Permutation({1, 0, 2, 3}));
  // sigma_2 sigma_1 sigma_3 sigma_2 sends 1->3, 2->4, 3->1, 4->2
  CHECK(permutation_of(BraidWord(4, {2, 1, 3, 2})) == Permutation({2, 3, 0, 1}));
}

TEST_CASE("permutation_of is a homomorphism for the left-to-right convention") {
  std::mt19937 rng(13);
  for (int i = 0; i < 1200; ++i) {
    int strands = (i % 2) ? 4 : 6;
    BraidWord u = testutil::random_word(rng, strands, 10);
    BraidWord v = testutil::random_word(rng, strands, 10);
    CHECK(permutation_of(concat(u, v)) ==
          permutation_of(u).then(permutation_of(v)));
  }
}

TEST_CASE("inverse concatenates to the identity permutation") {
  std::mt19937 rng(17);
  for (int i = 0; i < 200; ++i) {
    BraidWord w = testutil::random_word(rng, 5, 10);
    CHECK(free_reduce(concat(w, inverse(w))).is_identity_word());
  }
}

TEST_CASE("word construction validates letters and strand count") {
  CHECK_THROWS_AS(BraidWord(1), usage_error);
  CHECK_THROWS_AS(BraidWord(4, {5}), usage_error);
  CHECK_THROWS_AS(BraidWord(4, {0}), usage_error);
}
