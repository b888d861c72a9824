#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "bracket_oracle.hpp"
#include "platorder/errors.hpp"
#include "platorder/hilden.hpp"
#include "platorder/plat.hpp"
#include "testutil.hpp"

using namespace platorder;
using testutil::bracket_oracle;
using testutil::component_count_oracle;

namespace {

LaurentPoly parse_terms(std::initializer_list<std::pair<int, int>> coeff_exp) {
  LaurentPoly p;
  for (auto [c, e] : coeff_exp) p += LaurentPoly::monomial(c, e);
  return p;
}

BraidWord random_hilden_product(std::mt19937& rng, int n, int max_gens) {
  auto gens = hilden_generators(n);
  std::uniform_int_distribution<size_t> which(0, gens.size() - 1);
  std::uniform_int_distribution<int> count(0, max_gens);
  std::uniform_int_distribution<int> invert(0, 1);
  BraidWord w(2 * n);
  int k = count(rng);
  for (int i = 0; i < k; ++i) {
    const BraidWord& g = gens[which(rng)].word;
    w = concat(w, invert(rng) ? inverse(g) : g);
  }
  return w;
}

}  // namespace

TEST_CASE("planar matching basis has Catalan size") {
  CHECK(planar_matchings(2).size() == 1);
  CHECK(planar_matchings(4).size() == 2);
  CHECK(planar_matchings(6).size() == 5);
  CHECK(planar_matchings(8).size() == 14);
  for (const auto& m : planar_matchings(8)) {
    std::set<int> seen;
    for (int i = 0; i < 8; ++i) {
      CHECK(m.arc[m.arc[i]] == i);
      seen.insert(m.arc[i]);
      // noncrossing: no i < j < arc(i) < arc(j)
      for (int j = i + 1; j < m.arc[i]; ++j)
        CHECK_FALSE(j < m.arc[i] && m.arc[i] < m.arc[j]);
    }
    CHECK(seen.size() == 8);
  }
}

TEST_CASE("temperley-lieb relations hold on the state basis") {
  for (int points : {2, 4, 6, 8}) CHECK(tl_relations_hold(points));
}

TEST_CASE("component_count fixtures") {
  CHECK(component_count(BraidWord(4)) == 2);
  CHECK(component_count(BraidWord(4, {2})) == 1);
  CHECK(component_count(BraidWord(4, {2, 2})) == 2);
  CHECK(component_count(BraidWord(2)) == 1);
  CHECK(component_count(BraidWord(6)) == 3);
  CHECK_THROWS_AS(component_count(BraidWord(3, {1})), usage_error);
}

TEST_CASE("component_count agrees with the diagram oracle") {
  std::mt19937 rng(67);
  for (int strands : {2, 4, 6}) {
    for (int i = 0; i < 300; ++i) {
      BraidWord w = testutil::random_word(rng, strands, 10);
      CHECK(component_count(w) == component_count_oracle(w));
    }
  }
}

TEST_CASE("bracket fixtures, oracle-confirmed") {
  // unknot
  CHECK(bracket_oracle(BraidWord(2)) == LaurentPoly::one());
  CHECK(kauffman_bracket_plat(BraidWord(2)) == LaurentPoly::one());

  // two-component unlink: one loop factor
  LaurentPoly delta = parse_terms({{-1, 2}, {-1, -2}});
  CHECK(bracket_oracle(BraidWord(4)) == delta);
  CHECK(kauffman_bracket_plat(BraidWord(4)) == delta);

  // plat of sigma_2^2 is the Hopf link
  LaurentPoly hopf = parse_terms({{-1, 4}, {-1, -4}});
  CHECK(bracket_oracle(BraidWord(4, {2, 2})) == hopf);
  CHECK(kauffman_bracket_plat(BraidWord(4, {2, 2})) == hopf);
}

TEST_CASE("bracket engine matches the brute-force oracle on random words") {
  std::mt19937 rng(71);
  for (int strands : {2, 4, 6}) {
    for (int i = 0; i < 120; ++i) {
      BraidWord w = testutil::random_word(rng, strands, 8);
      CHECK(kauffman_bracket_plat(w) == bracket_oracle(w));
    }
  }
}

TEST_CASE("bracket is invariant under defining-relation rewrites") {
  std::mt19937 rng(73);
  for (int i = 0; i < 150; ++i) {
    BraidWord w = testutil::random_word(rng, 4, 8);
    BraidWord v = testutil::rewritten(rng, w, 16, 14);
    CHECK(kauffman_bracket_plat(w) == kauffman_bracket_plat(v));
  }
}

TEST_CASE("signature fixtures") {
  PlatSignature unknot = plat_signature(BraidWord(4, {2}));
  CHECK(unknot.components == 1);
  REQUIRE(unknot.brackets.size() == 1);
  CHECK(unknot.brackets[0] == LaurentPoly::one());

  PlatSignature unlink = plat_signature(BraidWord(4));
  CHECK(unlink.components == 2);
  REQUIRE(unlink.brackets.size() == 2);
  LaurentPoly delta = parse_terms({{-1, 2}, {-1, -2}});
  CHECK(unlink.brackets[0] == delta);
  CHECK(unlink.brackets[1] == delta);

  // kinked unknots still normalize to 1
  CHECK(plat_signature(BraidWord(4, {1, 2})) == unknot);
  CHECK(plat_signature(BraidWord(2, {1, 1, 1})) ==
        plat_signature(BraidWord(2)));

  // trefoil: writhe-normalized bracket from the oracle; both orientations
  // of a knot give one class
  PlatSignature trefoil = plat_signature(BraidWord(4, {2, 2, 2}));
  CHECK(trefoil.components == 1);
  REQUIRE(trefoil.brackets.size() == 1);
  WritheData wd = trace_writhe(BraidWord(4, {2, 2, 2}));
  long long writhe = wd.writhe({1});
  LaurentPoly norm = LaurentPoly::monomial((writhe % 2 == 0) ? 1 : -1,
                                           static_cast<int>(-3 * writhe));
  CHECK(trefoil.brackets[0] == norm * bracket_oracle(BraidWord(4, {2, 2, 2})));
  // chirality: the mirror braid has a different signature
  CHECK_FALSE(trefoil == plat_signature(BraidWord(4, {-2, -2, -2})));
}

TEST_CASE("signature is invariant under two-sided cap-system moves") {
  std::mt19937 rng(79);
  for (int n : {2, 3}) {
    for (int i = 0; i < 60; ++i) {
      BraidWord w = testutil::random_word(rng, 2 * n, 6);
      BraidWord h1 = random_hilden_product(rng, n, 2);
      BraidWord h2 = random_hilden_product(rng, n, 2);
      PlatSignature before = plat_signature(w);
      PlatSignature after = plat_signature(concat(h1, concat(w, h2)));
      CHECK(before == after);
      CHECK(component_count(w) == component_count(concat(h1, concat(w, h2))));
    }
  }
}

TEST_CASE("laurent polynomial text form") {
  CHECK(LaurentPoly().str() == "0");
  CHECK(LaurentPoly::one().str() == "1*A^0");
  CHECK(parse_terms({{-1, 2}, {-1, -2}}).str() == "-1*A^2 + -1*A^-2");
  CHECK(parse_terms({{3, 0}, {2, 5}}).str() == "2*A^5 + 3*A^0");
  CHECK((parse_terms({{1, 1}}) * parse_terms({{1, -1}})).str() == "1*A^0");
  CHECK((parse_terms({{1, 1}}) - parse_terms({{1, 1}})).is_zero());
}
