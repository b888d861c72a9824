#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "platorder/explorer.hpp"
#include "platorder/garside.hpp"
#include "platorder/report.hpp"

using namespace platorder;
using nlohmann::json;

namespace {

Budget tiny() {
  Budget b;
  b.ball_radius = 3;
  b.move_depth = 4;
  b.complexity = ComplexityFunction::geodesic(8);
  return b;
}

}  // namespace

TEST_CASE("cell report fields re-parse to the same objects") {
  CosetCell cell = explore_cell(BraidWord(4, {2}), tiny());
  json j = json::parse(cell_report(cell));

  CHECK(j["strands"] == 4);
  CHECK(j["budget"]["ball_radius"] == 3);
  CHECK(j["budget"]["move_depth"] == 4);
  CHECK(j["budget"]["complexity"] == "geodesic:8");
  CHECK(j["member_count"] == cell.members.size());
  CHECK(j["convention"] == "sigma-positive-lowest");

  BraidWord seed = parse_word(j["seed"].get<std::string>(), 4);
  CHECK(seed == cell.seed);
  CHECK(normal_form(seed).key() == j["nf_key"].get<std::string>());

  BraidWord canonical = parse_word(j["canonical"].get<std::string>(), 4);
  CHECK(word_problem_equal(canonical, cell.canonical));

  for (size_t i = 0; i < j["min_set"].size(); ++i) {
    BraidWord w = parse_word(j["min_set"][i].get<std::string>(), 4);
    CHECK(w == cell.min_set[i]);
  }
  CHECK(j["signature"]["components"] == 1);
  CHECK(j["signature"]["brackets"][0] == "1*A^0");
}

TEST_CASE("order report is deterministic and lists cells in order") {
  std::vector<BraidWord> seeds{BraidWord(4), BraidWord(4, {2})};
  std::string first = order_report(order_classes(seeds, tiny()));
  std::string second = order_report(order_classes(seeds, tiny()));
  CHECK(first == second);

  json j = json::parse(first);
  REQUIRE(j["cells"].size() == 2);
  CHECK(j["max_canonical_complexity"] == 1);
  CHECK(j["seeds"].size() == 2);
}

TEST_CASE("canplat report carries the global fields") {
  PlatSignature target = plat_signature(BraidWord(4, {2}));
  CanPlatReport rep = can_plat_search(target, 4, tiny());
  json j = json::parse(canplat_report(rep));
  CHECK(j["beta_global"] == "-2");
  CHECK(j["compatible"] == true);
  CHECK(j["c_min_global"] == 1);
  CHECK(j["candidates_move_closed"] == true);
  CHECK(j["target"]["components"] == 1);
  // the embedded cell describes beta_global's coset
  CHECK(parse_word(j["seed"].get<std::string>(), 4) == BraidWord(4, {-2}));
}
