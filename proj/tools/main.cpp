#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "platorder/complexity.hpp"
#include "platorder/dehornoy.hpp"
#include "platorder/errors.hpp"
#include "platorder/explorer.hpp"
#include "platorder/garside.hpp"
#include "platorder/hilden.hpp"
#include "platorder/plat.hpp"
#include "platorder/report.hpp"

namespace {

using namespace platorder;

std::size_t ball_cap_from_env() {
  const char* raw = std::getenv("PLATORDER_BALL_CAP");
  if (!raw) return kDefaultElementCap;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0)
    throw usage_error("PLATORDER_BALL_CAP must be a positive integer");
  return static_cast<std::size_t>(v);
}

void emit(const std::string& text, const std::string& output_path) {
  std::cout << text;
  if (!output_path.empty()) {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw usage_error("cannot open output file '" + output_path + "'");
    out << text;
  }
}

struct BudgetFlags {
  int radius = 5;
  int move_depth = 4;
  std::string complexity = "geodesic:8";

  void attach(CLI::App* cmd) {
    cmd->add_option("--radius", radius, "ball radius (geodesic length bound)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--move-depth", move_depth,
                    "max generator letters applied on each side")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--complexity", complexity,
                    "complexity function: geodesic:<limit> or garside");
  }

  Budget budget() const {
    Budget b;
    b.ball_radius = radius;
    b.move_depth = move_depth;
    b.complexity = ComplexityFunction::parse(complexity);
    return b;
  }
};

int run_selftest(int max_n) {
  bool all_ok = true;
  for (int n = 1; n <= max_n; ++n) {
    try {
      auto checks = verify_generators(n, max_n);
      std::cout << "PASS verify_generators n=" << n << " (" << checks.size()
                << " checks)\n";
    } catch (const integrity_error& e) {
      std::cout << "FAIL verify_generators n=" << n << ": " << e.what() << "\n";
      all_ok = false;
    }
  }
  for (int n = 1; n <= max_n; ++n) {
    int points = 2 * n;
    std::size_t states = planar_matchings(points).size();
    if (tl_relations_hold(points)) {
      std::cout << "PASS temperley-lieb relations points=" << points << " ("
                << states << " states)\n";
    } else {
      std::cout << "FAIL temperley-lieb relations points=" << points << "\n";
      all_ok = false;
    }
  }
  return all_ok ? 0 : 3;
}

int dispatch(int argc, char** argv) {
  CLI::App app{
      "platorder: canonical plat representatives of braid double cosets and "
      "the induced order on plat presentation classes"};
  app.require_subcommand(1);

  int strands = 4;
  std::string word_a, word_b, seed_text, target_text, output_path;
  std::vector<std::string> seed_texts;
  long step_budget = kDefaultStepBudget;
  int ball_radius = 5;
  int level_n = 2;
  int max_n = 3;
  BudgetFlags cell_flags, order_flags, canplat_flags;

  auto* compare = app.add_subcommand("compare", "Dehornoy-compare two braid words");
  compare->add_option("--strands,-s", strands)->required();
  compare->add_option("--step-budget", step_budget);
  compare->add_option("a", word_a, "left braid word")->required();
  compare->add_option("b", word_b, "right braid word")->required();

  auto* nf = app.add_subcommand("nf", "left normal form key of a braid word");
  nf->add_option("--strands,-s", strands)->required();
  nf->add_option("word", word_a)->required();

  auto* plat = app.add_subcommand("plat", "plat-closure signature of a braid word");
  plat->add_option("--strands,-s", strands)->required();
  plat->add_option("word", word_a)->required();
  plat->add_option("--output,-o", output_path);

  auto* ball = app.add_subcommand("ball", "enumerate the geodesic ball");
  ball->add_option("--strands,-s", strands)->required();
  ball->add_option("--radius", ball_radius)->check(CLI::NonNegativeNumber);

  auto* hilden = app.add_subcommand("hilden", "list the cap-system generators");
  hilden->add_option("--n", level_n, "level (strand count 2n)")->required();

  auto* cell = app.add_subcommand("cell", "explore the double coset cell of a seed");
  cell->add_option("--strands,-s", strands)->required();
  cell_flags.attach(cell);
  cell->add_option("seed", seed_text)->required();
  cell->add_option("--output,-o", output_path);

  auto* order = app.add_subcommand("order", "order the cells of several seeds");
  order->add_option("--strands,-s", strands)->required();
  order_flags.attach(order);
  order->add_option("seeds", seed_texts)->required()->expected(-1);
  order->add_option("--output,-o", output_path);

  auto* canplat = app.add_subcommand(
      "canplat", "globally minimal braid for a target plat signature");
  canplat->add_option("--strands,-s", strands)->required();
  canplat_flags.attach(canplat);
  canplat
      ->add_option("--target", target_text,
                   "braid word whose plat signature is the target")
      ->required();
  canplat->add_option("--output,-o", output_path);

  auto* selftest =
      app.add_subcommand("selftest", "generator table and state-sum integrity checks");
  selftest->add_option("--max-n", max_n)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help or the parse error
    return code == 0 ? 0 : 1;
  }
  std::size_t cap = ball_cap_from_env();

  if (*compare) {
    BraidWord a = parse_word(word_a, strands);
    BraidWord b = parse_word(word_b, strands);
    switch (dehornoy_compare(a, b, step_budget)) {
      case OrderOutcome::Less: std::cout << "LT\n"; break;
      case OrderOutcome::Equal: std::cout << "EQ\n"; break;
      case OrderOutcome::Greater: std::cout << "GT\n"; break;
    }
  } else if (*nf) {
    std::cout << normal_form(parse_word(word_a, strands)).key() << "\n";
  } else if (*plat) {
    emit(signature_report(plat_signature(parse_word(word_a, strands))), output_path);
  } else if (*ball) {
    Ball b = ball_enumerate(strands, ball_radius, cap);
    for (const auto& entry : b.entries)
      std::cout << entry.element.key() << " " << entry.length << " "
                << format_word(entry.witness) << "\n";
  } else if (*hilden) {
    for (const auto& g : hilden_generators(level_n))
      std::cout << g.name() << " " << format_word(g.word) << "\n";
  } else if (*cell) {
    BraidWord seed = parse_word(seed_text, strands);
    emit(cell_report(explore_cell(seed, cell_flags.budget(), cap)), output_path);
  } else if (*order) {
    std::vector<BraidWord> seeds;
    for (const auto& t : seed_texts) seeds.push_back(parse_word(t, strands));
    emit(order_report(order_classes(seeds, order_flags.budget(), cap)), output_path);
  } else if (*canplat) {
    PlatSignature target = plat_signature(parse_word(target_text, strands));
    emit(canplat_report(can_plat_search(target, strands, canplat_flags.budget(), cap)),
         output_path);
  } else if (*selftest) {
    return run_selftest(max_n);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const platorder::usage_error& e) {
    std::cerr << "usage-error: " << e.what() << "\n";
    return 1;
  } catch (const platorder::budget_error& e) {
    std::cerr << "budget-exceeded: " << e.what() << "\n";
    return 2;
  } catch (const platorder::not_found_error& e) {
    std::cerr << "not-found: " << e.what() << "\n";
    return 2;
  } catch (const platorder::integrity_error& e) {
    std::cerr << "integrity-error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "integrity-error: unexpected: " << e.what() << "\n";
    return 3;
  }
}
