#include "platorder/report.hpp"

#include <json.hpp>

#include "platorder/dehornoy.hpp"

namespace platorder {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json budget_json(const Budget& b) {
  ordered_json j;
  j["ball_radius"] = b.ball_radius;
  j["move_depth"] = b.move_depth;
  j["complexity"] = b.complexity.str();
  return j;
}

ordered_json signature_json(const PlatSignature& sig) {
  ordered_json j;
  j["components"] = sig.components;
  ordered_json brackets = ordered_json::array();
  for (const auto& b : sig.brackets) brackets.push_back(b.str());
  j["brackets"] = brackets;
  return j;
}

ordered_json words_json(const std::vector<BraidWord>& ws) {
  ordered_json arr = ordered_json::array();
  for (const auto& w : ws) arr.push_back(format_word(w));
  return arr;
}

ordered_json cell_json(const CosetCell& cell) {
  ordered_json j;
  j["strands"] = cell.strands;
  j["budget"] = budget_json(cell.budget);
  j["seed"] = format_word(cell.seed);
  j["nf_key"] = cell.nf_key;
  j["member_count"] = cell.members.size();
  j["c_min"] = cell.c_min;
  j["min_set"] = words_json(cell.min_set);
  j["canonical"] = format_word(cell.canonical);
  j["saturated_at_radius"] = cell.saturated_at_radius;
  j["signature"] = signature_json(cell.signature);
  j["convention"] = kOrderConvention;
  if (!cell.merged_seeds.empty()) j["merged_from"] = cell.merged_seeds;
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string signature_report(const PlatSignature& sig) {
  return dump(signature_json(sig));
}

std::string cell_report(const CosetCell& cell) { return dump(cell_json(cell)); }

std::string order_report(const OrderReport& report) {
  ordered_json j;
  j["strands"] = report.strands;
  j["budget"] = budget_json(report.budget);
  j["convention"] = kOrderConvention;
  j["seeds"] = words_json(report.seeds);
  ordered_json cells = ordered_json::array();
  for (const auto& c : report.cells) cells.push_back(cell_json(c));
  j["cells"] = cells;
  ordered_json merges = ordered_json::array();
  for (const auto& m : report.merges) merges.push_back(m);
  j["merges"] = merges;
  j["max_canonical_complexity"] = report.max_canonical_complexity;
  return dump(j);
}

std::string canplat_report(const CanPlatReport& report) {
  ordered_json j = cell_json(report.cell_of_beta);
  j["beta_global"] = format_word(report.beta_global);
  j["compatible"] = report.compatible;
  j["c_min_global"] = report.c_min_global;
  j["target"] = signature_json(report.target);
  j["candidate_count"] = report.candidate_count;
  j["global_min_set"] = words_json(report.global_min_set);
  j["candidates_move_closed"] = report.candidates_move_closed;
  return dump(j);
}

}  // namespace platorder
