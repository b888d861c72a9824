#include "platorder/explorer.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "platorder/dehornoy.hpp"
#include "platorder/errors.hpp"
#include "platorder/garside.hpp"

namespace platorder {

bool CosetCell::contains_key(const std::string& key) const {
  auto it = std::lower_bound(members.begin(), members.end(), key,
                             [](const CellMember& m, const std::string& k) {
                               return m.key < k;
                             });
  return it != members.end() && it->key == key;
}

struct Explorer::Impl {
  int strands;
  Budget budget;
  Ball ball;
  std::vector<BraidWord> moves;  // generator words followed by their inverses
  // move graph, memoized on demand: the target entry id for g*x and x*g,
  // -1 when the product leaves the ball, -2 when not yet computed
  mutable std::vector<std::vector<int>> left_target;   // [move][entry]
  mutable std::vector<std::vector<int>> right_target;
  mutable std::vector<std::string> signature_keys;  // lazy, per entry

  Impl(int strands_, Budget budget_, std::size_t element_cap)
      : strands(strands_), budget(budget_) {
    require_even_strands(strands);
    ball = ball_enumerate(strands, budget.ball_radius, element_cap);
    for (const auto& g : hilden_generators(strands / 2)) moves.push_back(g.word);
    size_t base = moves.size();
    for (size_t i = 0; i < base; ++i) moves.push_back(inverse(moves[i]));
    left_target.assign(moves.size(), std::vector<int>(ball.entries.size(), -2));
    right_target.assign(moves.size(), std::vector<int>(ball.entries.size(), -2));
  }

  int lookup(const BraidWord& w) const {
    auto it = ball.index.find(normal_form(w).key());
    return it == ball.index.end() ? -1 : it->second;
  }

  int target(size_t move, int entry, bool left_side) const {
    int& slot = (left_side ? left_target : right_target)[move][static_cast<size_t>(entry)];
    if (slot == -2) {
      const BraidWord& witness = ball.entries[static_cast<size_t>(entry)].witness;
      slot = lookup(left_side ? concat(moves[move], witness)
                              : concat(witness, moves[move]));
    }
    return slot;
  }

  const std::string& signature_key(int entry) const {
    if (signature_keys.empty()) signature_keys.resize(ball.entries.size());
    std::string& slot = signature_keys[static_cast<size_t>(entry)];
    if (slot.empty())
      slot = plat_signature(ball.entries[static_cast<size_t>(entry)].witness).key();
    return slot;
  }

  int entry_complexity(int entry) const {
    const BallEntry& be = ball.entries[static_cast<size_t>(entry)];
    if (budget.complexity.kind == ComplexityFunction::GeodesicArtin) {
      // the ball distance is the exact geodesic length
      if (be.length > budget.complexity.radius_limit)
        throw not_found_error("member of geodesic length " +
                                  std::to_string(be.length) +
                                  " exceeds the complexity radius limit " +
                                  std::to_string(budget.complexity.radius_limit),
                              budget.complexity.radius_limit);
      return be.length;
    }
    return garside_complexity(be.element);
  }

  // Depth-bounded reachability: a state is (entry, left uses, right uses);
  // per entry only the Pareto frontier of (l, r) is kept.
  std::vector<int> reachable(int seed_entry) const {
    const int depth = budget.move_depth;
    std::vector<std::vector<std::pair<int, int>>> pareto(ball.entries.size());
    std::deque<std::tuple<int, int, int>> queue;

    auto visit = [&](int entry, int l, int r) {
      auto& front = pareto[static_cast<size_t>(entry)];
      for (const auto& [pl, pr] : front)
        if (pl <= l && pr <= r) return;
      std::erase_if(front, [&](const std::pair<int, int>& p) {
        return l <= p.first && r <= p.second;
      });
      front.emplace_back(l, r);
      queue.emplace_back(entry, l, r);
    };

    visit(seed_entry, 0, 0);
    while (!queue.empty()) {
      auto [entry, l, r] = queue.front();
      queue.pop_front();
      for (size_t m = 0; m < moves.size(); ++m) {
        if (l < depth) {
          int t = target(m, entry, true);
          if (t >= 0) visit(t, l + 1, r);
        }
        if (r < depth) {
          int t = target(m, entry, false);
          if (t >= 0) visit(t, l, r + 1);
        }
      }
    }

    std::vector<int> members;
    for (size_t e = 0; e < pareto.size(); ++e)
      if (!pareto[e].empty()) members.push_back(static_cast<int>(e));
    return members;
  }

  CosetCell cell_from_members(const BraidWord& seed, const std::string& seed_key,
                              const std::vector<int>& member_entries) const {
    CosetCell cell;
    cell.strands = strands;
    cell.budget = budget;
    cell.seed = seed;
    cell.nf_key = seed_key;
    cell.members.reserve(member_entries.size());
    for (int e : member_entries) {
      const BallEntry& be = ball.entries[static_cast<size_t>(e)];
      cell.members.push_back(
          {be.element.key(), be.witness, be.length, entry_complexity(e)});
    }
    std::sort(cell.members.begin(), cell.members.end(),
              [](const CellMember& a, const CellMember& b) { return a.key < b.key; });

    cell.c_min = cell.members.front().complexity;
    for (const auto& m : cell.members) cell.c_min = std::min(cell.c_min, m.complexity);
    for (const auto& m : cell.members)
      if (m.complexity == cell.c_min) cell.min_set.push_back(m.witness);
    cell.canonical = dehornoy_min(cell.min_set);
    cell.saturated_at_radius = true;
    for (const auto& m : cell.members)
      if (m.length == ball.radius) cell.saturated_at_radius = false;
    cell.signature = plat_signature(seed);
    return cell;
  }

  CosetCell explore(const BraidWord& seed) const {
    if (seed.strands != strands)
      throw usage_error("seed strand count " + std::to_string(seed.strands) +
                        " does not match explorer strand count " +
                        std::to_string(strands));
    std::string key = normal_form(seed).key();
    auto it = ball.index.find(key);
    if (it == ball.index.end())
      throw usage_error("seed '" + format_word(seed) +
                        "' lies outside the ball of radius " +
                        std::to_string(budget.ball_radius));
    return cell_from_members(seed, key, reachable(it->second));
  }
};

Explorer::Explorer(int strands, Budget budget, std::size_t element_cap)
    : impl_(std::make_unique<Impl>(strands, budget, element_cap)) {}
Explorer::~Explorer() = default;
Explorer::Explorer(Explorer&&) noexcept = default;
Explorer& Explorer::operator=(Explorer&&) noexcept = default;

const Ball& Explorer::ball() const { return impl_->ball; }
const Budget& Explorer::budget() const { return impl_->budget; }

CosetCell Explorer::explore(const BraidWord& seed) const { return impl_->explore(seed); }

std::vector<int> Explorer::candidates_with_signature(const PlatSignature& target) const {
  std::vector<int> out;
  const std::string key = target.key();
  for (size_t e = 0; e < impl_->ball.entries.size(); ++e)
    if (impl_->signature_key(static_cast<int>(e)) == key)
      out.push_back(static_cast<int>(e));
  return out;
}

std::vector<CosetCell> Explorer::signature_cells(const PlatSignature& target) const {
  std::vector<int> candidates = candidates_with_signature(target);
  std::vector<CosetCell> cells;
  std::unordered_set<std::string> covered;
  for (int e : candidates) {
    const std::string& key = impl_->ball.entries[static_cast<size_t>(e)].element.key();
    if (covered.count(key)) continue;
    CosetCell cell = impl_->explore(impl_->ball.entries[static_cast<size_t>(e)].witness);
    for (const auto& m : cell.members) covered.insert(m.key);
    cells.push_back(std::move(cell));
  }
  return cells;
}

OrderReport Explorer::order(const std::vector<BraidWord>& seeds) const {
  if (seeds.empty()) throw usage_error("order_classes needs at least one seed");
  OrderReport report;
  report.strands = impl_->strands;
  report.budget = impl_->budget;
  report.seeds = seeds;

  std::vector<CosetCell> cells;
  for (const auto& seed : seeds) {
    try {
      cells.push_back(impl_->explore(seed));
    } catch (const budget_error& e) {
      throw budget_error("seed '" + format_word(seed) + "': " + e.what(), e.used);
    }
  }

  // merge cells that share any member (a shared normal form means one coset)
  std::vector<size_t> group(cells.size());
  for (size_t i = 0; i < cells.size(); ++i) group[i] = i;
  for (size_t i = 0; i < cells.size(); ++i) {
    for (size_t j = i + 1; j < cells.size(); ++j) {
      if (group[j] == group[i]) continue;
      bool shares = std::any_of(cells[j].members.begin(), cells[j].members.end(),
                                [&](const CellMember& m) {
                                  return cells[i].contains_key(m.key);
                                });
      if (shares) {
        size_t from = group[j], to = group[i];
        for (auto& g : group)
          if (g == from) g = to;
      }
    }
  }

  for (size_t i = 0; i < cells.size(); ++i) {
    if (group[i] != i) continue;
    std::vector<size_t> bunch;
    for (size_t j = 0; j < cells.size(); ++j)
      if (group[j] == i) bunch.push_back(j);

    CosetCell merged = cells[i];
    if (bunch.size() > 1) {
      std::vector<std::string> seed_words;
      std::unordered_set<std::string> seen;
      std::vector<CellMember> all;
      for (size_t j : bunch) {
        seed_words.push_back(format_word(cells[j].seed));
        for (const auto& m : cells[j].members)
          if (seen.insert(m.key).second) all.push_back(m);
      }
      std::sort(all.begin(), all.end(),
                [](const CellMember& a, const CellMember& b) { return a.key < b.key; });
      merged.members = std::move(all);
      merged.c_min = merged.members.front().complexity;
      for (const auto& m : merged.members)
        merged.c_min = std::min(merged.c_min, m.complexity);
      merged.min_set.clear();
      for (const auto& m : merged.members)
        if (m.complexity == merged.c_min) merged.min_set.push_back(m.witness);
      merged.canonical = dehornoy_min(merged.min_set);
      merged.saturated_at_radius = true;
      for (const auto& m : merged.members)
        if (m.length == impl_->ball.radius) merged.saturated_at_radius = false;
      merged.merged_seeds = seed_words;
      report.merges.push_back(std::move(seed_words));
    }
    report.cells.push_back(std::move(merged));
  }

  std::sort(report.cells.begin(), report.cells.end(),
            [](const CosetCell& a, const CosetCell& b) {
              switch (dehornoy_compare(a.canonical, b.canonical)) {
                case OrderOutcome::Less: return true;
                case OrderOutcome::Greater: return false;
                case OrderOutcome::Equal:
                  throw integrity_error(
                      "distinct cells share a canonical representative");
              }
              return false;
            });

  report.max_canonical_complexity = 0;
  for (const auto& c : report.cells)
    report.max_canonical_complexity = std::max(report.max_canonical_complexity, c.c_min);
  return report;
}

CanPlatReport Explorer::canplat(const PlatSignature& target) const {
  CanPlatReport report;
  report.strands = impl_->strands;
  report.budget = impl_->budget;
  report.target = target;

  std::vector<int> candidates = candidates_with_signature(target);
  if (candidates.empty())
    throw not_found_error(
        "no braid with the target signature inside ball radius " +
            std::to_string(impl_->budget.ball_radius) +
            " (budget too small or signature unrealizable at this level)",
        impl_->budget.ball_radius);
  report.candidate_count = static_cast<int>(candidates.size());

  std::unordered_set<int> candidate_set(candidates.begin(), candidates.end());
  report.candidates_move_closed = true;
  for (int e : candidates) {
    for (size_t m = 0; m < impl_->moves.size() && report.candidates_move_closed; ++m) {
      int lt = impl_->target(m, e, true);
      int rt = impl_->target(m, e, false);
      if ((lt >= 0 && !candidate_set.count(lt)) || (rt >= 0 && !candidate_set.count(rt)))
        report.candidates_move_closed = false;
    }
  }

  int best = impl_->entry_complexity(candidates.front());
  for (int e : candidates) best = std::min(best, impl_->entry_complexity(e));
  report.c_min_global = best;

  std::vector<std::pair<std::string, BraidWord>> min_entries;
  for (int e : candidates)
    if (impl_->entry_complexity(e) == best)
      min_entries.emplace_back(impl_->ball.entries[static_cast<size_t>(e)].element.key(),
                               impl_->ball.entries[static_cast<size_t>(e)].witness);
  std::sort(min_entries.begin(), min_entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [key, word] : min_entries) report.global_min_set.push_back(word);

  report.beta_global = dehornoy_min(report.global_min_set);
  report.cell_of_beta = impl_->explore(report.beta_global);
  report.compatible =
      normal_form(report.beta_global).key() == normal_form(report.cell_of_beta.canonical).key();
  return report;
}

CosetCell explore_cell(const BraidWord& seed, const Budget& budget,
                       std::size_t element_cap) {
  return Explorer(seed.strands, budget, element_cap).explore(seed);
}

OrderReport order_classes(const std::vector<BraidWord>& seeds, const Budget& budget,
                          std::size_t element_cap) {
  if (seeds.empty()) throw usage_error("order_classes needs at least one seed");
  for (size_t i = 1; i < seeds.size(); ++i) require_same_strands(seeds[0], seeds[i]);
  return Explorer(seeds[0].strands, budget, element_cap).order(seeds);
}

CanPlatReport can_plat_search(const PlatSignature& target, int strands,
                              const Budget& budget, std::size_t element_cap) {
  return Explorer(strands, budget, element_cap).canplat(target);
}

}  // namespace platorder
