#include "platorder/dehornoy.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

#include "platorder/errors.hpp"
#include "platorder/garside.hpp"

namespace platorder {

namespace {

struct Handle {
  int start = 0;  // position of the opening letter
  int end = 0;    // position of the closing letter
  int index = 0;  // generator index, 1-based
};

// The handle closing at position t, if any: scan back to the first letter
// of index <= i; it must be the matching opposite-sign occurrence.
std::optional<Handle> handle_closing_at(const std::vector<int>& w, int t) {
  int i = std::abs(w[t]);
  for (int s = t - 1; s >= 0; --s) {
    int j = std::abs(w[s]);
    if (j > i) continue;
    if (j == i && w[s] == -w[t]) return Handle{s, t, i};
    return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Handle> first_handle(const std::vector<int>& w, int from, int to) {
  for (int t = from + 1; t < to; ++t)
    if (auto h = handle_closing_at(w, t)) return h;
  return std::nullopt;
}

// Reduction is only safe on handles whose interior contains no handle of
// its own (in particular none at index i+1); such a handle always exists.
// Among those, pick the lowest main index, then the leftmost start.
std::optional<Handle> pick_handle(const std::vector<int>& w) {
  std::optional<Handle> best;
  for (int t = 1; t < static_cast<int>(w.size()); ++t) {
    auto h = handle_closing_at(w, t);
    if (!h) continue;
    if (first_handle(w, h->start, h->end)) continue;  // not prime
    if (!best || h->index < best->index ||
        (h->index == best->index && h->start < best->start))
      best = h;
  }
  return best;
}

std::vector<int> free_reduce_letters(std::vector<int> in) {
  std::vector<int> out;
  out.reserve(in.size());
  for (int l : in) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

}  // namespace

bool is_handle_free(const BraidWord& w) {
  return !first_handle(w.letters, -1, static_cast<int>(w.letters.size()));
}

BraidWord handle_reduce(const BraidWord& w, long step_budget) {
  std::vector<int> cur = free_reduce_letters(w.letters);
  long steps = 0;
  while (auto h = pick_handle(cur)) {
    if (++steps > step_budget)
      throw budget_error("handle reduction exceeded step budget of " +
                             std::to_string(step_budget),
                         steps);
    int i = h->index;
    int e = cur[h->start] > 0 ? 1 : -1;
    std::vector<int> next;
    next.reserve(cur.size() + 16);
    next.insert(next.end(), cur.begin(), cur.begin() + h->start);
    for (int p = h->start + 1; p < h->end; ++p) {
      int l = cur[p];
      if (std::abs(l) == i + 1) {
        next.push_back(-e * (i + 1));
        next.push_back(l > 0 ? i : -i);
        next.push_back(e * (i + 1));
      } else {
        next.push_back(l);
      }
    }
    next.insert(next.end(), cur.begin() + h->end + 1, cur.end());
    cur = free_reduce_letters(std::move(next));
  }
  return BraidWord(w.strands, std::move(cur));
}

SigmaClass sigma_classify(const BraidWord& w) {
  if (w.letters.empty()) return {SigmaClass::Trivial, 0};
  int lowest = w.strands;
  for (int l : w.letters) lowest = std::min(lowest, std::abs(l));
  bool pos = false, neg = false;
  for (int l : w.letters) {
    if (std::abs(l) != lowest) continue;
    (l > 0 ? pos : neg) = true;
  }
  if (pos && neg)
    throw integrity_error("sigma_classify called on a word with a handle at index " +
                          std::to_string(lowest));
  return {pos ? SigmaClass::Positive : SigmaClass::Negative, lowest};
}

OrderOutcome dehornoy_compare(const BraidWord& a, const BraidWord& b,
                              long step_budget) {
  require_same_strands(a, b);
  // Equality goes through the Garside engine rather than through reduction
  // to the empty word.
  if (word_problem_equal(a, b)) return OrderOutcome::Equal;
  BraidWord quotient = handle_reduce(concat(inverse(a), b), step_budget);
  SigmaClass c = sigma_classify(quotient);
  if (c.tag == SigmaClass::Trivial)
    throw integrity_error("order quotient reduced to the empty word although "
                          "the Garside engine saw distinct elements");
  return c.tag == SigmaClass::Positive ? OrderOutcome::Less : OrderOutcome::Greater;
}

BraidWord dehornoy_min(const std::vector<BraidWord>& ws, long step_budget) {
  if (ws.empty()) throw usage_error("dehornoy_min needs a nonempty set");
  const BraidWord* best = &ws.front();
  for (size_t i = 1; i < ws.size(); ++i) {
    switch (dehornoy_compare(ws[i], *best, step_budget)) {
      case OrderOutcome::Less:
        best = &ws[i];
        break;
      case OrderOutcome::Equal:
        if (ws[i].letters.size() < best->letters.size() ||
            (ws[i].letters.size() == best->letters.size() &&
             ws[i].letters < best->letters))
          best = &ws[i];
        break;
      case OrderOutcome::Greater:
        break;
    }
  }
  return *best;
}

}  // namespace platorder
