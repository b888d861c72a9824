#ifndef PLATORDER_DEHORNOY_HPP
#define PLATORDER_DEHORNOY_HPP

#include <vector>

#include "platorder/braid.hpp"

namespace platorder {

// Convention fixed project-wide: a word is sigma-positive when its LOWEST
// occurring generator index appears only with positive sign. Reports name
// this convention as "sigma-positive-lowest".
constexpr const char* kOrderConvention = "sigma-positive-lowest";

constexpr long kDefaultStepBudget = 1'000'000;

struct SigmaClass {
  enum Tag { Trivial, Positive, Negative } tag = Trivial;
  int main_index = 0;  // lowest occurring generator index, 1-based
};

enum class OrderOutcome { Less, Equal, Greater };

// A handle is a subword sigma_i^e v sigma_i^-e whose interior v has only
// letters of index > i. Handle-free plus freely reduced means the lowest
// index occurs with a single sign, so the word is classifiable.
bool is_handle_free(const BraidWord& w);

// Eliminates every handle; the result is freely reduced, handle-free and
// represents the same group element. The step budget is a safety valve
// (reduction terminates in theory).
BraidWord handle_reduce(const BraidWord& w, long step_budget = kDefaultStepBudget);

// Precondition: w freely reduced and handle-free (contract violation otherwise).
SigmaClass sigma_classify(const BraidWord& w);

// Less iff a^-1 b is sigma-positive; Equal decided by the Garside engine.
OrderOutcome dehornoy_compare(const BraidWord& a, const BraidWord& b,
                              long step_budget = kDefaultStepBudget);

// The unique order-least member; ties between words spelling the same
// element resolve to the shorter, then lexicographically smaller word.
BraidWord dehornoy_min(const std::vector<BraidWord>& ws,
                       long step_budget = kDefaultStepBudget);

}  // namespace platorder

#endif
