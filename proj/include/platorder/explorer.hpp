#ifndef PLATORDER_EXPLORER_HPP
#define PLATORDER_EXPLORER_HPP

#include <memory>
#include <string>
#include <vector>

#include "platorder/complexity.hpp"
#include "platorder/hilden.hpp"
#include "platorder/plat.hpp"

namespace platorder {

// Exploration budget. Explored cells are under-approximations of the true
// double cosets: connectivity may need detours through braids longer than
// the ball radius, so cells can only merge, never split, as budgets grow.
struct Budget {
  int ball_radius = 5;
  int move_depth = 4;  // max generator letters applied on each side
  ComplexityFunction complexity = ComplexityFunction::geodesic(8);
};

struct CellMember {
  std::string key;
  BraidWord witness;
  int length = 0;      // geodesic length from the ball
  int complexity = 0;  // under the budget's complexity function
};

// The budgeted, explored fragment of one double coset.
struct CosetCell {
  int strands = 2;
  Budget budget;
  BraidWord seed;
  std::string nf_key;                 // normal-form key of the seed
  std::vector<CellMember> members;    // sorted by key
  int c_min = 0;
  std::vector<BraidWord> min_set;     // members attaining c_min
  BraidWord canonical;                // order-least element of min_set
  bool saturated_at_radius = false;   // true when no member touches the boundary
  PlatSignature signature;
  std::vector<std::string> merged_seeds;  // nonempty only after a merge

  bool contains_key(const std::string& key) const;
};

struct OrderReport {
  int strands = 2;
  Budget budget;
  std::vector<BraidWord> seeds;
  std::vector<CosetCell> cells;                  // strictly ordered
  std::vector<std::vector<std::string>> merges;  // seed words that coincided
  int max_canonical_complexity = 0;              // boundedness diagnostic
};

struct CanPlatReport {
  int strands = 2;
  Budget budget;
  PlatSignature target;
  int candidate_count = 0;
  int c_min_global = 0;
  std::vector<BraidWord> global_min_set;
  BraidWord beta_global;
  bool candidates_move_closed = false;
  bool compatible = false;  // beta_global equals the cell canonical
  CosetCell cell_of_beta;
};

// Shared exploration state (ball, move graph, signature cache) so that
// multi-seed runs enumerate the ball once.
class Explorer {
 public:
  Explorer(int strands, Budget budget,
           std::size_t element_cap = kDefaultElementCap);
  ~Explorer();
  Explorer(Explorer&&) noexcept;
  Explorer& operator=(Explorer&&) noexcept;

  const Ball& ball() const;
  const Budget& budget() const;

  CosetCell explore(const BraidWord& seed) const;
  OrderReport order(const std::vector<BraidWord>& seeds) const;
  CanPlatReport canplat(const PlatSignature& target) const;

  // Ball entries whose plat signature equals the target, in ball order.
  std::vector<int> candidates_with_signature(const PlatSignature& target) const;

  // Partition of the target's candidates into explored cells, repeating
  // exploration from the first uncovered candidate.
  std::vector<CosetCell> signature_cells(const PlatSignature& target) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

CosetCell explore_cell(const BraidWord& seed, const Budget& budget,
                       std::size_t element_cap = kDefaultElementCap);
OrderReport order_classes(const std::vector<BraidWord>& seeds, const Budget& budget,
                          std::size_t element_cap = kDefaultElementCap);
CanPlatReport can_plat_search(const PlatSignature& target, int strands,
                              const Budget& budget,
                              std::size_t element_cap = kDefaultElementCap);

}  // namespace platorder

#endif
