#ifndef PLATORDER_BRAID_HPP
#define PLATORDER_BRAID_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "platorder/errors.hpp"

namespace platorder {

// Permutation of {1..n}, stored 0-based: img_[i] is the image of position i.
// Composition convention: (p.then(q))(i) = q(p(i)), i.e. p acts first.
// Braid words act left-to-right on strand positions, so
// perm(uv) = perm(u).then(perm(v)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // validates bijectivity
  static Permutation identity(int n);
  static Permutation transposition(int n, int k);  // swaps 0-based k, k+1

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int i) const { return img_[i]; }  // 0-based
  const std::vector<int>& images() const { return img_; }

  Permutation then(const Permutation& q) const;
  Permutation inverse() const;
  bool is_identity() const;

  // Pairs (i,j), i<j, with img[i] > img[j]; the strands starting at i and j
  // cross in the positive braid this permutation names.
  int inversion_count() const;
  bool inverts(int i, int j) const { return img_[i] > img_[j]; }

  // One-line image notation, 1-based: "2 1 3 4".
  std::string one_line() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.img_ <=> b.img_;
  }

 private:
  std::vector<int> img_;
};

// A braid word: signed Artin generator letters at a fixed strand count.
// Letter i > 0 encodes the positive crossing of strands i, i+1 (1-based);
// letter -i its inverse. The empty word is the identity.
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;

  BraidWord() = default;
  explicit BraidWord(int strands_);                           // identity word
  BraidWord(int strands_, std::vector<int> letters_);         // validates

  bool is_identity_word() const { return letters.empty(); }
  int length() const { return static_cast<int>(letters.size()); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

void require_strands(int strands);                 // >= 2
void require_even_strands(int strands);            // plat operations
void require_same_strands(const BraidWord& a, const BraidWord& b);

// Whitespace-separated signed integers; names the offending token on error.
BraidWord parse_word(std::string_view text, int strands);
std::string format_word(const BraidWord& w);

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& w);

// Removes all adjacent cancelling pairs; same group element.
BraidWord free_reduce(const BraidWord& w);

Permutation permutation_of(const BraidWord& w);

}  // namespace platorder

#endif
