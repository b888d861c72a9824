#include "platorder/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace platorder {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw usage_error("not a permutation");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.img_.resize(n);
  std::iota(p.img_.begin(), p.img_.end(), 0);
  return p;
}

Permutation Permutation::transposition(int n, int k) {
  Permutation p = identity(n);
  std::swap(p.img_[k], p.img_[k + 1]);
  return p;
}

Permutation Permutation::then(const Permutation& q) const {
  Permutation r;
  r.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) r.img_[i] = q.img_[img_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<int>(i);
  return r;
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

int Permutation::inversion_count() const {
  int n = degree(), count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (img_[i] > img_[j]) ++count;
  return count;
}

std::string Permutation::one_line() const {
  std::string s;
  for (size_t i = 0; i < img_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(img_[i] + 1);
  }
  return s;
}

BraidWord::BraidWord(int strands_) : strands(strands_) { require_strands(strands); }

BraidWord::BraidWord(int strands_, std::vector<int> letters_)
    : strands(strands_), letters(std::move(letters_)) {
  require_strands(strands);
  for (int l : letters) {
    int i = std::abs(l);
    if (i == 0 || i >= strands)
      throw usage_error("letter " + std::to_string(l) + " out of range for " +
                        std::to_string(strands) + " strands");
  }
}

void require_strands(int strands) {
  if (strands < 2) throw usage_error("strand count must be at least 2");
}

void require_even_strands(int strands) {
  require_strands(strands);
  if (strands % 2 != 0)
    throw usage_error("plat operations need an even strand count, got " +
                      std::to_string(strands));
}

void require_same_strands(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands)
    throw usage_error("strand counts differ: " + std::to_string(a.strands) +
                      " vs " + std::to_string(b.strands));
}

BraidWord parse_word(std::string_view text, int strands) {
  require_strands(strands);
  std::vector<int> letters;
  size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view tok = text.substr(pos, end - pos);
    int value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size())
      throw usage_error("malformed letter token '" + std::string(tok) + "'");
    int idx = std::abs(value);
    if (idx == 0 || idx >= strands)
      throw usage_error("letter token '" + std::string(tok) + "' out of range for " +
                        std::to_string(strands) + " strands");
    letters.push_back(value);
    pos = end;
  }
  return BraidWord(strands, std::move(letters));
}

std::string format_word(const BraidWord& w) {
  std::string s;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w.letters[i]);
  }
  return s;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  require_same_strands(a, b);
  BraidWord r(a.strands);
  r.letters = a.letters;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

BraidWord inverse(const BraidWord& w) {
  BraidWord r(w.strands);
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back(-*it);
  return r;
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> stack;
  stack.reserve(w.letters.size());
  for (int l : w.letters) {
    if (!stack.empty() && stack.back() == -l)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return BraidWord(w.strands, std::move(stack));
}

Permutation permutation_of(const BraidWord& w) {
  Permutation p = Permutation::identity(w.strands);
  std::vector<int> img(p.images());
  for (int l : w.letters) {
    int k = std::abs(l) - 1;
    // applying sigma_k swaps the strands currently at positions k, k+1;
    // tracking images position-wise this is a swap of the two preimages
    for (int& v : img) {
      if (v == k) v = k + 1;
      else if (v == k + 1) v = k;
    }
  }
  return Permutation(std::move(img));
}

}  // namespace platorder
