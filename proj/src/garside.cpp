#include "platorder/garside.hpp"

#include <algorithm>
#include <cstdlib>

namespace platorder {

std::string BraidElement::key() const {
  std::string s = std::to_string(inf);
  for (const auto& f : factors) {
    s += '|';
    s += f.one_line();
  }
  return s;
}

Permutation half_twist(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = n - 1 - i;
  return Permutation(std::move(img));
}

Permutation tau_conjugate(const Permutation& p) {
  // w0 * p * w0 on images: tau(p)(i) = n-1 - p(n-1-i)
  int n = p.degree();
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = n - 1 - p.apply(n - 1 - i);
  return Permutation(std::move(img));
}

bool divides_simple(const Permutation& t, const Permutation& s) {
  int n = t.degree();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (t.inverts(i, j) && !s.inverts(i, j)) return false;
  return true;
}

Permutation left_meet(const Permutation& a, const Permutation& b) {
  // Greedy common-prefix descent: sigma_{k+1} divides a simple exactly at a
  // descent, and stripping a common generator prefix preserves the meet.
  int n = a.degree();
  std::vector<int> ra(a.images()), rb(b.images());
  std::vector<int> prefix(Permutation::identity(n).images());
  bool found = true;
  while (found) {
    found = false;
    for (int k = 0; k + 1 < n; ++k) {
      if (ra[k] > ra[k + 1] && rb[k] > rb[k + 1]) {
        std::swap(ra[k], ra[k + 1]);
        std::swap(rb[k], rb[k + 1]);
        // prefix := prefix * sigma_{k+1}; as images this swaps the
        // preimages of k and k+1
        for (int& v : prefix) {
          if (v == k) v = k + 1;
          else if (v == k + 1) v = k;
        }
        found = true;
      }
    }
  }
  return Permutation(std::move(prefix));
}

Permutation right_complement(const Permutation& a) {
  return a.inverse().then(half_twist(a.degree()));
}

bool left_weighted(const Permutation& a, const Permutation& b) {
  return left_meet(right_complement(a), b).is_identity();
}

BraidWord simple_word(int strands, const Permutation& p) {
  std::vector<int> img(p.images());
  std::vector<int> letters;
  letters.reserve(p.inversion_count());
  int n = p.degree();
  bool descent = true;
  while (descent) {
    descent = false;
    for (int k = 0; k + 1 < n; ++k) {
      if (img[k] > img[k + 1]) {
        letters.push_back(k + 1);
        std::swap(img[k], img[k + 1]);
        descent = true;
        break;
      }
    }
  }
  return BraidWord(strands, std::move(letters));
}

namespace {

// Strip t from the front of b (t must divide b): t^-1 * b.
Permutation strip_prefix(const Permutation& t, const Permutation& b) {
  return t.inverse().then(b);
}

// Absorb any delta factors into inf (conjugating everything to their left)
// and drop identity factors.
void absorb(std::vector<Permutation>& fac, int& inf, const Permutation& delta) {
  for (size_t j = 0; j < fac.size();) {
    if (fac[j].is_identity()) {
      fac.erase(fac.begin() + static_cast<long>(j));
    } else if (fac[j] == delta) {
      for (size_t k = 0; k < j; ++k) fac[k] = tau_conjugate(fac[k]);
      fac.erase(fac.begin() + static_cast<long>(j));
      ++inf;
      j = 0;
    } else {
      ++j;
    }
  }
}

}  // namespace

BraidElement normal_form(const BraidWord& w) {
  int n = w.strands;
  const Permutation delta = half_twist(n);
  int inf = 0;
  std::vector<Permutation> fac;
  fac.reserve(w.letters.size());

  for (int l : w.letters) {
    int k = std::abs(l) - 1;
    if (l > 0) {
      fac.push_back(Permutation::transposition(n, k));
    } else {
      // sigma^-1 = delta^-1 * (delta sigma^-1); the delta^-1 slides left
      // past every staged factor by tau-conjugation
      for (auto& f : fac) f = tau_conjugate(f);
      --inf;
      Permutation s = delta.then(Permutation::transposition(n, k));
      if (!s.is_identity()) fac.push_back(s);  // identity exactly when n == 2
    }
  }

  absorb(fac, inf, delta);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t j = 0; j + 1 < fac.size(); ++j) {
      Permutation t = left_meet(right_complement(fac[j]), fac[j + 1]);
      if (t.is_identity()) continue;
      fac[j] = fac[j].then(t);
      fac[j + 1] = strip_prefix(t, fac[j + 1]);
      changed = true;
    }
    if (changed) absorb(fac, inf, delta);
  }

  BraidElement e;
  e.strands = n;
  e.inf = inf;
  e.factors = std::move(fac);
  return e;
}

BraidWord word_of(const BraidElement& e) {
  const Permutation delta = half_twist(e.strands);
  BraidWord dw = simple_word(e.strands, delta);
  BraidWord r(e.strands);
  if (e.inf >= 0) {
    for (int i = 0; i < e.inf; ++i) r = concat(r, dw);
  } else {
    BraidWord dinv = inverse(dw);
    for (int i = 0; i < -e.inf; ++i) r = concat(r, dinv);
  }
  for (const auto& f : e.factors) r = concat(r, simple_word(e.strands, f));
  return r;
}

std::pair<int, int> inf_sup(const BraidElement& e) { return {e.inf, e.sup()}; }

bool word_problem_equal(const BraidWord& u, const BraidWord& v) {
  require_same_strands(u, v);
  return normal_form(u) == normal_form(v);
}

}  // namespace platorder
