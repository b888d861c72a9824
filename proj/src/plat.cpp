#include "platorder/plat.hpp"

#include <algorithm>
#include <cstdlib>

#include "platorder/errors.hpp"

namespace platorder {

PlanarMatching PlanarMatching::caps(int points) {
  PlanarMatching m;
  m.arc.resize(points);
  for (int i = 0; i + 1 < points; i += 2) {
    m.arc[i] = i + 1;
    m.arc[i + 1] = i;
  }
  return m;
}

namespace {

void build_matchings(std::vector<int> points, std::vector<int>& arc,
                     std::vector<PlanarMatching>& out) {
  if (points.empty()) {
    PlanarMatching m;
    m.arc = arc;
    out.push_back(std::move(m));
    return;
  }
  int a = points.front();
  for (size_t j = 1; j < points.size(); j += 2) {
    int b = points[j];
    arc[a] = b;
    arc[b] = a;
    std::vector<int> inside(points.begin() + 1, points.begin() + static_cast<long>(j));
    std::vector<int> outside(points.begin() + static_cast<long>(j) + 1, points.end());
    if (inside.empty()) {
      build_matchings(outside, arc, out);
    } else {
      // connect nested region first, then the rest
      std::vector<PlanarMatching> partial;
      build_matchings(inside, arc, partial);
      for (auto& pm : partial) {
        arc = pm.arc;
        build_matchings(outside, arc, out);
      }
    }
  }
}

}  // namespace

std::vector<PlanarMatching> planar_matchings(int points) {
  if (points <= 0 || points % 2 != 0)
    throw usage_error("planar matchings need a positive even point count");
  std::vector<int> all(points);
  for (int i = 0; i < points; ++i) all[i] = i;
  std::vector<int> arc(points, -1);
  std::vector<PlanarMatching> out;
  build_matchings(all, arc, out);
  std::sort(out.begin(), out.end());
  return out;
}

int apply_cup_cap(PlanarMatching& m, int k) {
  int a = m.arc[k], b = m.arc[k + 1];
  if (a == k + 1) return 1;  // the cup closes the arc joining k, k+1
  m.arc[a] = b;
  m.arc[b] = a;
  m.arc[k] = k + 1;
  m.arc[k + 1] = k;
  return 0;
}

LaurentPoly kauffman_bracket_plat(const BraidWord& w) {
  require_even_strands(w.strands);
  const LaurentPoly delta = loop_value();
  const LaurentPoly a_pos = LaurentPoly::monomial(1, 1);
  const LaurentPoly a_neg = LaurentPoly::monomial(1, -1);

  std::map<PlanarMatching, LaurentPoly> states;
  states[PlanarMatching::caps(w.strands)] = LaurentPoly::one();

  for (int l : w.letters) {
    int k = std::abs(l) - 1;
    const LaurentPoly& straight = l > 0 ? a_pos : a_neg;
    const LaurentPoly& smoothed = l > 0 ? a_neg : a_pos;
    std::map<PlanarMatching, LaurentPoly> next;
    for (const auto& [m, coef] : states) {
      next[m] += coef * straight;
      PlanarMatching m2 = m;
      LaurentPoly c2 = coef * smoothed;
      if (apply_cup_cap(m2, k)) c2 = c2 * delta;
      next[m2] += c2;
    }
    states = std::move(next);
  }

  // close with the bottom caps; each resulting loop is one delta factor,
  // minus one for unknot normalization
  const PlanarMatching caps = PlanarMatching::caps(w.strands);
  LaurentPoly result;
  for (const auto& [m, coef] : states) {
    if (coef.is_zero()) continue;
    int loops = 0;
    std::vector<char> visited(m.arc.size(), 0);
    for (size_t start = 0; start < m.arc.size(); ++start) {
      if (visited[start]) continue;
      ++loops;
      size_t p = start;
      while (!visited[p]) {
        visited[p] = 1;
        size_t q = static_cast<size_t>(m.arc[p]);
        visited[q] = 1;
        p = static_cast<size_t>(caps.arc[q]);
      }
    }
    LaurentPoly term = coef;
    for (int i = 1; i < loops; ++i) term = term * delta;
    result += term;
  }
  return result;
}

namespace {

struct Trace {
  std::vector<int> component;  // per top start position
  std::vector<int> direction;  // +1 traversed downward, -1 upward
  int components = 0;
};

int cap_partner(int p) { return (p % 2 == 0) ? p + 1 : p - 1; }

Trace trace_components(const BraidWord& w) {
  require_even_strands(w.strands);
  const Permutation pi = permutation_of(w);
  const Permutation pi_inv = pi.inverse();
  int n = w.strands;
  Trace t;
  t.component.assign(n, -1);
  t.direction.assign(n, 0);
  for (int start = 0; start < n; ++start) {
    if (t.component[start] != -1) continue;
    int id = t.components++;
    int cur = start;
    do {
      t.component[cur] = id;
      t.direction[cur] = 1;  // downward
      int up = pi_inv.apply(cap_partner(pi.apply(cur)));
      t.component[up] = id;
      t.direction[up] = -1;
      cur = cap_partner(up);
    } while (cur != start);
  }
  return t;
}

}  // namespace

int component_count(const BraidWord& w) { return trace_components(w).components; }

long long WritheData::writhe(const std::vector<int>& signs) const {
  long long total = self_writhe;
  for (const auto& [pair, sum] : pair_writhe)
    total += static_cast<long long>(signs[pair.first]) * signs[pair.second] * sum;
  return total;
}

WritheData trace_writhe(const BraidWord& w) {
  Trace t = trace_components(w);
  WritheData data;
  data.components = t.components;

  // walk the word once, tracking which top strand sits at each position
  std::vector<int> at(w.strands);  // position -> top start of the strand there
  for (int p = 0; p < w.strands; ++p) at[p] = p;
  for (int l : w.letters) {
    int k = std::abs(l) - 1;
    int sa = at[k], sb = at[k + 1];
    int sign = (l > 0 ? 1 : -1) * t.direction[sa] * t.direction[sb];
    int ca = t.component[sa], cb = t.component[sb];
    if (ca == cb) {
      data.self_writhe += sign;
    } else {
      data.pair_writhe[{std::min(ca, cb), std::max(ca, cb)}] += sign;
    }
    std::swap(at[k], at[k + 1]);
  }
  return data;
}

std::string PlatSignature::key() const {
  std::string s = std::to_string(components);
  for (const auto& b : brackets) {
    s += ';';
    s += b.str();
  }
  return s;
}

PlatSignature plat_signature(const BraidWord& w) {
  LaurentPoly bracket = kauffman_bracket_plat(w);
  WritheData data = trace_writhe(w);
  int c = data.components;

  PlatSignature sig;
  sig.components = c;
  // orientation classes: component 0 fixed, global reversal collapsed
  for (unsigned mask = 0; mask < (1u << (c - 1)); ++mask) {
    std::vector<int> signs(c, 1);
    for (int k = 1; k < c; ++k)
      if (mask & (1u << (k - 1))) signs[k] = -1;
    long long writhe = data.writhe(signs);
    // (-A^3)^(-writhe)
    LaurentPoly norm = LaurentPoly::monomial((writhe % 2 == 0) ? 1 : -1,
                                             static_cast<int>(-3 * writhe));
    sig.brackets.push_back(norm * bracket);
  }
  std::sort(sig.brackets.begin(), sig.brackets.end());
  return sig;
}

bool tl_relations_hold(int points) {
  for (const PlanarMatching& state : planar_matchings(points)) {
    for (int i = 0; i + 1 < points; ++i) {
      PlanarMatching m = state;
      apply_cup_cap(m, i);
      PlanarMatching twice = m;
      if (apply_cup_cap(twice, i) != 1 || twice != m) return false;
      for (int j : {i - 1, i + 1}) {
        if (j < 0 || j + 1 >= points) continue;
        PlanarMatching roundtrip = m;
        int loops = apply_cup_cap(roundtrip, j);
        loops += apply_cup_cap(roundtrip, i);
        if (loops != 0 || roundtrip != m) return false;
      }
    }
  }
  return true;
}

}  // namespace platorder
