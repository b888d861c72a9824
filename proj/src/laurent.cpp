#include "platorder/laurent.hpp"

namespace platorder {

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.c_[exponent] = coeff;
  return p;
}

std::int64_t LaurentPoly::coeff(int exponent) const {
  auto it = c_.find(exponent);
  return it == c_.end() ? 0 : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) {
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_[e] = c;
    } else if ((it->second += c) == 0) {
      c_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) {
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_[e] = -c;
    } else if ((it->second -= c) == 0) {
      c_.erase(it);
    }
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.c_)
      r += LaurentPoly::monomial(ca * cb, ea + eb);
  return r;
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += std::to_string(it->second);
    s += "*A^";
    s += std::to_string(it->first);
  }
  return s;
}

LaurentPoly loop_value() {
  LaurentPoly d;
  d += LaurentPoly::monomial(-1, 2);
  d += LaurentPoly::monomial(-1, -2);
  return d;
}

}  // namespace platorder
