#ifndef PLATORDER_LAURENT_HPP
#define PLATORDER_LAURENT_HPP

#include <cstdint>
#include <map>
#include <string>

namespace platorder {

// Laurent polynomial in A with exact integer coefficients; canonical form
// stores no zero coefficient.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly one() { return monomial(1, 0); }
  static LaurentPoly monomial(std::int64_t coeff, int exponent);

  bool is_zero() const { return c_.empty(); }
  std::int64_t coeff(int exponent) const;
  const std::map<int, std::int64_t>& terms() const { return c_; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  // "c1*A^e1 + c2*A^e2 + ..." with exponents descending; "0" when zero.
  std::string str() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  friend auto operator<=>(const LaurentPoly& a, const LaurentPoly& b) {
    return a.c_ <=> b.c_;
  }

 private:
  std::map<int, std::int64_t> c_;
};

// Closed-loop value of the bracket state sum: -A^2 - A^-2.
LaurentPoly loop_value();

}  // namespace platorder

#endif
