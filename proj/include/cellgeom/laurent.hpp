#pragma once

// Laurent polynomials in one variable v with integer coefficients.

#include <string>
#include <utility>
#include <vector>

#include "cellgeom/numeric.hpp"

namespace cellgeom {

/// Element of Z[v, v^-1]. Terms are kept sorted by increasing exponent and
/// never store a zero coefficient, so equality is structural.
class LaurentPoly {
 public:
  using Term = std::pair<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: integers embed as constants
  LaurentPoly(const Integer& c);  // NOLINT

  /// c * v^exponent
  static LaurentPoly monomial(int exponent, const Integer& c = 1);
  /// Builds from arbitrary (exponent, coefficient) pairs; duplicates are summed.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(int exponent) const;
  int max_degree() const;  // requires !is_zero()
  int min_degree() const;  // requires !is_zero()

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  /// *this += c * v^shift * o, without temporaries.
  void add_scaled(const LaurentPoly& o, const Integer& c, int shift = 0);
  LaurentPoly shifted(int k) const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;
  /// Total order on polynomials, only for use as a sort key.
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

  /// "v^2 + 2 + v^-2": decreasing exponents, "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

/// v -> v^-1.
LaurentPoly bar(const LaurentPoly& p);
bool is_selfdual(const LaurentPoly& p);
bool is_nonneg(const LaurentPoly& p);
bool is_selfdual_nonneg(const LaurentPoly& p);

/// The variable v.
inline LaurentPoly v_pow(int k) { return LaurentPoly::monomial(k); }

}  // namespace cellgeom
