#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gdlim/polynomial.hpp"

namespace gdlim {

// Bivariate polynomial in (x, lambda), stored as lambda-power coefficients
// that are integer polynomials in x. Index j holds the coefficient of
// lambda^j. Normalized like IntPolynomial: no trailing zero coefficients.
class BiPoly {
 public:
  BiPoly() = default;  // zero
  explicit BiPoly(std::vector<IntPolynomial> lambda_coeffs);

  static BiPoly from_x_poly(IntPolynomial p);  // p(x) as a lambda-constant
  static BiPoly lambda_monomial(IntPolynomial c, std::size_t power);

  bool is_zero() const { return lc_.empty(); }
  int degree_lambda() const { return static_cast<int>(lc_.size()) - 1; }
  const std::vector<IntPolynomial>& lambda_coeffs() const { return lc_; }
  IntPolynomial lambda_coeff(std::size_t j) const;
  bool monic_in_lambda() const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

  Rational eval(const Rational& x, const Rational& lambda) const;
  // Specialize x := 1; the result is univariate in lambda, reusing
  // IntPolynomial with lambda as the variable.
  IntPolynomial at_x_one() const;

  BiPoly partial_x() const;
  BiPoly partial_lambda() const;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<IntPolynomial> lc_;
};

struct BiPolyPartials {
  BiPoly f_x;
  BiPoly f_lambda;
  BiPoly f_xx;
  BiPoly f_xlambda;
  BiPoly f_lambdalambda;
};

// All formal partial derivatives of F up to second order.
BiPolyPartials bipoly_partials(const BiPoly& f);

}  // namespace gdlim
