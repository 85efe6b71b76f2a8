#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "gdlim/exact.hpp"

namespace gdlim {

// Dense univariate polynomial over BigInt. Coefficient i belongs to x^i.
// Invariant: the highest-index coefficient is nonzero unless the polynomial
// is zero, in which case the coefficient vector is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;  // zero polynomial
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial constant(BigInt c);
  static IntPolynomial monomial(BigInt c, std::size_t power);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(std::size_t i) const;

  bool nonnegative() const;  // every coefficient >= 0
  bool is_constant() const { return coeffs_.size() <= 1; }

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial& operator*=(const IntPolynomial& rhs) { return *this = *this * rhs; }
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  Rational eval(const Rational& x) const;  // exact Horner
  BigInt eval_int(const BigInt& x) const;
  BigInt eval_one() const;  // coefficient sum

  IntPolynomial derivative() const;
  IntPolynomial compose_square() const;  // p(x^2)

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

}  // namespace gdlim
