#include "gdlim/bipoly.hpp"

#include <sstream>
#include <utility>

namespace gdlim {

BiPoly::BiPoly(std::vector<IntPolynomial> lambda_coeffs) : lc_(std::move(lambda_coeffs)) {
  normalize();
}

BiPoly BiPoly::from_x_poly(IntPolynomial p) {
  BiPoly b;
  if (!p.is_zero()) b.lc_.push_back(std::move(p));
  return b;
}

BiPoly BiPoly::lambda_monomial(IntPolynomial c, std::size_t power) {
  BiPoly b;
  if (!c.is_zero()) {
    b.lc_.assign(power + 1, IntPolynomial());
    b.lc_[power] = std::move(c);
  }
  return b;
}

IntPolynomial BiPoly::lambda_coeff(std::size_t j) const {
  if (j >= lc_.size()) return IntPolynomial();
  return lc_[j];
}

bool BiPoly::monic_in_lambda() const {
  return !lc_.empty() && lc_.back() == IntPolynomial::constant(1);
}

void BiPoly::normalize() {
  while (!lc_.empty() && lc_.back().is_zero()) lc_.pop_back();
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& c : r.lc_) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  if (lc_.size() < rhs.lc_.size()) lc_.resize(rhs.lc_.size());
  for (std::size_t j = 0; j < rhs.lc_.size(); ++j) lc_[j] += rhs.lc_[j];
  normalize();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  if (lc_.size() < rhs.lc_.size()) lc_.resize(rhs.lc_.size());
  for (std::size_t j = 0; j < rhs.lc_.size(); ++j) lc_[j] -= rhs.lc_[j];
  normalize();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return BiPoly();
  std::vector<IntPolynomial> out(a.lc_.size() + b.lc_.size() - 1);
  for (std::size_t i = 0; i < a.lc_.size(); ++i) {
    if (a.lc_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.lc_.size(); ++j) out[i + j] += a.lc_[i] * b.lc_[j];
  }
  return BiPoly(std::move(out));
}

Rational BiPoly::eval(const Rational& x, const Rational& lambda) const {
  Rational acc = 0;
  for (auto it = lc_.rbegin(); it != lc_.rend(); ++it) acc = acc * lambda + it->eval(x);
  return acc;
}

IntPolynomial BiPoly::at_x_one() const {
  std::vector<BigInt> coeffs(lc_.size());
  for (std::size_t j = 0; j < lc_.size(); ++j) coeffs[j] = lc_[j].eval_one();
  return IntPolynomial(std::move(coeffs));
}

BiPoly BiPoly::partial_x() const {
  std::vector<IntPolynomial> out(lc_.size());
  for (std::size_t j = 0; j < lc_.size(); ++j) out[j] = lc_[j].derivative();
  return BiPoly(std::move(out));
}

BiPoly BiPoly::partial_lambda() const {
  if (lc_.size() <= 1) return BiPoly();
  std::vector<IntPolynomial> out(lc_.size() - 1);
  for (std::size_t j = 1; j < lc_.size(); ++j)
    out[j - 1] = lc_[j] * IntPolynomial::constant(BigInt(j));
  return BiPoly(std::move(out));
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < lc_.size(); ++j) {
    if (lc_[j].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << lc_[j].to_string() << ")";
    if (j >= 1) {
      os << "L";
      if (j >= 2) os << "^" << j;
    }
  }
  return os.str();
}

BiPolyPartials bipoly_partials(const BiPoly& f) {
  BiPolyPartials p;
  p.f_x = f.partial_x();
  p.f_lambda = f.partial_lambda();
  p.f_xx = p.f_x.partial_x();
  p.f_xlambda = p.f_x.partial_lambda();
  p.f_lambdalambda = p.f_lambda.partial_lambda();
  return p;
}

}  // namespace gdlim
