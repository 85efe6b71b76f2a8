#include "gdlim/production.hpp"

#include <sstream>
#include <utility>

#include "gdlim/errors.hpp"
#include "gdlim/spectral.hpp"

namespace gdlim {

std::string to_string(DistKind kind) {
  return kind == DistKind::Genus ? "genus" : "euler";
}

ProductionMatrix::ProductionMatrix(std::size_t k, std::vector<IntPolynomial> entries) {
  if (k < 1) throw ParseError("production matrix must have dimension k >= 1");
  if (entries.size() != k * k) {
    std::ostringstream os;
    os << "production matrix expects " << k * k << " entries, got " << entries.size();
    throw ParseError(os.str());
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (!entries[i * k + j].nonnegative()) {
        std::ostringstream os;
        os << "production matrix entry (" << i << "," << j
           << ") has a negative coefficient: " << entries[i * k + j].to_string();
        throw NegativeEntry(os.str());
      }
  m_.k = k;
  m_.entries = std::move(entries);
}

std::vector<BigInt> ProductionMatrix::at_one() const {
  std::vector<BigInt> out(m_.k * m_.k);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = m_.entries[i].eval_one();
  return out;
}

FamilySpec FamilySpec::make(ProductionMatrix m, std::vector<IntPolynomial> initial,
                            std::vector<IntPolynomial> spider, DistKind kind, std::string name) {
  const std::size_t k = m.dim();
  if (spider.empty()) spider.assign(k, IntPolynomial::constant(1));
  if (initial.size() != k) {
    std::ostringstream os;
    os << "initial vector has " << initial.size() << " entries, expected k = " << k;
    throw ParseError(os.str());
  }
  if (spider.size() != k) {
    std::ostringstream os;
    os << "spider vector has " << spider.size() << " entries, expected k = " << k;
    throw ParseError(os.str());
  }
  bool any_nonzero = false;
  for (const auto& p : initial) {
    if (!p.nonnegative()) throw ParseError("initial vector entries must have nonnegative coefficients");
    any_nonzero = any_nonzero || !p.is_zero();
  }
  if (!any_nonzero) throw ParseError("initial vector must have at least one nonzero entry");
  return FamilySpec{std::move(m), std::move(initial), std::move(spider), kind, std::move(name)};
}

RecurrenceSpec RecurrenceSpec::make(std::vector<IntPolynomial> coefficients,
                                    std::vector<IntPolynomial> seeds, DistKind kind,
                                    std::string name) {
  if (coefficients.empty()) throw ParseError("recurrence needs at least one coefficient");
  if (coefficients.back().is_zero())
    throw ParseError("recurrence coefficient b_k is identically zero; the order is not genuine");
  if (seeds.size() != coefficients.size()) {
    std::ostringstream os;
    os << "recurrence of order " << coefficients.size() << " needs exactly that many seeds, got "
       << seeds.size();
    throw ParseError(os.str());
  }
  return RecurrenceSpec{std::move(coefficients), std::move(seeds), kind, std::move(name)};
}

std::vector<IntPolynomial> evolve_vector(const FamilySpec& spec, long n) {
  if (n < 1) throw Error(ExitCode::Other, "evolve_vector requires n >= 1");
  const std::size_t k = spec.matrix.dim();
  std::vector<IntPolynomial> v = spec.initial_vector;
  std::vector<IntPolynomial> next(k);
  // Repeated matrix-vector products keep intermediate degrees minimal.
  for (long step = 1; step < n; ++step) {
    for (std::size_t i = 0; i < k; ++i) {
      IntPolynomial acc;
      for (std::size_t j = 0; j < k; ++j) acc += spec.matrix.at(i, j) * v[j];
      next[i] = std::move(acc);
    }
    v.swap(next);
  }
  return v;
}

IntPolynomial total_polynomial(const FamilySpec& spec, long n) {
  std::vector<IntPolynomial> v = evolve_vector(spec, n);
  IntPolynomial acc;
  for (std::size_t i = 0; i < v.size(); ++i) acc += spec.spider_vector[i] * v[i];
  return acc;
}

IntPolynomial evolve_recurrence(const RecurrenceSpec& spec, long n) {
  if (n < 1) throw Error(ExitCode::Other, "evolve_recurrence requires n >= 1");
  const std::size_t k = spec.order();
  if (n <= static_cast<long>(k)) return spec.seeds[n - 1];
  std::vector<IntPolynomial> window = spec.seeds;  // window[j] = P_{n-k+j}
  for (long m = k + 1; m <= n; ++m) {
    IntPolynomial next;
    for (std::size_t j = 0; j < k; ++j) next += spec.coefficients[j] * window[k - 1 - j];
    window.erase(window.begin());
    window.push_back(std::move(next));
  }
  return window.back();
}

RecurrenceSpec recurrence_from_matrix(const FamilySpec& spec) {
  const std::size_t k = spec.matrix.dim();
  BiPoly f = characteristic_bipoly(spec.matrix.poly_matrix());
  // F = lambda^k - b_1 lambda^(k-1) - ... - b_k, so b_j = -coeff(lambda^(k-j)).
  std::vector<IntPolynomial> coeffs(k);
  for (std::size_t j = 1; j <= k; ++j) coeffs[j - 1] = -f.lambda_coeff(k - j);

  std::size_t order = k;
  while (order > 1 && coeffs[order - 1].is_zero()) --order;
  coeffs.resize(order);
  if (coeffs.back().is_zero())
    throw Error(ExitCode::Other,
                "characteristic polynomial of " + spec.name + " is a pure power of lambda");

  std::vector<IntPolynomial> seeds(order);
  for (std::size_t n = 1; n <= order; ++n) seeds[n - 1] = total_polynomial(spec, n);
  RecurrenceSpec rec = RecurrenceSpec::make(std::move(coeffs), std::move(seeds), spec.kind, spec.name);

  // Trimming a zero b_k is only sound when the totals still obey the shorter
  // recurrence; verify the first few steps against the matrix engine.
  if (order < k) {
    for (long n = order + 1; n <= static_cast<long>(k) + 2; ++n) {
      if (evolve_recurrence(rec, n) != total_polynomial(spec, n))
        throw Error(ExitCode::Other,
                    "trimmed recurrence for " + spec.name + " does not reproduce matrix totals");
    }
  }
  return rec;
}

ProductionMatrix pathlike_matrix(const IntPolynomial& d_part, const IntPolynomial& s_part) {
  if (s_part.is_zero())
    throw ParseError("path-like family requires S(x) != 0; a connected graph always has S > 0");
  std::vector<IntPolynomial> entries(4);
  entries[0] = d_part + s_part;
  entries[1] = d_part;
  entries[2] = IntPolynomial();
  entries[3] = s_part;
  return ProductionMatrix(2, std::move(entries));
}

ProductionMatrix ladderlike_matrix(const IntPolynomial& p, const IntPolynomial& q) {
  if (q.is_zero()) throw ParseError("ladder-like family requires q(x) != 0");
  const IntPolynomial x2 = IntPolynomial::monomial(2, 1);
  const IntPolynomial x4 = IntPolynomial::monomial(4, 1);
  const IntPolynomial c2 = IntPolynomial::constant(2);
  const IntPolynomial c4 = IntPolynomial::constant(4);
  std::vector<IntPolynomial> entries(9);
  entries[0] = p * x4;
  entries[1] = p * x2;
  entries[4] = q * c2;
  entries[5] = q * c4;
  entries[6] = q * x4;
  entries[7] = p * x2 + q * x2;
  entries[8] = p * x4;
  return ProductionMatrix(3, std::move(entries));
}

}  // namespace gdlim
