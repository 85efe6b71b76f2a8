#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gdlim/polynomial.hpp"

namespace gdlim {

enum class DistKind { Genus, EulerGenus };

std::string to_string(DistKind kind);

// Plain square grid of polynomials, row-major. No sign constraints; used for
// characteristic-polynomial work on arbitrary matrices (e.g. companion forms).
struct PolyMatrix {
  std::size_t k = 0;
  std::vector<IntPolynomial> entries;  // k*k, entry(i,j) = entries[i*k+j]

  const IntPolynomial& at(std::size_t i, std::size_t j) const { return entries[i * k + j]; }
  IntPolynomial& at(std::size_t i, std::size_t j) { return entries[i * k + j]; }
};

// Production matrix M(x): entries count embeddings, so every coefficient of
// every entry must be nonnegative. Construction validates shape and signs.
class ProductionMatrix {
 public:
  ProductionMatrix(std::size_t k, std::vector<IntPolynomial> entries);

  std::size_t dim() const { return m_.k; }
  const IntPolynomial& at(std::size_t i, std::size_t j) const { return m_.at(i, j); }
  const PolyMatrix& poly_matrix() const { return m_; }

  // Entrywise evaluation at x = 1.
  std::vector<BigInt> at_one() const;

  friend bool operator==(const ProductionMatrix& a, const ProductionMatrix& b) {
    return a.m_.k == b.m_.k && a.m_.entries == b.m_.entries;
  }

 private:
  PolyMatrix m_;
};

// A linear graph family presented by its production matrix: the partial
// vector of G_n is M(x)^(n-1) applied to the initial vector, and the total
// polynomial is the spider row vector dotted with the partial vector.
struct FamilySpec {
  ProductionMatrix matrix;
  std::vector<IntPolynomial> initial_vector;
  std::vector<IntPolynomial> spider_vector;  // defaults to all ones
  DistKind kind = DistKind::Genus;
  std::string name;

  static FamilySpec make(ProductionMatrix m, std::vector<IntPolynomial> initial,
                         std::vector<IntPolynomial> spider, DistKind kind, std::string name);
};

// A family presented directly by a k-th order linear recurrence
// P_n = b_1(x) P_{n-1} + ... + b_k(x) P_{n-k} with k seed polynomials.
struct RecurrenceSpec {
  std::vector<IntPolynomial> coefficients;  // b_1 .. b_k
  std::vector<IntPolynomial> seeds;         // P_1 .. P_k
  DistKind kind = DistKind::Genus;
  std::string name;

  std::size_t order() const { return coefficients.size(); }
  static RecurrenceSpec make(std::vector<IntPolynomial> coefficients,
                             std::vector<IntPolynomial> seeds, DistKind kind, std::string name);
};

// Partial vector of G_n, n >= 1; n = 1 returns the initial vector.
std::vector<IntPolynomial> evolve_vector(const FamilySpec& spec, long n);

// Spider vector dotted with evolve_vector(spec, n).
IntPolynomial total_polynomial(const FamilySpec& spec, long n);

// P_n by direct recursion from the seeds; n <= k returns the seed.
IntPolynomial evolve_recurrence(const RecurrenceSpec& spec, long n);

// Reads the recurrence off the characteristic polynomial of the production
// matrix (Cayley-Hamilton) and seeds it with total_polynomial for n = 1..k.
// Trailing identically-zero coefficients are trimmed to keep the order
// genuine; the trimmed recurrence is checked against the matrix totals.
RecurrenceSpec recurrence_from_matrix(const FamilySpec& spec);

// The 2x2 path-like production matrix [[D+S, D], [0, S]] acting on
// (different-face, same-face) partials. S = 0 is rejected: a connected graph
// always has same-face embeddings.
ProductionMatrix pathlike_matrix(const IntPolynomial& d_part, const IntPolynomial& s_part);

// The 3x3 ladder-like production matrix p(x)*A + q(x)*B. q = 0 is rejected.
ProductionMatrix ladderlike_matrix(const IntPolynomial& p, const IntPolynomial& q);

}  // namespace gdlim
