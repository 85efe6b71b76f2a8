#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gdlim/bipoly.hpp"
#include "gdlim/production.hpp"

namespace gdlim {

// Characteristic polynomial F(x, lambda) = det(lambda I - M(x)), monic in
// lambda. Also the carrier for recurrences: F = lambda^k - b_1 lambda^(k-1)
// - ... - b_k.
struct CharPoly {
  BiPoly f;
};

BiPoly characteristic_bipoly(const PolyMatrix& m);
CharPoly char_poly(const ProductionMatrix& m);
CharPoly char_poly_from_recurrence(const std::vector<IntPolynomial>& coefficients);

// Column sums of M at x = 1 must agree; returns the common value D.
// Throws ColumnSumMismatch listing all column sums otherwise.
Rational common_column_sum(const ProductionMatrix& m);

enum class Primitivity { Primitive, Imprimitive, Unknown };

std::string to_string(Primitivity p);

// Boolean-power test with the Wielandt exponent (k-1)^2 + 1 on a nonnegative
// square matrix. Throws NegativeEntry on negative input.
Primitivity primitivity(const std::vector<BigInt>& m_at_one, std::size_t k);

struct ApproxRoot {
  std::complex<double> value;
  double error_bound = 0.0;
};

struct RootSummary {
  Rational dominant;
  std::vector<ApproxRoot> others;       // roots of the deflated square-free part
  bool dominant_simple = false;
  bool dominance_holds = false;
  std::optional<double> margin;         // D - max |other|; empty when no other roots
  std::string note;
};

// Verifies F1(D) = 0 exactly, deflates by (lambda - D) exactly over the
// rationals, and certifies that every remaining root has modulus < D.
// Throws NotARoot when D is not a root.
RootSummary dominant_simplicity(const IntPolynomial& f_at_one, const Rational& d, double tol = 1e-9);

// Largest positive rational root of a monic integer polynomial, found by
// exact divisor search on the constant term. Empty when there is none.
std::optional<Rational> largest_positive_integer_root(const IntPolynomial& f_at_one);

// lambda_1'(1) and lambda_1''(1) by implicit differentiation of F(x, lambda)
// at (1, D). Requires F(1, D) = 0 and F_lambda(1, D) != 0 (SingularPoint).
std::pair<Rational, Rational> implicit_derivatives(const CharPoly& f, const Rational& d);

// e = lambda'/D, v = (-(lambda')^2 + D lambda'' + D lambda') / D^2.
std::pair<Rational, Rational> limit_parameters(const Rational& lambda_prime,
                                               const Rational& lambda_doubleprime,
                                               const Rational& d);

enum class LimitCase { NormalLimit, DegenerateImpossible, DiscreteOrOnePoint, Inconclusive };

std::string to_string(LimitCase c);

struct LimitReport {
  std::string name;
  DistKind kind = DistKind::Genus;
  Rational d;
  std::optional<Rational> e;
  std::optional<Rational> v;
  bool dominant_simple = false;
  Primitivity primitivity = Primitivity::Unknown;
  LimitCase limit_case = LimitCase::Inconclusive;
  std::optional<double> margin;
  bool constant_coefficients = false;  // discrete-limit subcase marker
  bool input_error = false;            // set when v < 0: impossible for valid inputs
  std::vector<ApproxRoot> other_roots;
  std::vector<std::string> diagnostics;
};

// Case classification following the three-case limit law. v < 0 is flagged
// as an input/model error, never reported as a legitimate case.
LimitCase classify(Primitivity prim, bool dominance_holds, const std::optional<Rational>& v,
                   bool* input_error);

// Full analysis drivers used by the CLI.
LimitReport analyze_family(const FamilySpec& spec, double tol = 1e-9);
LimitReport analyze_recurrence(const RecurrenceSpec& spec, double tol = 1e-9);

}  // namespace gdlim
