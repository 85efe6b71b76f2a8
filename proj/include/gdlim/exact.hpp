#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gdlim {

// Arbitrary-precision integers and exact rationals. Rational is kept in
// lowest terms with a positive denominator by the backend after every
// operation, so equality comparisons are plain value comparisons.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(const BigInt& z) { return z.convert_to<double>(); }

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

BigInt factorial(unsigned n);
BigInt pow2(unsigned n);

// Safe construction from a possibly negative denominator.
Rational make_rational(BigInt num, BigInt den);

// "num/den" form; the exact contract used in report documents.
std::string fraction_string(const Rational& q);
Rational parse_fraction(const std::string& s);

// 12 significant digits for human-facing output; the fraction is the contract.
std::string decimal_string(const Rational& q, int significant = 12);

}  // namespace gdlim
