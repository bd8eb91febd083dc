#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace toric {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational number. GMP keeps results of arithmetic in lowest terms
/// with a positive denominator; values built from a numerator/denominator
/// pair go through make_rational() which canonicalizes.
using Rational = mpq_class;

/// Lattice point / exponent vector. Coordinates are desk-scale, so 64 bits
/// are used with overflow checks in the arithmetic that produces them.
using Point = std::vector<std::int64_t>;

using RatVector = std::vector<Rational>;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p/q" or "p" (optional sign on p). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Converts an integer-valued GMP number to int64, throwing std::overflow_error
/// if it does not fit.
std::int64_t to_int64(const Integer& z);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point scaled(const Point& a, std::int64_t factor);

/// <a, b> computed exactly.
Integer dot(const Point& a, const Point& b);

Integer factorial(long n);
Integer binomial(long n, long k);
/// 1/n!, with the convention 1/n! = 0 for negative n.
Rational inverse_factorial(long n);
Rational pow(const Rational& base, long exponent);

std::string to_string(const Point& p);

}  // namespace toric
