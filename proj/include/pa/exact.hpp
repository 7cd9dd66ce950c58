#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pa {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// 3^e
Integer pow3(int e);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);

/// Inverse of to_string; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

using IntegerMatrix = std::vector<std::vector<Integer>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves A x = b for square integer A by fraction-free (Bareiss)
/// elimination. Throws std::runtime_error if A is singular.
std::vector<Rational> solve_exact(const IntegerMatrix& a, const std::vector<Rational>& b);

/// Rank of a rational matrix by exact Gaussian elimination.
std::size_t rank(RationalMatrix m);

}  // namespace pa
