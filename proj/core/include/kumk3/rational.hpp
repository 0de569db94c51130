#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kumk3/errors.hpp"

namespace kumk3 {

// Exact scalars. cpp_rational keeps values in lowest terms with a positive
// denominator, which is exactly the representation contract we need; no
// floating point appears anywhere in this library.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

using RationalMatrix = std::vector<std::vector<BigRational>>;

/// Parse a rational in the grammar `-?digits(/digits)?`. Throws ParseError on
/// malformed input or a zero denominator.
BigRational parse_rational(const std::string& text);

/// Canonical text form: "n" for integers, "n/d" otherwise (lowest terms,
/// positive denominator). Inverse of parse_rational on its image.
std::string format_rational(const BigRational& q);

/// Floor of the n-th root of a nonnegative integer.
BigInt integer_nth_root(const BigInt& value, unsigned n);

/// Exact n-th root of a rational, if it exists. Throws NotAPerfectPower
/// otherwise (including negative values with even n).
BigRational rational_nth_root(const BigRational& value, unsigned n);

// small matrix helpers (exact, dense; the matrices here are tiny)
RationalMatrix identity_matrix(std::size_t n);
RationalMatrix matrix_product(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix matrix_transpose(const RationalMatrix& a);
/// B^T * G * B — the congruence transform used throughout.
RationalMatrix congruence_transform(const RationalMatrix& gram, const RationalMatrix& basis);
/// Inverse of a square matrix; throws DegenerateForm if singular.
RationalMatrix matrix_inverse(const RationalMatrix& a);

} // namespace kumk3
