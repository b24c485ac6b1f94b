#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace monosens
{

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact C(n, k); zero when k > n.
BigInt binomial( unsigned n, unsigned k );

/// Exact 2^exponent for any sign of exponent.
BigRational pow2( int exponent );

BigInt floor( const BigRational& value );

double to_double( const BigRational& value );
long double to_long_double( const BigInt& value );

/// "num/den" in lowest terms ("num" alone when the denominator is 1).
std::string to_string( const BigRational& value );

} // namespace monosens
