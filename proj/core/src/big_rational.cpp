#include "monosens/big_rational.hpp"

#include <cmath>
#include <cstdint>

namespace monosens
{

BigInt binomial( unsigned n, unsigned k )
{
  if ( k > n )
  {
    return 0;
  }
  k = std::min( k, n - k );
  BigInt result = 1;
  for ( unsigned i = 1; i <= k; ++i )
  {
    // result * (n - k + i) is always divisible by i here
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigRational pow2( int exponent )
{
  BigInt power = 1;
  power <<= static_cast<unsigned>( exponent < 0 ? -exponent : exponent );
  return exponent < 0 ? BigRational( BigInt( 1 ), power ) : BigRational( power );
}

BigInt floor( const BigRational& value )
{
  const BigInt num = boost::multiprecision::numerator( value );
  const BigInt den = boost::multiprecision::denominator( value );
  BigInt q = num / den;
  if ( num < 0 && q * den != num )
  {
    --q;
  }
  return q;
}

double to_double( const BigRational& value )
{
  // scale into [2^53, 2^55) before dividing so huge numerators and
  // denominators keep full precision
  BigInt num = boost::multiprecision::numerator( value );
  BigInt den = boost::multiprecision::denominator( value );
  if ( num == 0 )
  {
    return 0.0;
  }
  const bool negative = num < 0;
  if ( negative )
  {
    num = -num;
  }
  const auto num_bits = static_cast<long>( boost::multiprecision::msb( num ) );
  const auto den_bits = static_cast<long>( boost::multiprecision::msb( den ) );
  const long shift = 54 - ( num_bits - den_bits );
  if ( shift > 0 )
  {
    num <<= static_cast<unsigned>( shift );
  }
  else
  {
    den <<= static_cast<unsigned>( -shift );
  }
  BigInt remainder;
  BigInt quotient;
  boost::multiprecision::divide_qr( num, den, quotient, remainder );
  // fold the remainder into a sticky bit so the final rounding is correct
  auto q = quotient.convert_to<std::uint64_t>();
  q = ( q << 1 ) | ( remainder != 0 ? 1u : 0u );
  const double result = std::ldexp( static_cast<double>( q ), static_cast<int>( -shift - 1 ) );
  return negative ? -result : result;
}

long double to_long_double( const BigInt& value )
{
  return value.convert_to<long double>();
}

std::string to_string( const BigRational& value )
{
  const BigInt den = boost::multiprecision::denominator( value );
  if ( den == 1 )
  {
    return boost::multiprecision::numerator( value ).str();
  }
  return boost::multiprecision::numerator( value ).str() + "/" + den.str();
}

} // namespace monosens
