#include "monosens/exact_fraction.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace monosens
{

namespace
{

__extension__ typedef unsigned __int128 u128;

std::string u128_to_string( u128 value )
{
  if ( value == 0 )
  {
    return "0";
  }
  std::string digits;
  while ( value != 0 )
  {
    digits.push_back( static_cast<char>( '0' + static_cast<int>( value % 10 ) ) );
    value /= 10;
  }
  std::reverse( digits.begin(), digits.end() );
  return digits;
}

} // namespace

ExactFraction::ExactFraction( std::uint64_t numerator, std::uint32_t log2_denominator )
    : numerator_( numerator ), log2_denominator_( log2_denominator )
{
  if ( log2_denominator > max_log2_denominator )
  {
    throw std::invalid_argument( "ExactFraction: denominator exponent exceeds 63" );
  }
}

ExactFraction ExactFraction::reduced() const noexcept
{
  if ( numerator_ == 0 )
  {
    return {};
  }
  const auto shift = std::min<std::uint32_t>( static_cast<std::uint32_t>( std::countr_zero( numerator_ ) ),
                                              log2_denominator_ );
  ExactFraction result;
  result.numerator_ = numerator_ >> shift;
  result.log2_denominator_ = log2_denominator_ - shift;
  return result;
}

double ExactFraction::to_double() const noexcept
{
  return std::ldexp( static_cast<double>( numerator_ ), -static_cast<int>( log2_denominator_ ) );
}

std::string ExactFraction::to_string() const
{
  return u128_to_string( numerator_ ) + "/" + u128_to_string( u128{ 1 } << log2_denominator_ );
}

ExactFraction& ExactFraction::operator+=( const ExactFraction& other )
{
  const auto exponent = std::max( log2_denominator_, other.log2_denominator_ );
  const u128 sum = ( u128{ numerator_ } << ( exponent - log2_denominator_ ) ) +
                   ( u128{ other.numerator_ } << ( exponent - other.log2_denominator_ ) );
  if ( sum >> 64 != 0 )
  {
    throw std::overflow_error( "ExactFraction: numerator overflow in addition" );
  }
  numerator_ = static_cast<std::uint64_t>( sum );
  log2_denominator_ = exponent;
  return *this;
}

bool operator==( const ExactFraction& lhs, const ExactFraction& rhs ) noexcept
{
  return ( lhs <=> rhs ) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>( const ExactFraction& lhs, const ExactFraction& rhs ) noexcept
{
  // numerators < 2^64 and shifts <= 63 keep both sides below 2^127
  const auto exponent = std::max( lhs.log2_denominator_, rhs.log2_denominator_ );
  const u128 a = u128{ lhs.numerator_ } << ( exponent - lhs.log2_denominator_ );
  const u128 b = u128{ rhs.numerator_ } << ( exponent - rhs.log2_denominator_ );
  return a <=> b;
}

} // namespace monosens
