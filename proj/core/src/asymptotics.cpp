#include "monosens/asymptotics.hpp"

#include "monosens/boolean_function.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace monosens
{

namespace
{

void require_case( unsigned n, ParityCase parity )
{
  if ( n < 2 || n > max_asymptotic_variables )
  {
    throw std::invalid_argument( "asymptotics: n must lie in 2.." + std::to_string( max_asymptotic_variables ) +
                                 ", got " + std::to_string( n ) );
  }
  const bool even = n % 2 == 0;
  if ( even != ( parity == ParityCase::Even ) )
  {
    throw std::invalid_argument( std::string( "asymptotics: parity case " ) + to_string( parity ) +
                                 " does not match n = " + std::to_string( n ) );
  }
}

void require_odd( unsigned n )
{
  if ( n % 2 == 0 || n < 3 || n > max_asymptotic_variables )
  {
    throw std::invalid_argument( "asymptotics: odd-n estimate needs odd n in 3.." +
                                 std::to_string( max_asymptotic_variables ) + ", got " + std::to_string( n ) );
  }
}

const BigRational half{ BigInt( 1 ), BigInt( 2 ) };

long double log_binomial( unsigned n, unsigned k )
{
  return std::log( to_long_double( binomial( n, k ) ) );
}

// Per-layer indicator words for n <= 6.
constexpr std::array<std::array<std::uint64_t, 7>, 7> small_layer_masks = [] {
  std::array<std::array<std::uint64_t, 7>, 7> masks{};
  for ( unsigned n = 0; n <= 6; ++n )
  {
    for ( std::uint64_t x = 0; x < ( std::uint64_t{ 1 } << n ); ++x )
    {
      masks[n][static_cast<std::size_t>( std::popcount( x ) )] |= std::uint64_t{ 1 } << x;
    }
  }
  return masks;
}();

TruthTable band_mask( unsigned n, unsigned lowest, unsigned highest )
{
  if ( n > 6 )
  {
    return layer_band( n, lowest, highest );
  }
  std::uint64_t word = 0;
  for ( unsigned k = lowest; k <= highest && k <= n; ++k )
  {
    word |= small_layer_masks[n][k];
  }
  return TruthTable::from_words( n, { &word, 1 } );
}

bool in_band( const TruthTable& f, const TruthTable& minimal_ones, unsigned lowest, unsigned highest,
              unsigned ones_from )
{
  const unsigned n = f.num_vars();
  const auto outside = minimal_ones & ~band_mask( n, lowest, highest );
  if ( outside.count_ones() != 0 )
  {
    return false;
  }
  if ( ones_from > n )
  {
    return true;
  }
  const auto missing = band_mask( n, ones_from, n ) & ~f;
  return missing.count_ones() == 0;
}

} // namespace

const char* to_string( ParityCase parity ) noexcept
{
  switch ( parity )
  {
  case ParityCase::Even:
    return "even";
  case ParityCase::OddLower:
    return "odd_lower";
  case ParityCase::OddUpper:
    return "odd_upper";
  }
  return "unknown";
}

SpecialParams special_params( unsigned n, ParityCase parity )
{
  require_case( n, parity );
  SpecialParams p;
  const int ni = static_cast<int>( n );
  switch ( parity )
  {
  case ParityCase::Even:
  {
    p.r_real = BigRational( binomial( n, n / 2 - 1 ) ) * pow2( -ni / 2 - 1 );
    p.v_real = p.r_real;
    p.z_real = half * binomial( n, n / 2 );
    p.r_int = floor( p.r_real );
    p.v_int = p.r_int;
    p.z_int = floor( p.z_real );
    break;
  }
  case ParityCase::OddLower:
  {
    p.r_real = BigRational( binomial( n, ( n - 3 ) / 2 ) ) * pow2( -( ni + 3 ) / 2 );
    p.v_real = BigRational( binomial( n, ( n + 1 ) / 2 ) ) * pow2( -( ni + 1 ) / 2 );
    p.r_int = floor( p.r_real );
    p.v_int = floor( p.v_real );
    const BigInt middle = binomial( n, ( n - 1 ) / 2 );
    p.z_real = half * ( middle + p.r_real * ( ( n + 3 ) / 2 ) - p.v_real * ( ( n + 1 ) / 2 ) );
    p.z_int = floor( half * BigRational( middle + p.r_int * ( ( n + 3 ) / 2 ) - p.v_int * ( ( n + 1 ) / 2 ) ) );
    break;
  }
  case ParityCase::OddUpper:
  {
    p.r_real = BigRational( binomial( n, ( n - 1 ) / 2 ) ) * pow2( -( ni + 1 ) / 2 );
    p.v_real = BigRational( binomial( n, ( n + 3 ) / 2 ) ) * pow2( -( ni + 3 ) / 2 );
    p.r_int = floor( p.r_real );
    p.v_int = floor( p.v_real );
    const BigInt middle = binomial( n, ( n + 1 ) / 2 );
    p.z_real = half * ( middle + p.r_real * ( ( n - 1 ) / 2 ) - p.v_real * ( ( n + 3 ) / 2 ) );
    p.z_int = floor( half * BigRational( middle + p.r_int * ( ( n - 1 ) / 2 ) - p.v_int * ( ( n + 3 ) / 2 ) ) );
    break;
  }
  }
  return p;
}

DensityWindow density_window( unsigned n )
{
  const long double nn = n;
  return { nn * std::exp2( nn / 4 ), nn * std::exp2( nn / 4 ), nn * std::exp2( nn / 2 ) };
}

double density_ratio( unsigned n, ParityCase parity, std::int64_t k, std::int64_t t, std::int64_t u )
{
  require_case( n, parity );
  const auto window = density_window( n );
  const long double kk = static_cast<long double>( k );
  const long double tt = static_cast<long double>( t );
  const long double uu = static_cast<long double>( u );
  if ( std::fabs( kk ) > window.k_max || std::fabs( tt ) > window.t_max || std::fabs( uu ) > window.u_max )
  {
    throw std::domain_error( "density_ratio: offsets (" + std::to_string( k ) + ", " + std::to_string( t ) + ", " +
                             std::to_string( u ) + ") outside the validity window for n = " + std::to_string( n ) );
  }

  const long double ln2 = std::numbers::ln2_v<long double>;
  const long double ln_pi = std::log( std::numbers::pi_v<long double> );
  const int ni = static_cast<int>( n );

  long double log_prefactor = 0;
  long double exponent = 0;
  switch ( parity )
  {
  case ParityCase::Even:
  {
    const long double lower = to_long_double( binomial( n, n / 2 - 1 ) );
    const long double middle = to_long_double( binomial( n, n / 2 ) );
    log_prefactor = 0.5L * ( ( n + 1 ) * ln2 - 3 * ln_pi - 3 * std::log( middle ) );
    exponent = -std::ldexp( 1.0L, ni / 2 ) / lower * ( kk * kk + tt * tt ) - 2 * uu * uu / middle;
    break;
  }
  case ParityCase::OddLower:
  {
    const long double below = to_long_double( binomial( n, ( n - 3 ) / 2 ) );
    const long double middle = to_long_double( binomial( n, ( n - 1 ) / 2 ) );
    const long double above = to_long_double( binomial( n, ( n + 1 ) / 2 ) );
    log_prefactor = -ln2 + 0.5L * ( ( n + 1 ) * ln2 - 3 * ln_pi - 3 * log_binomial( n, ( n - 1 ) / 2 ) );
    exponent = -std::ldexp( 1.0L, ( ni + 1 ) / 2 ) / below * kk * kk -
               std::ldexp( 1.0L, ( ni - 1 ) / 2 ) / above * tt * tt - 2 * uu * uu / middle;
    break;
  }
  case ParityCase::OddUpper:
  {
    const long double below = to_long_double( binomial( n, ( n - 1 ) / 2 ) );
    const long double middle = to_long_double( binomial( n, ( n + 1 ) / 2 ) );
    const long double above = to_long_double( binomial( n, ( n + 3 ) / 2 ) );
    log_prefactor = -ln2 + 0.5L * ( ( n + 1 ) * ln2 - 3 * ln_pi - 3 * log_binomial( n, ( n - 1 ) / 2 ) );
    exponent = -std::ldexp( 1.0L, ( ni - 1 ) / 2 ) / below * kk * kk -
               std::ldexp( 1.0L, ( ni + 1 ) / 2 ) / above * tt * tt - 2 * uu * uu / middle;
    break;
  }
  }
  return static_cast<double>( std::exp( log_prefactor + exponent ) );
}

EvenEstimateTerms even_estimate_terms( unsigned n )
{
  require_case( n, ParityCase::Even );
  const int ni = static_cast<int>( n );
  const BigRational lower_layer( binomial( n, n / 2 - 1 ) );
  const BigRational minimal_share = pow2( -ni / 2 - 1 );

  EvenEstimateTerms terms;
  terms.lower_minimal_ones = half * lower_layer * minimal_share;
  terms.lower_zeros = lower_layer * ( 1 - minimal_share );
  terms.lower_zero_one_pairs = BigRational( 1, 4 ) * lower_layer * ( 1 - minimal_share );
  // the upper layer n/2+1 contributes the same two counts by duality
  terms.activity_pairs = 2 * terms.lower_minimal_ones + 2 * terms.lower_zero_one_pairs;
  terms.s_hat = n * pow2( -ni + 1 ) * terms.activity_pairs;
  return terms;
}

double expected_avg_sensitivity_even( unsigned n )
{
  return to_double( even_estimate_terms( n ).s_hat );
}

OddBandTerms odd_lower_band_terms( unsigned n )
{
  require_odd( n );
  const int ni = static_cast<int>( n );
  const BigInt below = binomial( n, ( n - 3 ) / 2 );
  const BigInt middle = binomial( n, ( n - 1 ) / 2 );
  const BigInt above = binomial( n, ( n + 1 ) / 2 );
  const BigRational below_share = pow2( -( ni + 3 ) / 2 );
  const BigRational above_share = pow2( -( ni + 1 ) / 2 );

  OddBandTerms terms;
  terms.lower_minimal_ones = half * below * below_share;
  terms.lower_zeros = half * below * ( 1 - below_share );
  terms.middle_one_probability =
      BigRational( 1, middle ) *
      ( half * ( middle + below * below_share * ( ( n + 3 ) / 2 ) - above * above_share * ( ( n + 1 ) / 2 ) ) );
  terms.lower_contribution = terms.lower_minimal_ones + terms.lower_zeros * terms.middle_one_probability;
  terms.upper_maximal_zeros = half * above * above_share;
  terms.upper_ones = half * above * ( 1 - above_share );
  terms.middle_zero_probability =
      1 - BigRational( 1, middle ) *
              ( half * ( middle + below * below_share * ( ( n + 3 ) / 2 ) - above * above_share * ( ( n + 1 ) / 2 ) ) );
  terms.upper_contribution = terms.upper_maximal_zeros + terms.upper_ones * terms.middle_zero_probability;
  terms.s_hat = n * pow2( -ni + 1 ) * ( terms.lower_contribution + terms.upper_contribution );
  return terms;
}

OddBandTerms odd_upper_band_terms( unsigned n )
{
  require_odd( n );
  const int ni = static_cast<int>( n );
  const BigInt below = binomial( n, ( n - 1 ) / 2 );
  const BigInt middle = binomial( n, ( n + 1 ) / 2 );
  const BigInt above = binomial( n, ( n + 3 ) / 2 );
  const BigRational below_share = pow2( -( ni + 1 ) / 2 );
  const BigRational above_share = pow2( -( ni + 3 ) / 2 );

  OddBandTerms terms;
  terms.lower_minimal_ones = half * below * below_share;
  terms.lower_zeros = half * below * ( 1 - below_share );
  terms.middle_one_probability =
      BigRational( 1, middle ) *
      ( half * ( middle + below * below_share * ( ( n - 1 ) / 2 ) - above * above_share * ( ( n + 3 ) / 2 ) ) );
  terms.lower_contribution = terms.lower_minimal_ones + terms.lower_zeros * terms.middle_one_probability;
  terms.upper_maximal_zeros = half * above * above_share;
  terms.upper_ones = half * above * ( 1 - above_share );
  terms.middle_zero_probability =
      1 - BigRational( 1, middle ) *
              ( half * ( middle + below * below_share * ( ( n - 1 ) / 2 ) - above * above_share * ( ( n + 3 ) / 2 ) ) );
  terms.upper_contribution = terms.upper_maximal_zeros + terms.upper_ones * terms.middle_zero_probability;
  terms.s_hat = n * pow2( -ni + 1 ) * ( terms.lower_contribution + terms.upper_contribution );
  return terms;
}

OddComponents expected_avg_sensitivity_odd_components( unsigned n )
{
  return { to_double( odd_lower_band_terms( n ).s_hat ), to_double( odd_upper_band_terms( n ).s_hat ) };
}

BigRational expected_avg_sensitivity_exact( unsigned n )
{
  if ( n < 2 || n > max_asymptotic_variables )
  {
    throw std::invalid_argument( "expected_avg_sensitivity: n must lie in 2.." +
                                 std::to_string( max_asymptotic_variables ) + ", got " + std::to_string( n ) );
  }
  if ( n % 2 == 0 )
  {
    return even_estimate_terms( n ).s_hat;
  }
  return half * ( odd_lower_band_terms( n ).s_hat + odd_upper_band_terms( n ).s_hat );
}

double expected_avg_sensitivity( unsigned n )
{
  return to_double( expected_avg_sensitivity_exact( n ) );
}

SpecialClassSet classify_special_unchecked( const TruthTable& f )
{
  const unsigned n = f.num_vars();
  if ( n < 3 )
  {
    throw std::invalid_argument( "classify_special: needs n >= 3, got " + std::to_string( n ) );
  }
  const auto minimal = minimal_ones_table( f );
  SpecialClassSet result;
  if ( n % 2 == 0 )
  {
    result.special_even = in_band( f, minimal, n / 2 - 1, n / 2 + 1, n / 2 + 2 );
  }
  else
  {
    result.special_odd_lower = in_band( f, minimal, ( n - 3 ) / 2, ( n + 1 ) / 2, ( n + 3 ) / 2 );
    result.special_odd_upper = in_band( f, minimal, ( n - 1 ) / 2, ( n + 3 ) / 2, ( n + 5 ) / 2 );
  }
  return result;
}

SpecialClassSet classify_special( const TruthTable& f )
{
  if ( !is_monotone( f ) )
  {
    throw std::invalid_argument( "classify_special: input function is not monotone" );
  }
  return classify_special_unchecked( f );
}

} // namespace monosens
