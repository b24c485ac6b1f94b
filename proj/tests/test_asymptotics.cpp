#include "oracles.hpp"

#include <monosens/asymptotics.hpp>
#include <monosens/enumeration.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <tuple>
#include <numbers>
#include <stdexcept>

using namespace monosens;

namespace
{

BigRational q( long long num, long long den )
{
  return BigRational( BigInt( num ), BigInt( den ) );
}

} // namespace

TEST( SpecialParams, Examples )
{
  const auto even = special_params( 10, ParityCase::Even );
  EXPECT_EQ( even.r_int, 3 );
  EXPECT_EQ( even.v_int, 3 );
  EXPECT_EQ( even.z_int, 126 );
  EXPECT_EQ( even.r_real, q( 210, 64 ) );

  const auto lower = special_params( 9, ParityCase::OddLower );
  EXPECT_EQ( lower.r_int, 1 );
  EXPECT_EQ( lower.v_int, 3 );
  EXPECT_EQ( lower.z_int, 58 );

  const auto upper = special_params( 9, ParityCase::OddUpper );
  EXPECT_EQ( upper.r_int, 3 );
  EXPECT_EQ( upper.v_int, 1 );
  EXPECT_EQ( upper.z_int, 66 );
}

TEST( SpecialParams, Errors )
{
  EXPECT_THROW( special_params( 9, ParityCase::Even ), std::invalid_argument );
  EXPECT_THROW( special_params( 10, ParityCase::OddLower ), std::invalid_argument );
  EXPECT_THROW( special_params( 1, ParityCase::OddUpper ), std::invalid_argument );
  EXPECT_THROW( special_params( 0, ParityCase::Even ), std::invalid_argument );
}

TEST( SpecialParams, FloorsConsistentSymmetricAndNonNegative )
{
  for ( unsigned n = 2; n <= 64; ++n )
  {
    const auto cases = n % 2 == 0 ? std::vector{ ParityCase::Even }
                                  : std::vector{ ParityCase::OddLower, ParityCase::OddUpper };
    for ( auto parity : cases )
    {
      const auto p = special_params( n, parity );
      EXPECT_EQ( p.r_int, floor( p.r_real ) ) << n;
      EXPECT_EQ( p.v_int, floor( p.v_real ) ) << n;
      EXPECT_GE( p.r_int, 0 );
      EXPECT_GE( p.z_int, 0 );
      EXPECT_GE( p.v_int, 0 );
      if ( parity == ParityCase::Even )
      {
        EXPECT_EQ( p.r_real, p.v_real );
        EXPECT_EQ( p.z_int, floor( p.z_real ) );
      }
    }
  }
}

TEST( DensityRatio, Examples )
{
  const double even_peak = std::sqrt( 2048.0 / ( std::pow( std::numbers::pi, 3 ) * std::pow( 252.0, 3 ) ) );
  EXPECT_NEAR( density_ratio( 10, ParityCase::Even, 0, 0, 0 ), even_peak, 1e-15 );
  EXPECT_NEAR( density_ratio( 10, ParityCase::Even, 0, 0, 0 ), 2.0317e-3, 1e-7 );

  const double odd_peak = 0.5 * std::sqrt( 1024.0 / ( std::pow( std::numbers::pi, 3 ) * std::pow( 126.0, 3 ) ) );
  EXPECT_NEAR( density_ratio( 9, ParityCase::OddLower, 0, 0, 0 ), odd_peak, 1e-15 );
  EXPECT_NEAR( density_ratio( 9, ParityCase::OddLower, 0, 0, 0 ), 2.0316e-3, 1e-7 );
  EXPECT_NEAR( density_ratio( 9, ParityCase::OddUpper, 0, 0, 0 ), odd_peak, 1e-15 );
}

TEST( DensityRatio, EvenInEachOffset )
{
  for ( auto [n, parity] : { std::pair{ 10u, ParityCase::Even }, std::pair{ 9u, ParityCase::OddLower },
                             std::pair{ 9u, ParityCase::OddUpper } } )
  {
    for ( std::int64_t k : { 0, 1, 3 } )
    {
      for ( std::int64_t t : { 0, 2, 5 } )
      {
        for ( std::int64_t u : { 0, 4, 17 } )
        {
          EXPECT_DOUBLE_EQ( density_ratio( n, parity, k, t, u ), density_ratio( n, parity, -k, -t, -u ) );
        }
      }
    }
  }
}

TEST( DensityRatio, NonIncreasingInEachOffsetMagnitude )
{
  for ( auto [n, parity] : { std::pair{ 12u, ParityCase::Even }, std::pair{ 11u, ParityCase::OddLower },
                             std::pair{ 11u, ParityCase::OddUpper } } )
  {
    for ( std::int64_t step = 0; step < 30; ++step )
    {
      EXPECT_GE( density_ratio( n, parity, step, 1, 2 ), density_ratio( n, parity, step + 1, 1, 2 ) );
      EXPECT_GE( density_ratio( n, parity, 1, step, 2 ), density_ratio( n, parity, 1, step + 1, 2 ) );
      EXPECT_GE( density_ratio( n, parity, 1, 2, step ), density_ratio( n, parity, 1, 2, step + 1 ) );
    }
  }
}

TEST( DensityRatio, RejectsOffsetsOutsideTheWindow )
{
  // n = 10: |k|, |t| <= 10 * 2^2.5 ~ 56.57, |u| <= 320
  EXPECT_NO_THROW( density_ratio( 10, ParityCase::Even, 56, -56, 320 ) );
  EXPECT_THROW( density_ratio( 10, ParityCase::Even, 57, 0, 0 ), std::domain_error );
  EXPECT_THROW( density_ratio( 10, ParityCase::Even, 0, -57, 0 ), std::domain_error );
  EXPECT_THROW( density_ratio( 10, ParityCase::Even, 0, 0, 321 ), std::domain_error );
  EXPECT_THROW( density_ratio( 10, ParityCase::OddLower, 0, 0, 0 ), std::invalid_argument );
}

TEST( DensityRatio, GridSumMatchesGaussianIntegral )
{
  // closed form of the triple Gaussian integral: C(n, n/2-1) / C(n, n/2)
  for ( unsigned n : { 10u, 12u } )
  {
    const double lower = binomial( n, n / 2 - 1 ).convert_to<double>();
    const double middle = binomial( n, n / 2 ).convert_to<double>();
    const auto sigma_kt = std::sqrt( lower / std::ldexp( 1.0, static_cast<int>( n / 2 ) ) / 2 );
    const auto sigma_u = std::sqrt( middle / 4 );
    const auto kt_max = static_cast<std::int64_t>( 6 * sigma_kt );
    const auto u_max = static_cast<std::int64_t>( 6 * sigma_u );
    double sum = 0;
    for ( auto k = -kt_max; k <= kt_max; ++k )
    {
      for ( auto t = -kt_max; t <= kt_max; ++t )
      {
        for ( auto u = -u_max; u <= u_max; ++u )
        {
          sum += density_ratio( n, ParityCase::Even, k, t, u );
        }
      }
    }
    EXPECT_NEAR( sum / ( lower / middle ), 1.0, 0.01 ) << n;
  }
}

TEST( EvenEstimate, Examples )
{
  EXPECT_EQ( even_estimate_terms( 4 ).s_hat, q( 9, 8 ) );
  EXPECT_EQ( expected_avg_sensitivity_even( 4 ), 1.125 );
  EXPECT_NEAR( expected_avg_sensitivity_even( 10 ), 2.0828247070312, 1e-12 );
  EXPECT_EQ( even_estimate_terms( 10 ).s_hat, q( 34125, 16384 ) );
  const double scale = std::sqrt( 2 * 200 / std::numbers::pi );
  EXPECT_NEAR( expected_avg_sensitivity_even( 200 ) / scale, 1.0, 0.02 );
  EXPECT_THROW( expected_avg_sensitivity_even( 9 ), std::invalid_argument );
}

TEST( EvenEstimate, DerivationMatchesClosedForm )
{
  for ( unsigned n = 2; n <= 120; n += 2 )
  {
    const auto terms = even_estimate_terms( n );
    const BigRational c( binomial( n, n / 2 - 1 ) );
    const auto share = pow2( -static_cast<int>( n ) / 2 - 1 );
    EXPECT_EQ( terms.lower_zeros, c - special_params( n, ParityCase::Even ).r_real );
    EXPECT_EQ( terms.activity_pairs, BigRational( 1, 2 ) * c * ( share + 1 ) );
    EXPECT_EQ( terms.s_hat, n * pow2( -static_cast<int>( n ) ) * c * ( share + 1 ) );
  }
}

TEST( EvenEstimate, FrozenValues )
{
  // independent exact evaluation of n 2^-n C(n,n/2-1) (2^(-n/2-1) + 1)
  EXPECT_EQ( even_estimate_terms( 2 ).s_hat, q( 5, 8 ) );
  EXPECT_EQ( even_estimate_terms( 6 ).s_hat, q( 765, 512 ) );
  EXPECT_EQ( even_estimate_terms( 8 ).s_hat, q( 231, 128 ) );
  EXPECT_EQ( even_estimate_terms( 12 ).s_hat, q( 38313, 16384 ) );
}

TEST( OddEstimate, NineVariableSubTerms )
{
  const auto lower = odd_lower_band_terms( 9 );
  EXPECT_EQ( lower.lower_minimal_ones, q( 21, 32 ) );
  EXPECT_EQ( lower.lower_zeros, q( 1323, 32 ) );
  EXPECT_EQ( lower.middle_one_probability, q( 29, 64 ) );
  EXPECT_EQ( lower.lower_contribution, q( 39711, 2048 ) );
  EXPECT_EQ( lower.upper_maximal_zeros, q( 63, 32 ) );
  EXPECT_EQ( lower.upper_ones, q( 1953, 32 ) );
  EXPECT_EQ( lower.middle_zero_probability, q( 35, 64 ) );
  EXPECT_EQ( lower.upper_contribution, q( 72387, 2048 ) );
  EXPECT_EQ( lower.s_hat, q( 504441, 262144 ) );

  const auto upper = odd_upper_band_terms( 9 );
  EXPECT_EQ( upper.lower_minimal_ones, q( 63, 32 ) );
  EXPECT_EQ( upper.lower_zeros, q( 1953, 32 ) );
  EXPECT_EQ( upper.middle_one_probability, q( 17, 32 ) );
  EXPECT_EQ( upper.lower_contribution, q( 35217, 1024 ) );
  EXPECT_EQ( upper.upper_maximal_zeros, q( 21, 32 ) );
  EXPECT_EQ( upper.upper_ones, q( 1323, 32 ) );
  EXPECT_EQ( upper.middle_zero_probability, q( 15, 32 ) );
  EXPECT_EQ( upper.upper_contribution, q( 20517, 1024 ) );
  EXPECT_EQ( upper.s_hat, q( 250803, 131072 ) );
}

TEST( OddEstimate, FrozenComponents )
{
  const std::array<std::tuple<unsigned, long long, long long, long long, long long>, 5> frozen = { {
      { 3, 1035, 1024, 969, 1024 },
      { 5, 5625, 4096, 10925, 8192 },
      { 7, 435757, 262144, 430171, 262144 },
      { 11, 72879147, 33554432, 72699825, 33554432 },
      { 13, 323170419, 134217728, 1291281849, 536870912 },
  } };
  for ( const auto& [n, n1, d1, n2, d2] : frozen )
  {
    EXPECT_EQ( odd_lower_band_terms( n ).s_hat, q( n1, d1 ) ) << n;
    EXPECT_EQ( odd_upper_band_terms( n ).s_hat, q( n2, d2 ) ) << n;
  }
}

TEST( OddEstimate, ComponentsAndDispatch )
{
  const auto parts = expected_avg_sensitivity_odd_components( 9 );
  EXPECT_NEAR( parts.s_hat_1, 1.92428970, 1e-8 );
  EXPECT_NEAR( parts.s_hat_2, 1.91347503, 1e-8 );
  EXPECT_NEAR( expected_avg_sensitivity( 9 ), 1.9188824, 1e-6 );
  EXPECT_EQ( expected_avg_sensitivity( 4 ), 1.125 );
  EXPECT_NEAR( expected_avg_sensitivity( 10 ), 2.0828247, 1e-7 );
  EXPECT_THROW( expected_avg_sensitivity_odd_components( 10 ), std::invalid_argument );
  EXPECT_THROW( expected_avg_sensitivity( 1 ), std::invalid_argument );

  for ( unsigned n = 3; n <= 101; n += 2 )
  {
    const auto c = expected_avg_sensitivity_odd_components( n );
    EXPECT_GT( c.s_hat_1, 0 );
    EXPECT_LT( c.s_hat_1, n );
    EXPECT_GT( c.s_hat_2, 0 );
    EXPECT_LT( c.s_hat_2, n );
  }
}

TEST( Estimator, RangeBelowSquareRootOfN )
{
  for ( unsigned n = 4; n <= 400; ++n )
  {
    const double s = expected_avg_sensitivity( n );
    EXPECT_GT( s, 0 ) << n;
    EXPECT_LT( s, std::sqrt( static_cast<double>( n ) ) ) << n;
  }
}

TEST( Estimator, ApproachesScaleFromBelowForEvenN )
{
  double previous = 0;
  for ( unsigned n = 50; n <= 400; n += 2 )
  {
    const double ratio = expected_avg_sensitivity( n ) / std::sqrt( 2.0 * n / std::numbers::pi );
    EXPECT_LT( ratio, 1.0 ) << n;
    EXPECT_GT( ratio, previous ) << n;
    previous = ratio;
  }
  EXPECT_NEAR( expected_avg_sensitivity( 201 ) / std::sqrt( 2 * 201 / std::numbers::pi ), 1.0, 0.05 );
}

TEST( Estimator, StrictlyIncreasingWithinParity )
{
  for ( unsigned n = 4; n + 2 <= 400; ++n )
  {
    EXPECT_LT( expected_avg_sensitivity_exact( n ), expected_avg_sensitivity_exact( n + 2 ) ) << n;
  }
}

TEST( ClassifySpecial, Examples )
{
  const auto threshold2 = parse_truth_table( "fee8", 4 );
  EXPECT_EQ( threshold2, threshold_function( 4, 2 ) );
  EXPECT_EQ( classify_special( threshold2 ), ( SpecialClassSet{ true, false, false } ) );
  EXPECT_TRUE( classify_special( TruthTable( 4 ) ).empty() );
  EXPECT_EQ( classify_special( parse_truth_table( "e8", 3 ) ), ( SpecialClassSet{ false, true, true } ) );
  EXPECT_THROW( classify_special( parse_truth_table( "6996", 4 ) ), std::invalid_argument );
  EXPECT_THROW( classify_special( parse_truth_table( "8", 2 ) ), std::invalid_argument );
}

TEST( ClassifySpecial, MatchesDefinitionOracle )
{
  auto check = [&]( const TruthTable& f ) {
    const unsigned n = f.num_vars();
    SpecialClassSet expected;
    if ( n % 2 == 0 )
    {
      expected.special_even = oracle::in_band( f, n / 2 - 1, n / 2 + 1, n / 2 + 2 );
    }
    else
    {
      expected.special_odd_lower = oracle::in_band( f, ( n - 3 ) / 2, ( n + 1 ) / 2, ( n + 3 ) / 2 );
      expected.special_odd_upper = oracle::in_band( f, ( n - 1 ) / 2, ( n + 3 ) / 2, ( n + 5 ) / 2 );
    }
    ASSERT_EQ( classify_special( f ), expected ) << to_hex( f );
  };
  for ( unsigned n = 3; n <= 4; ++n )
  {
    for ( const auto& f : oracle::all_monotone_brute_force( n ) )
    {
      check( f );
    }
  }
  for ( unsigned n = 5; n <= 5; ++n )
  {
    enumerate_monotone( n, check );
  }
  std::mt19937_64 rng( 21 );
  for ( unsigned n = 6; n <= 9; ++n )
  {
    for ( int i = 0; i < 200; ++i )
    {
      check( oracle::random_monotone( n, rng ) );
    }
    // the central threshold functions are special by construction
    check( threshold_function( n, n / 2 ) );
    check( threshold_function( n, ( n + 1 ) / 2 ) );
  }
}
