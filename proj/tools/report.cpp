#include "report.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>

namespace monosens::cli
{

namespace
{

nlohmann::json to_json( const PointSet& points )
{
  return points.members;
}

nlohmann::json special_names( const SpecialClassSet& classes )
{
  auto names = nlohmann::json::array();
  if ( classes.special_even )
  {
    names.push_back( "special_even" );
  }
  if ( classes.special_odd_lower )
  {
    names.push_back( "special_odd_lower" );
  }
  if ( classes.special_odd_upper )
  {
    names.push_back( "special_odd_upper" );
  }
  return names;
}

std::string optional_real( const std::optional<double>& value )
{
  return value ? format_real( *value ) : std::string{};
}

std::string optional_rational( const std::optional<BigRational>& value )
{
  return value ? to_string( *value ) : std::string{};
}

const char* mode_name( VerifyMode mode )
{
  return mode == VerifyMode::Exact ? "exact" : "sample";
}

} // namespace

nlohmann::json to_json( const ExactFraction& value )
{
  return { { "num", std::to_string( value.numerator() ) },
           { "log2_den", value.log2_denominator() },
           { "float", value.to_double() } };
}

AnalysisReport analyze( const TruthTable& f )
{
  AnalysisReport report;
  report.n = f.num_vars();
  report.hex = to_hex( f );
  report.monotone = is_monotone( f );
  report.activities = activity_vector( f );
  report.average_sensitivity = average_sensitivity( f );
  if ( report.average_sensitivity != average_pointwise_sensitivity( f ) )
  {
    throw InvariantViolation( "sum of activities differs from mean pointwise sensitivity for " + report.hex );
  }
  report.layer_profile = layer_profile( f );
  if ( report.monotone )
  {
    auto extremal = extremal_points( f );
    report.minimal_ones = std::move( extremal.minimal_ones );
    report.maximal_zeros = std::move( extremal.maximal_zeros );
    if ( f.num_vars() >= 3 )
    {
      report.special_classes = classify_special_unchecked( f );
    }
  }
  return report;
}

nlohmann::json to_json( const AnalysisReport& report )
{
  nlohmann::json out;
  out["n"] = report.n;
  out["hex"] = report.hex;
  out["monotone"] = report.monotone;
  out["activities"] = nlohmann::json::array();
  for ( const auto& a : report.activities )
  {
    out["activities"].push_back( to_json( a ) );
  }
  out["average_sensitivity"] = to_json( report.average_sensitivity );
  out["minimal_ones"] = report.minimal_ones ? to_json( *report.minimal_ones ) : nlohmann::json( nullptr );
  out["maximal_zeros"] = report.maximal_zeros ? to_json( *report.maximal_zeros ) : nlohmann::json( nullptr );
  out["layer_profile"] = report.layer_profile.counts;
  out["special_classes"] =
      report.special_classes ? special_names( *report.special_classes ) : nlohmann::json( nullptr );
  return out;
}

std::string format_real( double value )
{
  return fmt::format( "{:#.12g}", value );
}

CurveRow curve_row( unsigned n )
{
  CurveRow row;
  row.n = n;
  row.even = n % 2 == 0;
  row.s_hat = expected_avg_sensitivity( n );
  if ( !row.even )
  {
    const auto parts = expected_avg_sensitivity_odd_components( n );
    row.s_hat_1 = parts.s_hat_1;
    row.s_hat_2 = parts.s_hat_2;
  }
  row.sqrt_2n_over_pi = std::sqrt( 2.0 * n / std::numbers::pi );
  return row;
}

std::string curve_csv( unsigned n_min, unsigned n_max )
{
  if ( n_min < curve_min_n || n_min > n_max || n_max > curve_max_n )
  {
    throw std::invalid_argument( fmt::format( "curve: need {} <= min <= max <= {}, got min={} max={}", curve_min_n,
                                              curve_max_n, n_min, n_max ) );
  }
  std::string out = curve_header;
  out += '\n';
  for ( unsigned n = n_min; n <= n_max; ++n )
  {
    const auto row = curve_row( n );
    out += fmt::format( "{},{},{},{},{},{}\n", row.n, row.even ? "even" : "odd", format_real( row.s_hat ),
                        optional_real( row.s_hat_1 ), optional_real( row.s_hat_2 ),
                        format_real( row.sqrt_2n_over_pi ) );
  }
  return out;
}

VerifyReport verify( unsigned n, VerifyMode mode, const ChainConfig& cfg, unsigned threads )
{
  VerifyReport report;
  report.n = n;
  report.mode = mode;

  if ( mode == VerifyMode::Exact )
  {
    if ( n < 2 || n > max_enumeration_variables )
    {
      throw std::invalid_argument( fmt::format( "verify: exact mode needs 2 <= n <= {}, got {}",
                                                max_enumeration_variables, n ) );
    }
  }
  else if ( n < min_sampler_variables || n > max_sampler_variables )
  {
    throw std::invalid_argument(
        fmt::format( "verify: sample mode needs {} <= n <= {}, got {}", min_sampler_variables, max_sampler_variables, n ) );
  }

  report.s_hat_exact = expected_avg_sensitivity_exact( n );
  report.s_hat = to_double( report.s_hat_exact );

  if ( mode == VerifyMode::Exact )
  {
    const auto stats = exact_stats( n, threads );
    report.empirical_mean_exact = stats.mean_avg_sensitivity;
    report.empirical_mean = to_double( stats.mean_avg_sensitivity );
    report.ratio_exact = stats.mean_avg_sensitivity / report.s_hat_exact;
    report.ratio = to_double( *report.ratio_exact );
    report.special_fraction_exact = stats.special_fraction;
    report.special_fraction = to_double( stats.special_fraction );
    report.count = stats.count;
  }
  else
  {
    const auto est = monte_carlo_stats( n, cfg, threads );
    report.empirical_mean = est.mean;
    report.standard_error = est.standard_error;
    report.ratio = est.mean / report.s_hat;
    report.special_fraction = est.special_fraction_estimate;
    report.count = est.n_samples;
    report.r_hat = est.r_hat;
    report.non_converged = !est.converged;
  }
  return report;
}

std::string to_csv( const VerifyReport& r )
{
  std::string out =
      "n,mode,s_hat,s_hat_exact,empirical_mean,empirical_mean_exact,standard_error,ratio,ratio_exact,"
      "special_fraction,special_fraction_exact,count,r_hat,non_converged\n";
  out += fmt::format( "{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", r.n, mode_name( r.mode ), format_real( r.s_hat ),
                      to_string( r.s_hat_exact ), format_real( r.empirical_mean ),
                      optional_rational( r.empirical_mean_exact ), optional_real( r.standard_error ),
                      format_real( r.ratio ), optional_rational( r.ratio_exact ), format_real( r.special_fraction ),
                      optional_rational( r.special_fraction_exact ), r.count, optional_real( r.r_hat ),
                      r.non_converged ? "true" : "false" );
  return out;
}

nlohmann::json to_json( const VerifyReport& r )
{
  auto rational_or_null = []( const std::optional<BigRational>& v ) {
    return v ? nlohmann::json( to_string( *v ) ) : nlohmann::json( nullptr );
  };
  auto real_or_null = []( const std::optional<double>& v ) {
    return v ? nlohmann::json( *v ) : nlohmann::json( nullptr );
  };
  return { { "n", r.n },
           { "mode", mode_name( r.mode ) },
           { "s_hat", r.s_hat },
           { "s_hat_exact", to_string( r.s_hat_exact ) },
           { "empirical_mean", r.empirical_mean },
           { "empirical_mean_exact", rational_or_null( r.empirical_mean_exact ) },
           { "standard_error", real_or_null( r.standard_error ) },
           { "ratio", r.ratio },
           { "ratio_exact", rational_or_null( r.ratio_exact ) },
           { "special_fraction", r.special_fraction },
           { "special_fraction_exact", rational_or_null( r.special_fraction_exact ) },
           { "count", r.count },
           { "r_hat", real_or_null( r.r_hat ) },
           { "non_converged", r.non_converged } };
}

} // namespace monosens::cli
