#include "report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <stdexcept>
#include <string>

namespace
{

constexpr int exit_invalid_input = 2;
constexpr int exit_invariant = 3;

} // namespace

int main( int argc, char** argv )
{
  using namespace monosens;

  CLI::App app{ "monosens: sensitivity of monotone Boolean functions" };
  app.require_subcommand( 1 );

  unsigned threads = 1;
  app.add_option( "--threads", threads, "Worker threads for enumeration and sampling" )
      ->check( CLI::Range( 1u, 256u ) );

  unsigned n = 0;
  std::string hex;
  auto* analyze = app.add_subcommand( "analyze", "Exact measures of one function (JSON)" );
  analyze->add_option( "--n", n, "Number of variables" )->required();
  analyze->add_option( "--hex", hex, "Truth table, bit i = f(point i)" )->required();

  unsigned n_min = 0;
  unsigned n_max = 0;
  auto* curve = app.add_subcommand( "curve", "Expected average sensitivity of typical functions (CSV)" );
  curve->add_option( "--min", n_min, "Smallest n" )->required();
  curve->add_option( "--max", n_max, "Largest n" )->required();

  std::string mode = "exact";
  std::string format = "csv";
  ChainConfig cfg;
  auto* verify = app.add_subcommand( "verify", "Compare the estimate with enumeration or sampling" );
  verify->add_option( "--n", n, "Number of variables" )->required();
  verify->add_option( "--mode", mode, "exact | sample" )->check( CLI::IsMember( { "exact", "sample" } ) );
  verify->add_option( "--seed", cfg.seed, "Sampler seed" );
  verify->add_option( "--chains", cfg.chains, "Independent chains (>= 2)" );
  verify->add_option( "--burn-in", cfg.burn_in_sweeps, "Burn-in sweeps per chain" );
  verify->add_option( "--thin", cfg.thinning_sweeps, "Sweeps between samples" );
  verify->add_option( "--samples", cfg.samples_per_chain, "Samples per chain" );
  verify->add_option( "--format", format, "csv | json" )->check( CLI::IsMember( { "csv", "json" } ) );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::ParseError& e )
  {
    const int code = app.exit( e );
    return code == 0 ? 0 : exit_invalid_input;
  }

  try
  {
    if ( analyze->parsed() )
    {
      const auto f = parse_truth_table( hex, n );
      std::cout << cli::to_json( cli::analyze( f ) ).dump( 2 ) << '\n';
    }
    else if ( curve->parsed() )
    {
      std::cout << cli::curve_csv( n_min, n_max );
    }
    else if ( verify->parsed() )
    {
      const auto report =
          cli::verify( n, mode == "exact" ? cli::VerifyMode::Exact : cli::VerifyMode::Sample, cfg, threads );
      if ( format == "json" )
      {
        std::cout << cli::to_json( report ).dump( 2 ) << '\n';
      }
      else
      {
        std::cout << cli::to_csv( report );
      }
    }
  }
  catch ( const cli::InvariantViolation& e )
  {
    std::cerr << "internal invariant violated: " << e.what() << '\n';
    return exit_invariant;
  }
  catch ( const std::invalid_argument& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_invalid_input;
  }
  catch ( const std::out_of_range& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_invalid_input;
  }
  catch ( const std::domain_error& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_invalid_input;
  }
  catch ( const std::exception& e )
  {
    std::cerr << "internal error: " << e.what() << '\n';
    return exit_invariant;
  }
  return 0;
}
