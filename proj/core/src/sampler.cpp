#include "monosens/sampler.hpp"

#include "monosens/asymptotics.hpp"
#include "monosens/boolean_function.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

namespace monosens
{

namespace
{

void require_sampler_range( unsigned n )
{
  if ( n < min_sampler_variables || n > max_sampler_variables )
  {
    throw std::invalid_argument( "sampler supports 2 <= n <= 20, got " + std::to_string( n ) );
  }
}

std::uint64_t splitmix64( std::uint64_t x ) noexcept
{
  x += 0x9e3779b97f4a7c15ull;
  x = ( x ^ ( x >> 30 ) ) * 0xbf58476d1ce4e5b9ull;
  x = ( x ^ ( x >> 27 ) ) * 0x94d049bb133111ebull;
  return x ^ ( x >> 31 );
}

struct ChainSamples
{
  std::vector<double> sensitivities;
  std::uint64_t special{ 0 };
};

ChainSamples run_chain( unsigned n, const ChainConfig& cfg, std::uint32_t chain_index )
{
  MonotoneChain chain( n, derive_chain_seed( cfg.seed, chain_index ) );
  chain.sweep( cfg.burn_in_sweeps );
  ChainSamples out;
  out.sensitivities.reserve( cfg.samples_per_chain );
  for ( std::uint32_t i = 0; i < cfg.samples_per_chain; ++i )
  {
    chain.sweep( cfg.thinning_sweeps );
    out.sensitivities.push_back( average_sensitivity( chain.state() ).to_double() );
    if ( n >= 4 && !classify_special_unchecked( chain.state() ).empty() )
    {
      ++out.special;
    }
  }
  return out;
}

double sample_variance( std::span<const double> values, double mean )
{
  double sum = 0;
  for ( auto v : values )
  {
    sum += ( v - mean ) * ( v - mean );
  }
  return values.size() > 1 ? sum / static_cast<double>( values.size() - 1 ) : 0.0;
}

double mean_of( std::span<const double> values )
{
  double sum = 0;
  for ( auto v : values )
  {
    sum += v;
  }
  return values.empty() ? 0.0 : sum / static_cast<double>( values.size() );
}

} // namespace

void validate( const ChainConfig& cfg )
{
  if ( cfg.burn_in_sweeps == 0 || cfg.thinning_sweeps == 0 || cfg.samples_per_chain == 0 )
  {
    throw std::invalid_argument( "chain config: burn-in, thinning and samples must be positive" );
  }
  if ( cfg.chains < 2 )
  {
    throw std::invalid_argument( "chain config: at least 2 chains are required for r_hat" );
  }
}

std::uint64_t derive_chain_seed( std::uint64_t seed, std::uint32_t chain_index ) noexcept
{
  return splitmix64( seed + 0x9e3779b97f4a7c15ull * ( std::uint64_t{ chain_index } + 1 ) );
}

MonotoneChain::MonotoneChain( unsigned n, std::uint64_t chain_seed )
    : state_( ( require_sampler_range( n ), threshold_function( n, ( n + 1 ) / 2 ) ) ),
      rng_( chain_seed ),
      shift_( 64u - n )
{
}

bool MonotoneChain::step()
{
  const auto x = static_cast<PointIndex>( rng_() >> shift_ );
  ++proposals_;
  if ( !flip_preserves_monotone_unchecked( state_, x ) )
  {
    return false;
  }
  state_.flip( x );
  ++accepted_;
#ifndef NDEBUG
  if ( accepted_ % 1000 == 0 )
  {
    assert( is_monotone( state_ ) );
  }
#endif
  return true;
}

void MonotoneChain::sweep( std::uint64_t count )
{
  const std::uint64_t total = count * state_.num_points();
  for ( std::uint64_t i = 0; i < total; ++i )
  {
    step();
  }
}

TruthTable mcmc_sample( unsigned n, const ChainConfig& cfg )
{
  require_sampler_range( n );
  validate( cfg );
  MonotoneChain chain( n, derive_chain_seed( cfg.seed, 0 ) );
  chain.sweep( cfg.burn_in_sweeps );
  return chain.state();
}

double gelman_rubin( std::span<const std::vector<double>> chains )
{
  if ( chains.size() < 2 )
  {
    throw std::invalid_argument( "gelman_rubin: need at least two chains" );
  }
  const auto length = chains.front().size();
  if ( length < 2 || std::any_of( chains.begin(), chains.end(), [&]( const auto& c ) { return c.size() != length; } ) )
  {
    throw std::invalid_argument( "gelman_rubin: chains must have equal length >= 2" );
  }

  std::vector<double> means;
  means.reserve( chains.size() );
  double within = 0;
  for ( const auto& chain : chains )
  {
    const double m = mean_of( chain );
    means.push_back( m );
    within += sample_variance( chain, m );
  }
  within /= static_cast<double>( chains.size() );
  const double between_over_length = sample_variance( means, mean_of( means ) );

  const double l = static_cast<double>( length );
  const double pooled = ( l - 1 ) / l * within + between_over_length;
  if ( within == 0 )
  {
    return between_over_length == 0 ? 1.0 : std::numeric_limits<double>::infinity();
  }
  return std::sqrt( pooled / within );
}

Estimate monte_carlo_stats( unsigned n, const ChainConfig& cfg, unsigned threads )
{
  require_sampler_range( n );
  validate( cfg );
  threads = std::clamp( threads, 1u, cfg.chains );

  std::vector<ChainSamples> results( cfg.chains );
  for ( std::uint32_t first = 0; first < cfg.chains; first += threads )
  {
    const auto last = std::min<std::uint32_t>( cfg.chains, first + threads );
    if ( last - first == 1 )
    {
      results[first] = run_chain( n, cfg, first );
      continue;
    }
    std::vector<std::jthread> workers;
    for ( auto c = first; c < last; ++c )
    {
      workers.emplace_back( [&results, &cfg, n, c] { results[c] = run_chain( n, cfg, c ); } );
    }
  }

  Estimate est;
  std::vector<std::vector<double>> per_chain;
  std::vector<double> all;
  std::uint64_t special = 0;
  for ( auto& r : results )
  {
    est.chain_means.push_back( mean_of( r.sensitivities ) );
    all.insert( all.end(), r.sensitivities.begin(), r.sensitivities.end() );
    special += r.special;
    per_chain.push_back( std::move( r.sensitivities ) );
  }
  est.n_samples = all.size();
  est.mean = mean_of( all );
  est.standard_error = std::sqrt( sample_variance( all, est.mean ) / static_cast<double>( all.size() ) );
  est.special_fraction_estimate = static_cast<double>( special ) / static_cast<double>( all.size() );
  est.r_hat = cfg.samples_per_chain >= 2 ? gelman_rubin( per_chain ) : std::numeric_limits<double>::quiet_NaN();
  est.converged = est.r_hat <= r_hat_threshold;
  return est;
}

} // namespace monosens
