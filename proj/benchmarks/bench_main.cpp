#include <monosens/monosens.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace monosens;

namespace
{

TruthTable random_table( unsigned n, std::uint64_t seed )
{
  std::mt19937_64 rng( seed );
  TruthTable f( n );
  for ( PointIndex p = 0; p < f.num_points(); ++p )
  {
    f.set( p, ( rng() & 1 ) != 0 );
  }
  return f;
}

void BM_ActivityVector( benchmark::State& state )
{
  const auto f = random_table( static_cast<unsigned>( state.range( 0 ) ), 1 );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( activity_vector( f ) );
  }
}
BENCHMARK( BM_ActivityVector )->Arg( 10 )->Arg( 16 )->Arg( 20 );

void BM_PointwiseSensitivity( benchmark::State& state )
{
  const auto f = random_table( static_cast<unsigned>( state.range( 0 ) ), 2 );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( average_pointwise_sensitivity( f ) );
  }
}
BENCHMARK( BM_PointwiseSensitivity )->Arg( 10 )->Arg( 16 );

void BM_IsMonotone( benchmark::State& state )
{
  const auto f = threshold_function( static_cast<unsigned>( state.range( 0 ) ), 8 );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( is_monotone( f ) );
  }
}
BENCHMARK( BM_IsMonotone )->Arg( 16 );

void BM_EnumerateFive( benchmark::State& state )
{
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( enumerate_monotone( 5, []( const TruthTable& ) {} ) );
  }
}
BENCHMARK( BM_EnumerateFive );

void BM_ChainSweep( benchmark::State& state )
{
  MonotoneChain chain( static_cast<unsigned>( state.range( 0 ) ), 7 );
  for ( auto _ : state )
  {
    chain.sweep( 1 );
  }
  benchmark::DoNotOptimize( chain.state() );
}
BENCHMARK( BM_ChainSweep )->Arg( 6 )->Arg( 10 )->Arg( 14 );

void BM_Estimator( benchmark::State& state )
{
  const auto n = static_cast<unsigned>( state.range( 0 ) );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( expected_avg_sensitivity_exact( n ) );
  }
}
BENCHMARK( BM_Estimator )->Arg( 100 )->Arg( 400 )->Arg( 401 );

} // namespace

BENCHMARK_MAIN();
