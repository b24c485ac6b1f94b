#include "monosens/enumeration.hpp"

#include "monosens/asymptotics.hpp"
#include "monosens/boolean_function.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace monosens
{

namespace
{

void require_enumerable( unsigned n )
{
  if ( n > max_enumeration_variables )
  {
    throw std::invalid_argument( "enumeration supports n <= 6, got " + std::to_string( n ) );
  }
}

std::vector<std::uint64_t> build_next( const std::vector<std::uint64_t>& previous, unsigned n )
{
  const unsigned half = 1u << ( n - 1 );
  std::vector<std::uint64_t> next;
  for ( auto g : previous )
  {
    for ( auto h : previous )
    {
      if ( ( g & ~h ) == 0 )
      {
        next.push_back( g | ( h << half ) );
      }
    }
  }
  return next;
}

const std::array<std::vector<std::uint64_t>, max_enumeration_variables>& cached_lists()
{
  static const auto lists = [] {
    std::array<std::vector<std::uint64_t>, max_enumeration_variables> result;
    result[0] = { 0u, 1u };
    for ( unsigned n = 1; n < max_enumeration_variables; ++n )
    {
      result[n] = build_next( result[n - 1], n );
    }
    return result;
  }();
  return lists;
}

struct Accumulator
{
  std::uint64_t count{ 0 };
  std::uint64_t sensitivity_numerator_sum{ 0 };
  std::uint64_t min_numerator{ std::numeric_limits<std::uint64_t>::max() };
  std::uint64_t max_numerator{ 0 };
  std::uint64_t special_count{ 0 };

  void merge( const Accumulator& other )
  {
    count += other.count;
    sensitivity_numerator_sum += other.sensitivity_numerator_sum;
    min_numerator = std::min( min_numerator, other.min_numerator );
    max_numerator = std::max( max_numerator, other.max_numerator );
    special_count += other.special_count;
  }
};

Accumulator accumulate_part( unsigned n, unsigned part, unsigned parts )
{
  Accumulator acc;
  enumerate_monotone_part( n, part, parts, [&]( const TruthTable& f ) {
    // every average sensitivity here has denominator exactly 2^n
    const auto s = average_sensitivity( f ).numerator();
    ++acc.count;
    acc.sensitivity_numerator_sum += s;
    acc.min_numerator = std::min( acc.min_numerator, s );
    acc.max_numerator = std::max( acc.max_numerator, s );
    if ( n >= 4 && !classify_special_unchecked( f ).empty() )
    {
      ++acc.special_count;
    }
  } );
  return acc;
}

} // namespace

std::span<const std::uint64_t> monotone_words( unsigned n )
{
  if ( n >= max_enumeration_variables )
  {
    throw std::invalid_argument( "monotone_words: cached lists cover n <= 5, got " + std::to_string( n ) );
  }
  return cached_lists()[n];
}

std::uint64_t enumerate_monotone_part( unsigned n, unsigned part, unsigned parts, const MonotoneVisitor& visitor )
{
  require_enumerable( n );
  if ( parts == 0 || part >= parts )
  {
    throw std::invalid_argument( "enumerate_monotone_part: part index out of range" );
  }
  std::uint64_t count = 0;
  if ( n == 0 )
  {
    if ( part == 0 )
    {
      for ( std::uint64_t word : { 0u, 1u } )
      {
        visitor( TruthTable::from_words( 0, { &word, 1 } ) );
        ++count;
      }
    }
    return count;
  }

  const auto previous = monotone_words( n - 1 );
  const unsigned half = 1u << ( n - 1 );
  for ( std::size_t i = part; i < previous.size(); i += parts )
  {
    const auto g = previous[i];
    for ( auto h : previous )
    {
      if ( ( g & ~h ) == 0 )
      {
        const std::uint64_t word = g | ( h << half );
        visitor( TruthTable::from_words( n, { &word, 1 } ) );
        ++count;
      }
    }
  }
  return count;
}

std::uint64_t enumerate_monotone( unsigned n, const MonotoneVisitor& visitor )
{
  return enumerate_monotone_part( n, 0, 1, visitor );
}

ExactStats exact_stats( unsigned n, unsigned threads )
{
  require_enumerable( n );
  threads = std::max( 1u, threads );

  std::vector<Accumulator> parts( threads );
  if ( threads == 1 )
  {
    parts[0] = accumulate_part( n, 0, 1 );
  }
  else
  {
    std::vector<std::jthread> workers;
    workers.reserve( threads );
    for ( unsigned p = 0; p < threads; ++p )
    {
      workers.emplace_back( [&parts, n, p, threads] { parts[p] = accumulate_part( n, p, threads ); } );
    }
  }

  Accumulator total;
  for ( const auto& part : parts )
  {
    total.merge( part );
  }

  ExactStats stats;
  stats.n = n;
  stats.count = total.count;
  stats.mean_avg_sensitivity =
      BigRational( BigInt( total.sensitivity_numerator_sum ), BigInt( total.count ) << n );
  stats.min_avg_sensitivity = ExactFraction( total.min_numerator, n );
  stats.max_avg_sensitivity = ExactFraction( total.max_numerator, n );
  stats.special_count = total.special_count;
  stats.special_fraction = BigRational( BigInt( total.special_count ), BigInt( total.count ) );
  return stats;
}

} // namespace monosens
