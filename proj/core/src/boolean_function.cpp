#include "monosens/boolean_function.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace monosens
{

namespace
{

using word_type = TruthTable::word_type;

// Lanes where bit b of the point index is clear, for b < 6.
constexpr std::array<word_type, 6> low_half_masks = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull };

// Calls op(lo, hi) on aligned lanes along variable bit b: lo holds f where
// bit b is clear and hi holds f at the partner point with bit b set. op
// returns the new (lo, hi) lanes, which are scattered back into a table.
template<typename Op>
TruthTable map_pairs( const TruthTable& f, unsigned b, Op&& op )
{
  const auto in = f.words();
  TruthTable::storage_type out( in.size(), 0u );
  if ( b < 6 )
  {
    const word_type m = low_half_masks[b];
    const unsigned shift = 1u << b;
    for ( std::size_t i = 0; i < in.size(); ++i )
    {
      const auto [lo, hi] = op( in[i] & m, ( in[i] >> shift ) & m );
      out[i] = ( lo & m ) | ( ( hi & m ) << shift );
    }
  }
  else
  {
    const std::size_t stride = std::size_t{ 1 } << ( b - 6 );
    for ( std::size_t i = 0; i < in.size(); ++i )
    {
      if ( ( i & stride ) == 0 )
      {
        const auto [lo, hi] = op( in[i], in[i + stride] );
        out[i] = lo;
        out[i + stride] = hi;
      }
    }
  }
  return TruthTable::from_words( f.num_vars(), { out.data(), out.size() } );
}

template<typename Pred>
bool all_pairs( const TruthTable& f, unsigned b, Pred&& pred )
{
  const auto in = f.words();
  if ( b < 6 )
  {
    const word_type m = low_half_masks[b];
    const unsigned shift = 1u << b;
    for ( auto w : in )
    {
      if ( !pred( w & m, ( w >> shift ) & m ) )
      {
        return false;
      }
    }
    return true;
  }
  const std::size_t stride = std::size_t{ 1 } << ( b - 6 );
  for ( std::size_t i = 0; i < in.size(); ++i )
  {
    if ( ( i & stride ) == 0 && !pred( in[i], in[i + stride] ) )
    {
      return false;
    }
  }
  return true;
}

void require_variable( const TruthTable& f, unsigned j )
{
  if ( j < 1 || j > f.num_vars() )
  {
    throw std::out_of_range( "variable index " + std::to_string( j ) + " outside 1.." +
                             std::to_string( f.num_vars() ) );
  }
}

void require_point( const TruthTable& f, PointIndex x )
{
  if ( x >= f.num_points() )
  {
    throw std::out_of_range( "point " + std::to_string( x ) + " outside the " +
                             std::to_string( f.num_vars() ) + "-cube" );
  }
}

PointSet to_point_set( const TruthTable& indicator )
{
  PointSet set{ indicator.num_vars(), {} };
  set.members.reserve( indicator.count_ones() );
  const auto words = indicator.words();
  for ( std::size_t i = 0; i < words.size(); ++i )
  {
    for ( auto w = words[i]; w != 0; w &= w - 1 )
    {
      set.members.push_back( static_cast<PointIndex>( i * 64 + static_cast<std::size_t>( std::countr_zero( w ) ) ) );
    }
  }
  return set;
}

} // namespace

TruthTable partial_derivative( const TruthTable& f, unsigned j )
{
  require_variable( f, j );
  return map_pairs( f, j - 1, []( word_type lo, word_type hi ) {
    const auto d = lo ^ hi;
    return std::pair{ d, d };
  } );
}

ExactFraction activity( const TruthTable& f, unsigned j )
{
  return { partial_derivative( f, j ).count_ones(), f.num_vars() };
}

ActivityVector activity_vector( const TruthTable& f )
{
  ActivityVector result;
  result.reserve( f.num_vars() );
  for ( unsigned j = 1; j <= f.num_vars(); ++j )
  {
    result.push_back( activity( f, j ) );
  }
  return result;
}

unsigned pointwise_sensitivity( const TruthTable& f, PointIndex x )
{
  require_point( f, x );
  const bool value = f.get( x );
  unsigned count = 0;
  for ( unsigned i = 0; i < f.num_vars(); ++i )
  {
    count += f.get( x ^ ( PointIndex{ 1 } << i ) ) != value ? 1u : 0u;
  }
  return count;
}

ExactFraction average_sensitivity( const TruthTable& f )
{
  ExactFraction sum{ 0, f.num_vars() };
  for ( unsigned j = 1; j <= f.num_vars(); ++j )
  {
    sum += activity( f, j );
  }
  return sum;
}

ExactFraction average_pointwise_sensitivity( const TruthTable& f )
{
  std::uint64_t total = 0;
  for ( std::uint64_t x = 0; x < f.num_points(); ++x )
  {
    total += pointwise_sensitivity( f, static_cast<PointIndex>( x ) );
  }
  return { total, f.num_vars() };
}

bool is_monotone( const TruthTable& f )
{
  for ( unsigned b = 0; b < f.num_vars(); ++b )
  {
    if ( !all_pairs( f, b, []( word_type lo, word_type hi ) { return ( lo & ~hi ) == 0; } ) )
    {
      return false;
    }
  }
  return true;
}

TruthTable minimal_ones_table( const TruthTable& f )
{
  TruthTable covered( f.num_vars() );
  for ( unsigned b = 0; b < f.num_vars(); ++b )
  {
    covered |= map_pairs( f, b, []( word_type lo, word_type hi ) { return std::pair{ word_type{ 0 }, lo & hi }; } );
  }
  return f & ~covered;
}

TruthTable maximal_zeros_table( const TruthTable& f )
{
  TruthTable covered( f.num_vars() );
  for ( unsigned b = 0; b < f.num_vars(); ++b )
  {
    covered |= map_pairs( f, b, []( word_type lo, word_type hi ) { return std::pair{ ~lo & ~hi, word_type{ 0 } }; } );
  }
  return ~f & ~covered;
}

ExtremalPoints extremal_points( const TruthTable& f )
{
  if ( !is_monotone( f ) )
  {
    throw std::invalid_argument( "extremal points are defined for monotone functions only" );
  }
  return { to_point_set( minimal_ones_table( f ) ), to_point_set( maximal_zeros_table( f ) ) };
}

LayerProfile layer_profile( const TruthTable& f )
{
  LayerProfile profile{ std::vector<std::uint64_t>( f.num_vars() + 1, 0u ) };
  const auto words = f.words();
  for ( std::size_t i = 0; i < words.size(); ++i )
  {
    for ( auto w = words[i]; w != 0; w &= w - 1 )
    {
      const auto x = i * 64 + static_cast<std::size_t>( std::countr_zero( w ) );
      ++profile.counts[static_cast<std::size_t>( std::popcount( x ) )];
    }
  }
  return profile;
}

bool flip_preserves_monotone_unchecked( const TruthTable& f, PointIndex x ) noexcept
{
  // 0 -> 1 needs every upper cover to be 1; 1 -> 0 needs every lower cover to be 0.
  const bool value = f.get( x );
  for ( unsigned i = 0; i < f.num_vars(); ++i )
  {
    const PointIndex bit = PointIndex{ 1 } << i;
    const bool upward = ( x & bit ) == 0;
    if ( upward != value && f.get( x ^ bit ) == value )
    {
      return false;
    }
  }
  return true;
}

bool flip_preserves_monotone( const TruthTable& f, PointIndex x )
{
  require_point( f, x );
  if ( !is_monotone( f ) )
  {
    throw std::invalid_argument( "flip_preserves_monotone: input function is not monotone" );
  }
  return flip_preserves_monotone_unchecked( f, x );
}

TruthTable dual( const TruthTable& f )
{
  const auto top = static_cast<PointIndex>( f.num_points() - 1 );
  return TruthTable::from_predicate( f.num_vars(), [&]( PointIndex x ) { return !f.get( top ^ x ); } );
}

TruthTable threshold_function( unsigned num_vars, unsigned k )
{
  return TruthTable::from_predicate( num_vars, [k]( PointIndex x ) {
    return static_cast<unsigned>( std::popcount( x ) ) >= k;
  } );
}

TruthTable layer_band( unsigned num_vars, unsigned lowest, unsigned highest )
{
  return TruthTable::from_predicate( num_vars, [=]( PointIndex x ) {
    const auto layer = static_cast<unsigned>( std::popcount( x ) );
    return layer >= lowest && layer <= highest;
  } );
}

} // namespace monosens
