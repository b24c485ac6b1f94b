#include "monosens/truth_table.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

namespace monosens
{

namespace
{

std::size_t words_for( unsigned num_vars ) noexcept
{
  return num_vars <= 6 ? 1u : std::size_t{ 1 } << ( num_vars - 6 );
}

int hex_value( char c ) noexcept
{
  if ( c >= '0' && c <= '9' )
  {
    return c - '0';
  }
  if ( c >= 'a' && c <= 'f' )
  {
    return c - 'a' + 10;
  }
  if ( c >= 'A' && c <= 'F' )
  {
    return c - 'A' + 10;
  }
  return -1;
}

} // namespace

TruthTable::TruthTable( unsigned num_vars ) : num_vars_( num_vars )
{
  if ( num_vars > max_variables )
  {
    throw std::invalid_argument( "truth table: at most 24 variables are supported, got " +
                                 std::to_string( num_vars ) );
  }
  words_.assign( words_for( num_vars ), 0u );
}

TruthTable TruthTable::constant( unsigned num_vars, bool value )
{
  TruthTable table( num_vars );
  if ( value )
  {
    for ( auto& w : table.words_ )
    {
      w = table.word_mask();
    }
  }
  return table;
}

TruthTable TruthTable::from_words( unsigned num_vars, std::span<const word_type> words )
{
  TruthTable table( num_vars );
  if ( words.size() != table.words_.size() )
  {
    throw std::invalid_argument( "truth table: expected " + std::to_string( table.words_.size() ) +
                                 " words for n = " + std::to_string( num_vars ) );
  }
  const auto mask = table.word_mask();
  for ( std::size_t i = 0; i < words.size(); ++i )
  {
    table.words_[i] = words[i] & mask;
  }
  return table;
}

TruthTable::word_type TruthTable::word_mask() const noexcept
{
  return num_vars_ >= 6 ? ~word_type{ 0 } : ( word_type{ 1 } << ( 1u << num_vars_ ) ) - 1u;
}

std::uint64_t TruthTable::count_ones() const noexcept
{
  std::uint64_t total = 0;
  for ( auto w : words_ )
  {
    total += static_cast<std::uint64_t>( std::popcount( w ) );
  }
  return total;
}

TruthTable TruthTable::operator~() const
{
  TruthTable result( *this );
  const auto mask = word_mask();
  for ( auto& w : result.words_ )
  {
    w = ~w & mask;
  }
  return result;
}

void TruthTable::require_same_arity( const TruthTable& other ) const
{
  if ( other.num_vars_ != num_vars_ )
  {
    throw std::invalid_argument( "truth table: operands have different variable counts" );
  }
}

TruthTable& TruthTable::operator&=( const TruthTable& other )
{
  require_same_arity( other );
  for ( std::size_t i = 0; i < words_.size(); ++i )
  {
    words_[i] &= other.words_[i];
  }
  return *this;
}

TruthTable& TruthTable::operator|=( const TruthTable& other )
{
  require_same_arity( other );
  for ( std::size_t i = 0; i < words_.size(); ++i )
  {
    words_[i] |= other.words_[i];
  }
  return *this;
}

TruthTable& TruthTable::operator^=( const TruthTable& other )
{
  require_same_arity( other );
  for ( std::size_t i = 0; i < words_.size(); ++i )
  {
    words_[i] ^= other.words_[i];
  }
  return *this;
}

std::size_t hex_width( unsigned num_vars ) noexcept
{
  return num_vars < 2 ? 1u : std::size_t{ 1 } << ( num_vars - 2 );
}

TruthTable parse_truth_table( std::string_view text, unsigned num_vars )
{
  TruthTable table( num_vars );
  if ( text.empty() )
  {
    throw std::invalid_argument( "truth table: empty hex string" );
  }
  for ( const char c : text )
  {
    if ( hex_value( c ) < 0 )
    {
      throw std::invalid_argument( std::string( "truth table: invalid hex character '" ) + c + "'" );
    }
  }
  if ( text.size() > hex_width( num_vars ) )
  {
    throw std::invalid_argument( "truth table: " + std::to_string( text.size() ) + " hex digits exceed the " +
                                 std::to_string( hex_width( num_vars ) ) + " allowed for n = " +
                                 std::to_string( num_vars ) );
  }

  std::vector<TruthTable::word_type> words( table.num_words(), 0u );
  for ( std::size_t d = 0; d < text.size(); ++d )
  {
    const char c = text[text.size() - 1 - d];
    const int value = hex_value( c );
    words[d / 16] |= static_cast<TruthTable::word_type>( value ) << ( ( d % 16 ) * 4 );
  }
  if ( ( words[0] & ~table.word_mask() ) != 0 )
  {
    throw std::invalid_argument( "truth table: value does not fit in 2^n bits for n = " +
                                 std::to_string( num_vars ) );
  }
  return TruthTable::from_words( num_vars, words );
}

std::string to_hex( const TruthTable& table )
{
  static constexpr char digits[] = "0123456789abcdef";
  const auto width = hex_width( table.num_vars() );
  const auto words = table.words();
  std::string out( width, '0' );
  for ( std::size_t d = 0; d < width; ++d )
  {
    const auto nibble = ( words[d / 16] >> ( ( d % 16 ) * 4 ) ) & 0xfu;
    out[width - 1 - d] = digits[nibble];
  }
  return out;
}

} // namespace monosens
