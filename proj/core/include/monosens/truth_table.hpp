#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace monosens
{

/// Index of a point of the n-cube. Variable x_j (1-based) is bit j-1, so x_1
/// is the least significant bit and x XOR e_j is `x ^ (1u << (j - 1))`.
using PointIndex = std::uint32_t;

inline constexpr unsigned max_variables = 24;

/// Bit-packed truth table of a Boolean function of n <= 24 variables.
///
/// Bit i of the table holds f at PointIndex i. Storage is one 64-bit word for
/// n <= 6 and 2^(n-6) words otherwise; bits at positions >= 2^n are always
/// zero, so two tables compare equal exactly when they represent the same
/// function of the same number of variables.
class TruthTable
{
public:
  using word_type = std::uint64_t;
  using storage_type = boost::container::small_vector<word_type, 1>;

  /// Constant zero of zero variables.
  TruthTable() : TruthTable( 0u ) {}

  /// Constant zero of `num_vars` variables. Throws std::invalid_argument for n > 24.
  explicit TruthTable( unsigned num_vars );

  static TruthTable constant( unsigned num_vars, bool value );

  /// Builds a table from raw words; bits beyond 2^n are cleared.
  /// Throws std::invalid_argument if the word count does not match n.
  static TruthTable from_words( unsigned num_vars, std::span<const word_type> words );

  template<typename Predicate>
  static TruthTable from_predicate( unsigned num_vars, Predicate&& predicate )
  {
    TruthTable table( num_vars );
    for ( std::uint64_t x = 0; x < table.num_points(); ++x )
    {
      if ( predicate( static_cast<PointIndex>( x ) ) )
      {
        table.set( static_cast<PointIndex>( x ), true );
      }
    }
    return table;
  }

  [[nodiscard]] unsigned num_vars() const noexcept { return num_vars_; }
  [[nodiscard]] std::uint64_t num_points() const noexcept { return std::uint64_t{ 1 } << num_vars_; }
  [[nodiscard]] std::size_t num_words() const noexcept { return words_.size(); }
  [[nodiscard]] std::span<const word_type> words() const noexcept { return { words_.data(), words_.size() }; }

  /// Mask of the valid bits in every word (all ones for n >= 6).
  [[nodiscard]] word_type word_mask() const noexcept;

  [[nodiscard]] bool get( PointIndex x ) const noexcept
  {
    return ( ( words_[x >> 6] >> ( x & 63u ) ) & 1u ) != 0;
  }

  void set( PointIndex x, bool value ) noexcept
  {
    const word_type bit = word_type{ 1 } << ( x & 63u );
    if ( value )
    {
      words_[x >> 6] |= bit;
    }
    else
    {
      words_[x >> 6] &= ~bit;
    }
  }

  void flip( PointIndex x ) noexcept { words_[x >> 6] ^= word_type{ 1 } << ( x & 63u ); }

  [[nodiscard]] std::uint64_t count_ones() const noexcept;

  [[nodiscard]] TruthTable operator~() const;
  TruthTable& operator&=( const TruthTable& other );
  TruthTable& operator|=( const TruthTable& other );
  TruthTable& operator^=( const TruthTable& other );

  friend TruthTable operator&( TruthTable lhs, const TruthTable& rhs ) { return lhs &= rhs; }
  friend TruthTable operator|( TruthTable lhs, const TruthTable& rhs ) { return lhs |= rhs; }
  friend TruthTable operator^( TruthTable lhs, const TruthTable& rhs ) { return lhs ^= rhs; }

  friend bool operator==( const TruthTable& lhs, const TruthTable& rhs ) noexcept
  {
    return lhs.num_vars_ == rhs.num_vars_ && lhs.words_ == rhs.words_;
  }

private:
  void require_same_arity( const TruthTable& other ) const;

  unsigned num_vars_;
  storage_type words_;
};

/// Parses a hex literal whose bit i is f at point i (e.g. "e8" is MAJ3).
/// At most max(1, 2^n / 4) digits are accepted, upper or lower case.
/// Throws std::invalid_argument on bad characters, too many digits, a value
/// of 2^(2^n) or more, or n > 24.
TruthTable parse_truth_table( std::string_view text, unsigned num_vars );

/// Lowercase hex, zero-padded to exactly max(1, 2^n / 4) digits.
std::string to_hex( const TruthTable& table );

/// Number of hex digits used for an n-variable table.
std::size_t hex_width( unsigned num_vars ) noexcept;

} // namespace monosens
