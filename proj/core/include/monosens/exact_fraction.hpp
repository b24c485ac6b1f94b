#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace monosens
{

/// Non-negative dyadic rational `numerator / 2^log2_denominator`.
///
/// Activities and average sensitivities of an n-variable function are always
/// of this form with denominator 2^n, so they are stored exactly. Equality
/// and ordering are value-based: 2/4 == 1/2. Representations are kept as
/// constructed; call reduced() for the canonical form.
class ExactFraction
{
public:
  static constexpr std::uint32_t max_log2_denominator = 63;

  constexpr ExactFraction() = default;

  /// Throws std::invalid_argument if log2_denominator exceeds 63.
  ExactFraction( std::uint64_t numerator, std::uint32_t log2_denominator );

  [[nodiscard]] std::uint64_t numerator() const noexcept { return numerator_; }
  [[nodiscard]] std::uint32_t log2_denominator() const noexcept { return log2_denominator_; }

  /// Same value with all common factors of two removed.
  [[nodiscard]] ExactFraction reduced() const noexcept;

  [[nodiscard]] double to_double() const noexcept;

  /// "num/den" with the denominator written out, e.g. "3/2".
  [[nodiscard]] std::string to_string() const;

  ExactFraction& operator+=( const ExactFraction& other );

  friend ExactFraction operator+( ExactFraction lhs, const ExactFraction& rhs )
  {
    lhs += rhs;
    return lhs;
  }

  friend bool operator==( const ExactFraction& lhs, const ExactFraction& rhs ) noexcept;
  friend std::strong_ordering operator<=>( const ExactFraction& lhs, const ExactFraction& rhs ) noexcept;

private:
  std::uint64_t numerator_{ 0 };
  std::uint32_t log2_denominator_{ 0 };
};

} // namespace monosens
