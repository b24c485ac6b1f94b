#pragma once

#include "monosens/big_rational.hpp"
#include "monosens/exact_fraction.hpp"
#include "monosens/truth_table.hpp"

#include <cstdint>
#include <functional>
#include <span>

namespace monosens
{

/// |M(6)| = 7,828,354 is the largest count we enumerate.
inline constexpr unsigned max_enumeration_variables = 6;

using MonotoneVisitor = std::function<void( const TruthTable& )>;

/// Calls `visitor` once for every monotone function of n variables and
/// returns how many there were.
///
/// f is split along its last variable into g = f(., 0) and h = f(., 1), both
/// monotone in n-1 variables with g <= h. The outer loop runs over g and the
/// inner over h, each in the (recursively defined) order of M(n-1), which
/// fixes a deterministic order. Throws std::invalid_argument for n > 6.
std::uint64_t enumerate_monotone( unsigned n, const MonotoneVisitor& visitor );

/// The share of enumerate_monotone() whose outer function g has index
/// i with i % parts == part. The parts are disjoint and cover M(n); for
/// n = 0 everything belongs to part 0.
std::uint64_t enumerate_monotone_part( unsigned n, unsigned part, unsigned parts, const MonotoneVisitor& visitor );

/// All monotone functions of n <= 5 variables as single truth-table words,
/// in enumeration order. Built once and cached.
std::span<const std::uint64_t> monotone_words( unsigned n );

/// Exact statistics of the average sensitivity over all of M(n), each
/// function weighted equally.
struct ExactStats
{
  unsigned n{ 0 };
  std::uint64_t count{ 0 };
  BigRational mean_avg_sensitivity;
  ExactFraction max_avg_sensitivity;
  ExactFraction min_avg_sensitivity;
  /// Functions with a non-empty classify_special() set; always 0 for n < 4.
  std::uint64_t special_count{ 0 };
  BigRational special_fraction;
};

/// Single pass over M(n), optionally split across `threads` workers. The
/// result does not depend on the thread count. Throws for n > 6.
ExactStats exact_stats( unsigned n, unsigned threads = 1 );

} // namespace monosens
