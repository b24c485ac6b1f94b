#pragma once

#include "monosens/exact_fraction.hpp"
#include "monosens/truth_table.hpp"

#include <cstdint>
#include <vector>

namespace monosens
{

/// Entry j-1 holds the activity of x_j.
using ActivityVector = std::vector<ExactFraction>;

/// Sorted, duplicate-free set of points of the n-cube.
struct PointSet
{
  unsigned num_vars{ 0 };
  std::vector<PointIndex> members;

  friend bool operator==( const PointSet&, const PointSet& ) = default;
};

struct ExtremalPoints
{
  PointSet minimal_ones;
  PointSet maximal_zeros;
};

/// counts[k] is the number of ones of f on layer k (points with k set bits).
struct LayerProfile
{
  std::vector<std::uint64_t> counts;

  friend bool operator==( const LayerProfile&, const LayerProfile& ) = default;
};

/// g(x) = f(x with x_j = 0) XOR f(x with x_j = 1). `j` is 1-based; x_j is
/// fictitious in the result. Throws std::out_of_range unless 1 <= j <= n.
TruthTable partial_derivative( const TruthTable& f, unsigned j );

/// Fraction of the 2^n points at which toggling x_j changes f.
/// Zero exactly when x_j is fictitious. Throws std::out_of_range for a bad j.
ExactFraction activity( const TruthTable& f, unsigned j );

ActivityVector activity_vector( const TruthTable& f );

/// Number of Hamming neighbours of x where f differs from f(x).
/// Throws std::out_of_range for x >= 2^n.
unsigned pointwise_sensitivity( const TruthTable& f, PointIndex x );

/// Sum of the activities, with denominator 2^n.
ExactFraction average_sensitivity( const TruthTable& f );

/// Mean of pointwise_sensitivity over all points, computed point by point.
/// Always equal in value to average_sensitivity(); kept as a separate path
/// for cross-checking.
ExactFraction average_pointwise_sensitivity( const TruthTable& f );

/// Checks f(x) <= f(x | e_j) on every cover edge of the cube.
bool is_monotone( const TruthTable& f );

/// Minimal ones and maximal zeros of a monotone function.
/// Throws std::invalid_argument if f is not monotone.
ExtremalPoints extremal_points( const TruthTable& f );

/// Indicator tables of the minimal ones / maximal zeros. Only meaningful for
/// monotone f; no check is performed.
TruthTable minimal_ones_table( const TruthTable& f );
TruthTable maximal_zeros_table( const TruthTable& f );

LayerProfile layer_profile( const TruthTable& f );

/// Whether toggling f at x keeps f monotone, judged from the covers of x only.
/// Throws std::out_of_range for a bad x and std::invalid_argument if f is not
/// monotone.
bool flip_preserves_monotone( const TruthTable& f, PointIndex x );

/// As flip_preserves_monotone() without validating the arguments; the result
/// is meaningless unless f is monotone and x < 2^n. O(n).
bool flip_preserves_monotone_unchecked( const TruthTable& f, PointIndex x ) noexcept;

/// f^d(x) = 1 - f(~x).
TruthTable dual( const TruthTable& f );

/// 1 iff popcount(x) >= k.
TruthTable threshold_function( unsigned num_vars, unsigned k );

/// Indicator of the points whose layer lies in [lowest, highest].
TruthTable layer_band( unsigned num_vars, unsigned lowest, unsigned highest );

} // namespace monosens
