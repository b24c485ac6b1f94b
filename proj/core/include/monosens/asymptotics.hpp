#pragma once

#include "monosens/big_rational.hpp"
#include "monosens/truth_table.hpp"

#include <cstdint>

namespace monosens
{

/// Largest n accepted by the closed-form routines below.
inline constexpr unsigned max_asymptotic_variables = 4096;

/// Selects the layer band of a special monotone function.
///
///  - Even:     minimal ones in layers n/2-1 .. n/2+1 (even n)
///  - OddLower: minimal ones in layers (n-3)/2 .. (n+1)/2 (odd n)
///  - OddUpper: minimal ones in layers (n-1)/2 .. (n+3)/2 (odd n)
enum class ParityCase
{
  Even,
  OddLower,
  OddUpper
};

const char* to_string( ParityCase parity ) noexcept;

/// Most probable parameters of a special function: r minimal ones on the
/// lowest band layer, v maximal zeros on the highest band layer, and z ones
/// on the layer in between. The *_real members carry no floors.
struct SpecialParams
{
  BigInt r_int;
  BigInt z_int;
  BigInt v_int;
  BigRational r_real;
  BigRational z_real;
  BigRational v_real;
};

/// Throws std::invalid_argument if n < 2, n exceeds the cap, or the parity
/// of n does not match `parity`.
SpecialParams special_params( unsigned n, ParityCase parity );

/// Offsets (k, t, u) around the most probable parameters for which the
/// density formula is asserted: |k|, |t| <= n 2^(n/4) and |u| <= n 2^(n/2).
struct DensityWindow
{
  long double k_max;
  long double t_max;
  long double u_max;
};

DensityWindow density_window( unsigned n );

/// Asymptotic share of M(n) taken by special functions with parameters
/// (r0 + k, z0 + u, v0 + t) in the band selected by `parity`: a Gaussian in
/// the three offsets scaled by the band's prefactor. Throws std::domain_error
/// for offsets outside density_window(n) and std::invalid_argument for a bad
/// n / parity combination.
double density_ratio( unsigned n, ParityCase parity, std::int64_t k, std::int64_t t, std::int64_t u );

/// Sub-terms of the even-n estimate, per variable x_j of a typical function.
struct EvenEstimateTerms
{
  BigRational lower_minimal_ones;   ///< minimal ones on layer n/2-1 with x_j = 1
  BigRational lower_zeros;          ///< zeros on layer n/2-1
  BigRational lower_zero_one_pairs; ///< zeros on n/2-1 with x_j = 0 whose x_j-neighbour is 1
  BigRational activity_pairs;       ///< all sensitive x_j edges, both halves of the band
  BigRational s_hat;                ///< expected average sensitivity
};

/// Throws std::invalid_argument unless n is even and 2 <= n <= cap.
EvenEstimateTerms even_estimate_terms( unsigned n );

/// n 2^-n C(n, n/2-1) (2^(-n/2-1) + 1), evaluated exactly then rounded.
double expected_avg_sensitivity_even( unsigned n );

/// Sub-terms of one odd-n band estimate. The band has a lower layer
/// (minimal ones), a middle layer with an unequal split of ones and zeros,
/// and an upper layer (maximal zeros); each member mirrors one step of the
/// derivation, transcribed without simplification.
struct OddBandTerms
{
  BigRational lower_minimal_ones;      ///< minimal ones on the lower layer with x_j = 1
  BigRational lower_zeros;             ///< zeros on the lower layer with x_j = 0
  BigRational middle_one_probability;  ///< share of ones on the middle layer
  BigRational lower_contribution;      ///< lower_minimal_ones + lower_zeros * middle_one_probability
  BigRational upper_maximal_zeros;     ///< maximal zeros on the upper layer with x_j = 0
  BigRational upper_ones;              ///< ones on the upper layer with x_j = 1
  BigRational middle_zero_probability; ///< share of zeros on the middle layer
  BigRational upper_contribution;      ///< upper_maximal_zeros + upper_ones * middle_zero_probability
  BigRational s_hat;                   ///< n 2^(-n+1) (lower_contribution + upper_contribution)
};

/// Band with minimal ones on (n-3)/2 .. (n+1)/2. Throws unless n is odd, 3 <= n <= cap.
OddBandTerms odd_lower_band_terms( unsigned n );

/// Band with minimal ones on (n-1)/2 .. (n+3)/2. Throws unless n is odd, 3 <= n <= cap.
OddBandTerms odd_upper_band_terms( unsigned n );

struct OddComponents
{
  double s_hat_1;
  double s_hat_2;
};

OddComponents expected_avg_sensitivity_odd_components( unsigned n );

/// Exact expected average sensitivity of a typical monotone function: the
/// even formula for even n, the mean of the two band estimates for odd n.
/// Throws std::invalid_argument for n < 2 or n above the cap.
BigRational expected_avg_sensitivity_exact( unsigned n );

double expected_avg_sensitivity( unsigned n );

/// Membership of a monotone function in the layer-structured class M0(n):
/// all minimal ones inside a three-layer band and f = 1 on every layer above
/// it. This is the fully specified class M0(n), not its refinement M0^1(n),
/// whose definition is not available. The two odd bands overlap, so both odd
/// flags may be set at once.
struct SpecialClassSet
{
  bool special_even{ false };
  bool special_odd_lower{ false };
  bool special_odd_upper{ false };

  [[nodiscard]] bool empty() const noexcept { return !special_even && !special_odd_lower && !special_odd_upper; }

  friend bool operator==( const SpecialClassSet&, const SpecialClassSet& ) = default;
};

/// Throws std::invalid_argument for non-monotone f or n < 3 (the bands are
/// degenerate below that).
SpecialClassSet classify_special( const TruthTable& f );

/// classify_special() without the monotonicity check.
SpecialClassSet classify_special_unchecked( const TruthTable& f );

} // namespace monosens
