#pragma once

#include <monosens/monosens.hpp>

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace monosens::cli
{

/// Raised when two independent computations disagree; maps to exit code 3.
class InvariantViolation : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

struct AnalysisReport
{
  unsigned n{ 0 };
  std::string hex;
  bool monotone{ false };
  ActivityVector activities;
  ExactFraction average_sensitivity;
  std::optional<PointSet> minimal_ones;
  std::optional<PointSet> maximal_zeros;
  LayerProfile layer_profile;
  /// Absent for non-monotone f and for n < 3.
  std::optional<SpecialClassSet> special_classes;
};

AnalysisReport analyze( const TruthTable& f );
nlohmann::json to_json( const AnalysisReport& report );

/// {"num": "<decimal>", "log2_den": k, "float": x}
nlohmann::json to_json( const ExactFraction& value );

struct CurveRow
{
  unsigned n{ 0 };
  bool even{ true };
  double s_hat{ 0 };
  std::optional<double> s_hat_1;
  std::optional<double> s_hat_2;
  double sqrt_2n_over_pi{ 0 };
};

inline constexpr unsigned curve_min_n = 2;
inline constexpr unsigned curve_max_n = 400;
inline constexpr const char* curve_header = "n,parity,s_hat,s_hat_1,s_hat_2,sqrt_2n_over_pi";

CurveRow curve_row( unsigned n );

/// Header plus one row per n, '\n' line endings. Throws
/// std::invalid_argument unless 2 <= n_min <= n_max <= 400.
std::string curve_csv( unsigned n_min, unsigned n_max );

/// 12 significant digits, trailing zeros kept, locale independent.
std::string format_real( double value );

enum class VerifyMode
{
  Exact,
  Sample
};

struct VerifyReport
{
  unsigned n{ 0 };
  VerifyMode mode{ VerifyMode::Exact };
  BigRational s_hat_exact;
  double s_hat{ 0 };
  double empirical_mean{ 0 };
  std::optional<BigRational> empirical_mean_exact;
  std::optional<double> standard_error;
  double ratio{ 0 };
  std::optional<BigRational> ratio_exact;
  double special_fraction{ 0 };
  std::optional<BigRational> special_fraction_exact;
  std::uint64_t count{ 0 }; ///< |M(n)| for exact mode, samples drawn otherwise
  std::optional<double> r_hat;
  bool non_converged{ false };
};

/// Exact mode needs 2 <= n <= 6, sample mode 2 <= n <= 20; otherwise throws
/// std::invalid_argument.
VerifyReport verify( unsigned n, VerifyMode mode, const ChainConfig& cfg, unsigned threads );

std::string to_csv( const VerifyReport& report );
nlohmann::json to_json( const VerifyReport& report );

} // namespace monosens::cli
