#pragma once

#include "monosens/truth_table.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace monosens
{

inline constexpr unsigned min_sampler_variables = 2;
inline constexpr unsigned max_sampler_variables = 20;

/// Run lengths are counted in sweeps; one sweep is 2^n proposals.
struct ChainConfig
{
  std::uint64_t seed{ 1 };
  std::uint32_t burn_in_sweeps{ 64 };
  std::uint32_t thinning_sweeps{ 8 };
  std::uint32_t samples_per_chain{ 500 };
  std::uint32_t chains{ 4 };
};

/// Throws std::invalid_argument unless every count is positive and chains >= 2.
void validate( const ChainConfig& cfg );

/// Stream derivation, version 1:
///   chain_seed = splitmix64(seed + 0x9e3779b97f4a7c15 * (chain_index + 1))
/// Each chain runs std::mt19937_64 seeded with its chain seed and draws a
/// proposal point from the top n bits of every 64-bit output.
std::uint64_t derive_chain_seed( std::uint64_t seed, std::uint32_t chain_index ) noexcept;

/// Single-site Metropolis chain on M(n).
///
/// A step picks a uniform point and toggles f there when the result stays
/// monotone, otherwise it stays put. Proposals are symmetric and every
/// rejection is a self-loop, so the uniform distribution on M(n) is
/// stationary; the chain is irreducible (any monotone function reaches the
/// constant zero by removing minimal ones) and aperiodic (self-loops).
class MonotoneChain
{
public:
  /// Starts at the threshold function "popcount(x) >= ceil(n/2)".
  /// Throws std::invalid_argument unless 2 <= n <= 20.
  MonotoneChain( unsigned n, std::uint64_t chain_seed );

  /// One proposal; returns whether the state changed.
  bool step();

  void sweep( std::uint64_t count = 1 );

  [[nodiscard]] const TruthTable& state() const noexcept { return state_; }
  [[nodiscard]] std::uint64_t proposals() const noexcept { return proposals_; }
  [[nodiscard]] std::uint64_t accepted() const noexcept { return accepted_; }

private:
  TruthTable state_;
  std::mt19937_64 rng_;
  unsigned shift_;
  std::uint64_t proposals_{ 0 };
  std::uint64_t accepted_{ 0 };
};

/// State of chain 0 after cfg.burn_in_sweeps sweeps. Deterministic in (n, cfg).
TruthTable mcmc_sample( unsigned n, const ChainConfig& cfg );

/// Monte-Carlo estimate of E[s^f] over M(n).
///
/// standard_error is the sample standard deviation over all n_samples draws
/// divided by sqrt(n_samples); autocorrelation is only addressed through
/// thinning, not corrected for.
struct Estimate
{
  double mean{ 0 };
  double standard_error{ 0 };
  std::uint64_t n_samples{ 0 };
  double r_hat{ 1 };
  /// Share of samples with a non-empty classify_special() set; 0 for n < 4.
  double special_fraction_estimate{ 0 };
  /// r_hat <= 1.1
  bool converged{ true };
  std::vector<double> chain_means;
};

inline constexpr double r_hat_threshold = 1.1;

/// Runs cfg.chains independent chains (at most `threads` at a time), each
/// collecting cfg.samples_per_chain states cfg.thinning_sweeps sweeps apart
/// after burn-in. Results do not depend on `threads`.
Estimate monte_carlo_stats( unsigned n, const ChainConfig& cfg, unsigned threads = 1 );

/// Gelman-Rubin potential scale reduction sqrt(V / W) with
/// V = (L-1)/L W + B/L, W the mean within-chain variance and B/L the variance
/// of the chain means. Needs >= 2 chains of equal length >= 2. Returns 1 when
/// all draws are identical.
double gelman_rubin( std::span<const std::vector<double>> chains );

} // namespace monosens
