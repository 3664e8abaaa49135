#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "ar2/ar2_model.hpp"
#include "ar2/linear_process.hpp"
#include "ar2/noise.hpp"

namespace ar2 {

enum class SampleGenerator { RecursiveAR, TruncatedMA };

[[nodiscard]] std::string_view to_string(SampleGenerator generator) noexcept;

struct TimeSeriesSample {
    std::vector<double> values;
    AR2Params params;
    noise::NoiseSpec noise;
    /// Number of leading noise indices without an output value: the burn-in
    /// for RecursiveAR, the truncation order for TruncatedMA. values[i]
    /// corresponds to noise index offset + i.
    std::size_t offset = 0;
    SampleGenerator generator = SampleGenerator::RecursiveAR;
};

/// Y_t = phi1 Y_{t-1} + phi2 Y_{t-2} + eps_t from Y_{-1} = Y_{-2} = 0, over
/// an explicit innovation sequence. Returns Y_{burn_in}..Y_{n-1}.
[[nodiscard]] std::vector<double> run_recursion(const AR2Params& params,
                                                std::span<const double> innovations,
                                                std::size_t burn_in);

/// Y_t = sum_{u=0}^{U} psi_u eps_{t-u} for t = U..n-1.
[[nodiscard]] std::vector<double> run_moving_average(std::span<const double> psi,
                                                     std::span<const double> innovations);

/// Throws std::invalid_argument unless burn_in < spec.length.
[[nodiscard]] TimeSeriesSample simulate_recursive(const AR2Params& params,
                                                  const noise::NoiseSpec& spec,
                                                  std::size_t burn_in);

/// Throws DomainError if ir.order >= spec.length.
[[nodiscard]] TimeSeriesSample simulate_ma(const AR2Params& params,
                                           const noise::NoiseSpec& spec,
                                           const ImpulseResponse& ir);

/// Burn-in default: the truncation order for a 1e-12 tail.
[[nodiscard]] std::size_t default_burn_in(const AR2Params& params);

/// Bound on |Y_recursive(t) - Y_ma(t)| for same-noise runs when the MA is
/// truncated at `order` and the recursion starts at zero:
/// max|eps| * sum_{u>order} |psi_u|.
[[nodiscard]] double simulator_agreement_bound(const AR2Params& params, std::size_t order,
                                               double max_abs_noise);

/// Biased (1/n) sample autocovariance. Throws std::invalid_argument unless
/// values.size() > max_lag + 1.
[[nodiscard]] std::vector<double> sample_autocovariance(std::span<const double> values,
                                                        std::size_t max_lag);

[[nodiscard]] AcfTable empirical_acf(const TimeSeriesSample& sample, std::size_t max_lag);

/// Asymptotic standard error of the sample autocovariance at `lag` for a
/// Gaussian AR(2) series of length n (Bartlett):
/// n Var(gamma_hat(h)) ~ sum_k [gamma(k)^2 + gamma(k+h) gamma(k-h)].
[[nodiscard]] double bartlett_standard_error(const AR2Params& params, std::size_t lag,
                                             std::size_t n);

}  // namespace ar2
