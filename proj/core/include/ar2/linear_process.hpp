#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "ar2/ar2_model.hpp"

namespace ar2 {

enum class CoefficientMethod { Recursion, ClosedForm, PartialFractions, CauchyProduct };

[[nodiscard]] std::string_view to_string(CoefficientMethod method) noexcept;

/// Truncated MA(inf) representation Y_t ~ sum_{u<=order} psi_u eps_{t-u}.
struct ImpulseResponse {
    AR2Params params;
    std::size_t order = 0;
    std::vector<double> psi;  // psi_0..psi_order, psi_0 == 1
    /// Certified bound on sigma^2 sum_{u>order} psi_u^2; +inf when the model
    /// is not stationary.
    double tail_bound = 0.0;
    CoefficientMethod method = CoefficientMethod::Recursion;
};

enum class AcfSource { MaSum, YuleWalker, Empirical };

[[nodiscard]] std::string_view to_string(AcfSource source) noexcept;

/// gamma(0..max_lag()). Only non-negative lags are stored.
struct AcfTable {
    AR2Params params;
    std::vector<double> gamma;
    AcfSource source = AcfSource::MaSum;

    [[nodiscard]] std::size_t max_lag() const noexcept { return gamma.size() - 1; }
};

// Hard cap on truncation orders near the unit circle.
inline constexpr std::size_t max_truncation_order = 1'000'000;
// acf_from_ma refuses lags whose truncation error bound exceeds this times sigma^2.
inline constexpr double acf_accuracy_gate = 1e-10;
// Gate for comparisons against Yule-Walker at relative accuracy. gamma(0) >=
// sigma^2, so the truncation error sits below rounding even for tiny gamma(h).
inline constexpr double acf_reference_gate = 1e-18;

/// Envelope |psi_u| <= rho^u * min(u + 1, K) valid for every u, where
/// rho = max root modulus and K depends on the root configuration:
///   distinct real, c2/c1 = q >= 0:  K = 1 / (1 - q)
///   distinct real, q < 0:           K = 1
///   complex pair at angle theta:    K = 1 / sin(theta)
///   repeated:                       K = inf
/// The (u + 1) factor follows from psi_u being a sum of u + 1 terms of
/// modulus at most rho^u.
struct CoefficientEnvelope {
    double rho = 0.0;
    double k = 1.0;

    /// Upper bound on sum_{u>=start} psi_u^2 (no sigma^2 factor).
    [[nodiscard]] double squared_tail(std::size_t start) const;
    /// Upper bound on sum_{u>=start} |psi_u|.
    [[nodiscard]] double absolute_tail(std::size_t start) const;
    /// Upper bound on |psi_u|.
    [[nodiscard]] double bound(std::size_t u) const;
};

/// Throws DomainError for non-stationary parameters.
[[nodiscard]] CoefficientEnvelope coefficient_envelope(const AR2Params& params);

/// sigma^2 * squared_tail(order + 1). +inf for non-stationary parameters.
[[nodiscard]] double tail_bound(const AR2Params& params, std::size_t order);

/// Smallest U whose certified tail sigma^2 sum_{u>U} psi_u^2 is <= tol.
/// Throws DomainError if the model is not stationary or U would exceed
/// max_truncation_order.
[[nodiscard]] std::size_t truncation_order(const AR2Params& params, double tol);

[[nodiscard]] ImpulseResponse impulse_response(
    const AR2Params& params, std::size_t order,
    CoefficientMethod method = CoefficientMethod::Recursion);

/// Certified bound on |gamma(h) - gamma_truncated(h)| for an MA sum truncated
/// at `order`.
[[nodiscard]] double acf_truncation_error(const AR2Params& params, std::size_t order,
                                          std::size_t lag);

/// Smallest order whose truncation error is <= gate * sigma^2 for every lag
/// up to max_lag.
[[nodiscard]] std::size_t acf_required_order(const AR2Params& params, std::size_t max_lag,
                                             double gate = acf_accuracy_gate);

/// gamma(h) = sigma^2 sum_{u=0}^{U-h} psi_u psi_{u+h}. Throws TruncationError
/// if any requested lag fails the accuracy gate.
[[nodiscard]] AcfTable acf_from_ma(const ImpulseResponse& ir, std::size_t max_lag);

/// Closed-form gamma(0), gamma(1) followed by the Yule-Walker recursion.
[[nodiscard]] AcfTable acf_yule_walker(const AR2Params& params, std::size_t max_lag);

/// Partial sum sum_{u<=U} psi_u^2.
[[nodiscard]] double l2_diagnostic(const ImpulseResponse& ir);

}  // namespace ar2
