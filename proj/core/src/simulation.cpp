#include "ar2/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ar2/error.hpp"

namespace ar2 {

std::string_view to_string(SampleGenerator generator) noexcept {
    switch (generator) {
        case SampleGenerator::RecursiveAR: return "RecursiveAR";
        case SampleGenerator::TruncatedMA: return "TruncatedMA";
    }
    return "unknown";
}

std::vector<double> run_recursion(const AR2Params& params, std::span<const double> innovations,
                                  std::size_t burn_in) {
    if (burn_in >= innovations.size()) {
        throw std::invalid_argument("burn-in must be shorter than the innovation sequence");
    }
    std::vector<double> out;
    out.reserve(innovations.size() - burn_in);
    double lag1 = 0.0;
    double lag2 = 0.0;
    for (std::size_t t = 0; t < innovations.size(); ++t) {
        // Same operation order as horadam::recursive, so a unit impulse
        // reproduces it bit for bit.
        const double y = params.phi1 * lag1 + params.phi2 * lag2 + innovations[t];
        lag2 = lag1;
        lag1 = y;
        if (t >= burn_in) out.push_back(y);
    }
    return out;
}

std::vector<double> run_moving_average(std::span<const double> psi,
                                       std::span<const double> innovations) {
    if (psi.empty()) throw std::invalid_argument("empty impulse response");
    const std::size_t order = psi.size() - 1;
    if (order >= innovations.size()) {
        throw DomainError("MA window of " + std::to_string(psi.size()) +
                          " terms is longer than the noise sequence");
    }
    std::vector<double> out(innovations.size() - order);
    for (std::size_t t = order; t < innovations.size(); ++t) {
        double acc = 0.0;
        for (std::size_t u = 0; u <= order; ++u) acc += psi[u] * innovations[t - u];
        out[t - order] = acc;
    }
    return out;
}

TimeSeriesSample simulate_recursive(const AR2Params& params, const noise::NoiseSpec& spec,
                                    std::size_t burn_in) {
    validate(params);
    if (burn_in >= spec.length) throw std::invalid_argument("burn-in must be less than the noise length");
    const auto eps = noise::white_noise(spec);
    return {run_recursion(params, eps, burn_in), params, spec, burn_in, SampleGenerator::RecursiveAR};
}

TimeSeriesSample simulate_ma(const AR2Params& params, const noise::NoiseSpec& spec,
                             const ImpulseResponse& ir) {
    validate(params);
    if (ir.params.phi1 != params.phi1 || ir.params.phi2 != params.phi2) {
        throw std::invalid_argument("impulse response was computed for different AR coefficients");
    }
    if (ir.order >= spec.length) {
        throw DomainError("truncation order " + std::to_string(ir.order) +
                          " needs more than the " + std::to_string(spec.length) + " noise draws");
    }
    const auto eps = noise::white_noise(spec);
    return {run_moving_average(ir.psi, eps), params, spec, ir.order, SampleGenerator::TruncatedMA};
}

std::size_t default_burn_in(const AR2Params& params) {
    // Explosive models have no transient to wait out.
    if (!is_stationary(params).stationary) return 0;
    return truncation_order(params, 1e-12);
}

double simulator_agreement_bound(const AR2Params& params, std::size_t order, double max_abs_noise) {
    return max_abs_noise * coefficient_envelope(params).absolute_tail(order + 1);
}

std::vector<double> sample_autocovariance(std::span<const double> values, std::size_t max_lag) {
    const std::size_t n = values.size();
    if (n <= max_lag + 1) throw std::invalid_argument("sample too short for the requested lag");
    long double total = 0.0L;
    for (double v : values) total += v;
    const double mean = static_cast<double>(total / static_cast<long double>(n));
    std::vector<double> centered(n);
    std::transform(values.begin(), values.end(), centered.begin(), [mean](double v) { return v - mean; });

    std::vector<double> gamma(max_lag + 1);
    for (std::size_t h = 0; h <= max_lag; ++h) {
        long double acc = 0.0L;
        for (std::size_t t = 0; t + h < n; ++t) acc += static_cast<long double>(centered[t]) * centered[t + h];
        gamma[h] = static_cast<double>(acc / static_cast<long double>(n));
    }
    // The 1/n estimator is positive semidefinite.
    for (std::size_t h = 1; h <= max_lag; ++h) {
        if (std::fabs(gamma[h]) > gamma[0] * (1.0 + 1e-12)) {
            throw std::logic_error("sample autocovariance exceeds its lag-0 value");
        }
    }
    return gamma;
}

AcfTable empirical_acf(const TimeSeriesSample& sample, std::size_t max_lag) {
    return {sample.params, sample_autocovariance(sample.values, max_lag), AcfSource::Empirical};
}

double bartlett_standard_error(const AR2Params& params, std::size_t lag, std::size_t n) {
    if (n == 0) throw std::invalid_argument("sample length must be positive");
    const std::size_t reach = truncation_order(params, 1e-20 * params.sigma * params.sigma) + 1;
    const auto gamma = acf_yule_walker(params, reach + lag).gamma;
    auto g = [&](long long k) {
        const auto a = static_cast<std::size_t>(k < 0 ? -k : k);
        return a < gamma.size() ? gamma[a] : 0.0;
    };
    const auto h = static_cast<long long>(lag);
    long double acc = 0.0L;
    for (long long k = -static_cast<long long>(reach); k <= static_cast<long long>(reach); ++k) {
        acc += static_cast<long double>(g(k)) * g(k) + static_cast<long double>(g(k + h)) * g(k - h);
    }
    return std::sqrt(static_cast<double>(acc) / static_cast<double>(n));
}

}  // namespace ar2
