#include "ar2/linear_process.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ar2/error.hpp"
#include "ar2/horadam.hpp"

namespace ar2 {

namespace {

constexpr double infinity = std::numeric_limits<double>::infinity();

void require_stationary(const AR2Params& params, const char* what) {
    const auto st = is_stationary(params);
    if (!st.stationary) {
        throw DomainError(std::string(what) + ": model is not stationary (max root modulus " +
                          std::to_string(1.0 - st.margin) + "), no l2 representation exists");
    }
}

// Smallest n in [0, max_truncation_order] with ok(n), for ok monotone in n.
template <typename Pred>
std::size_t smallest_order(Pred ok, const char* what) {
    if (!ok(max_truncation_order)) {
        throw DomainError(std::string(what) + ": required truncation order exceeds " +
                          std::to_string(max_truncation_order) + " (too close to the unit circle)");
    }
    std::size_t lo = 0, hi = max_truncation_order;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (ok(mid)) hi = mid; else lo = mid + 1;
    }
    return lo;
}

}  // namespace

std::string_view to_string(CoefficientMethod method) noexcept {
    switch (method) {
        case CoefficientMethod::Recursion: return "recursion";
        case CoefficientMethod::ClosedForm: return "closed";
        case CoefficientMethod::PartialFractions: return "pf";
        case CoefficientMethod::CauchyProduct: return "cauchy";
    }
    return "unknown";
}

std::string_view to_string(AcfSource source) noexcept {
    switch (source) {
        case AcfSource::MaSum: return "MaSum";
        case AcfSource::YuleWalker: return "YuleWalker";
        case AcfSource::Empirical: return "Empirical";
    }
    return "unknown";
}

// Covers rounding in the closed-form sums, which are tight for AR(1).
constexpr double rounding_slack = 1.0 + 1e-12;

double CoefficientEnvelope::squared_tail(std::size_t start) const {
    if (rho == 0.0) return start == 0 ? 1.0 : 0.0;
    const double x = rho * rho;
    const double xm = std::pow(x, static_cast<double>(start));
    const double a = static_cast<double>(start) + 1.0;
    const double g = 1.0 - x;
    // sum_{j>=0} (a + j)^2 x^j = a^2/g + 2 a x/g^2 + x (1 + x)/g^3
    const double linear = xm * (a * a / g + 2.0 * a * x / (g * g) + x * (1.0 + x) / (g * g * g));
    const double flat = std::isinf(k) ? infinity : k * k * xm / g;
    return rounding_slack * std::min(linear, flat);
}

double CoefficientEnvelope::absolute_tail(std::size_t start) const {
    if (rho == 0.0) return start == 0 ? 1.0 : 0.0;
    const double rm = std::pow(rho, static_cast<double>(start));
    const double a = static_cast<double>(start) + 1.0;
    const double g = 1.0 - rho;
    const double linear = rm * (a / g + rho / (g * g));
    const double flat = std::isinf(k) ? infinity : k * rm / g;
    return rounding_slack * std::min(linear, flat);
}

double CoefficientEnvelope::bound(std::size_t u) const {
    if (rho == 0.0) return u == 0 ? 1.0 : 0.0;
    return rounding_slack * std::pow(rho, static_cast<double>(u)) * std::min(static_cast<double>(u) + 1.0, k);
}

CoefficientEnvelope coefficient_envelope(const AR2Params& params) {
    require_stationary(params, "coefficient envelope");
    const auto roots = characteristic_roots(params);
    CoefficientEnvelope env{roots.max_modulus(), infinity};
    const double gap = std::abs(roots.c1 - roots.c2);
    if (roots.kind == RootKind::RepeatedReal || gap < detail::near_repeated_cutoff * env.rho) {
        return env;
    }
    if (roots.kind == RootKind::ComplexConjugate) {
        env.k = std::abs(roots.c1) / std::fabs(roots.c1.imag());  // 1 / sin(theta)
        return env;
    }
    const double c1 = roots.c1.real();
    const double c2 = roots.c2.real();
    if (c2 == 0.0 || c2 / c1 < 0.0) {
        env.k = 1.0;
    } else {
        env.k = c1 / (c1 - c2);  // 1 / (1 - q)
    }
    return env;
}

double tail_bound(const AR2Params& params, std::size_t order) {
    validate(params);
    if (!is_stationary(params).stationary) return infinity;
    return params.sigma * params.sigma * coefficient_envelope(params).squared_tail(order + 1);
}

std::size_t truncation_order(const AR2Params& params, double tol) {
    validate(params);
    if (!(tol > 0.0)) throw std::invalid_argument("truncation tolerance must be positive");
    const auto env = coefficient_envelope(params);
    const double s2 = params.sigma * params.sigma;
    return smallest_order([&](std::size_t u) { return s2 * env.squared_tail(u + 1) <= tol; },
                          "truncation_order");
}

ImpulseResponse impulse_response(const AR2Params& params, std::size_t order,
                                 CoefficientMethod method) {
    validate(params);
    const horadam::Params hp{params.phi1, params.phi2};
    ImpulseResponse ir{params, order, {}, 0.0, method};
    switch (method) {
        case CoefficientMethod::Recursion:
            ir.psi = horadam::recursive(hp, order).values;
            break;
        case CoefficientMethod::ClosedForm:
            ir.psi = horadam::closed_form_sequence(hp, order).values;
            break;
        case CoefficientMethod::PartialFractions:
        case CoefficientMethod::CauchyProduct: {
            const auto roots = characteristic_roots(params);
            ir.psi.resize(order + 1);
            for (std::size_t u = 0; u <= order; ++u) {
                ir.psi[u] = method == CoefficientMethod::PartialFractions
                                ? psi_partial_fractions(roots, u)
                                : psi_cauchy_product(roots, u);
            }
            break;
        }
    }
    ir.tail_bound = tail_bound(params, order);
    return ir;
}

double acf_truncation_error(const AR2Params& params, std::size_t order, std::size_t lag) {
    validate(params);
    if (!is_stationary(params).stationary) return infinity;
    const auto env = coefficient_envelope(params);
    // Missing terms: sum_{u > order - lag} psi_u psi_{u+lag}, bounded by
    // Cauchy-Schwarz on the two tails.
    const std::size_t first = order + 1 >= lag ? order + 1 - lag : 0;
    const double s2 = params.sigma * params.sigma;
    return s2 * std::sqrt(env.squared_tail(first) * env.squared_tail(order + 1));
}

std::size_t acf_required_order(const AR2Params& params, std::size_t max_lag, double gate) {
    validate(params);
    require_stationary(params, "acf_required_order");
    if (!(gate > 0.0)) throw std::invalid_argument("acf accuracy gate must be positive");
    const double limit = gate * params.sigma * params.sigma;
    return smallest_order(
        [&](std::size_t u) { return acf_truncation_error(params, u, max_lag) <= limit; },
        "acf_required_order");
}

AcfTable acf_from_ma(const ImpulseResponse& ir, std::size_t max_lag) {
    const auto& p = ir.params;
    validate(p);
    if (!std::isfinite(ir.tail_bound)) {
        throw DomainError("acf_from_ma: impulse response has no finite tail bound (non-stationary model)");
    }
    const double s2 = p.sigma * p.sigma;
    for (std::size_t h = 0; h <= max_lag; ++h) {
        if (acf_truncation_error(p, ir.order, h) > acf_accuracy_gate * s2) {
            const std::size_t need = acf_required_order(p, max_lag);
            throw TruncationError("acf_from_ma: truncation order " + std::to_string(ir.order) +
                                      " too small for lag " + std::to_string(h) +
                                      "; need order >= " + std::to_string(need),
                                  need);
        }
    }
    AcfTable table{p, std::vector<double>(max_lag + 1, 0.0), AcfSource::MaSum};
    const auto& psi = ir.psi;
    for (std::size_t h = 0; h <= max_lag && h <= ir.order; ++h) {
        long double acc = 0.0L;
        for (std::size_t u = 0; u + h <= ir.order; ++u) {
            acc += static_cast<long double>(psi[u]) * psi[u + h];
        }
        table.gamma[h] = s2 * static_cast<double>(acc);
    }
    return table;
}

AcfTable acf_yule_walker(const AR2Params& params, std::size_t max_lag) {
    validate(params);
    require_stationary(params, "acf_yule_walker");
    const double phi1 = params.phi1;
    const double phi2 = params.phi2;
    AcfTable table{params, std::vector<double>(max_lag + 1), AcfSource::YuleWalker};
    auto& g = table.gamma;
    g[0] = params.sigma * params.sigma * (1.0 - phi2) /
           ((1.0 + phi2) * ((1.0 - phi2) * (1.0 - phi2) - phi1 * phi1));
    if (max_lag >= 1) g[1] = phi1 * g[0] / (1.0 - phi2);
    for (std::size_t h = 2; h <= max_lag; ++h) g[h] = phi1 * g[h - 1] + phi2 * g[h - 2];
    return table;
}

double l2_diagnostic(const ImpulseResponse& ir) {
    long double acc = 0.0L;
    for (double v : ir.psi) acc += static_cast<long double>(v) * v;
    return static_cast<double>(acc);
}

}  // namespace ar2
