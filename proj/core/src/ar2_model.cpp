#include "ar2/ar2_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ar2 {

namespace {

// The imaginary part of a computed coefficient is rounding residue; it must
// stay small against the largest term that entered the sum.
double check_real(std::complex<double> value, double scale, const char* route) {
    if (std::fabs(value.imag()) > detail::realness_tolerance * std::max(std::fabs(value.real()), scale)) {
        throw std::runtime_error(std::string(route) + ": coefficient has a non-negligible imaginary part");
    }
    return value.real();
}

double repeated_root_psi(double c, std::size_t u) {
    return static_cast<double>(u + 1) * std::pow(c, static_cast<double>(u));
}

bool near_repeated(const CharacteristicRoots& roots) {
    const double scale = std::max(std::abs(roots.c1), std::abs(roots.c2));
    return std::abs(roots.c1 - roots.c2) < detail::near_repeated_cutoff * scale;
}

}  // namespace

void validate(const AR2Params& params) {
    if (!std::isfinite(params.phi1) || !std::isfinite(params.phi2) || !std::isfinite(params.sigma)) {
        throw std::invalid_argument("AR(2) parameters must be finite");
    }
    if (!(params.sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
}

std::string_view to_string(RootKind kind) noexcept {
    switch (kind) {
        case RootKind::DistinctReal: return "DistinctReal";
        case RootKind::RepeatedReal: return "RepeatedReal";
        case RootKind::ComplexConjugate: return "ComplexConjugate";
    }
    return "unknown";
}

double CharacteristicRoots::max_modulus() const noexcept {
    return std::max(std::abs(c1), std::abs(c2));
}

CharacteristicRoots characteristic_roots(const AR2Params& params) {
    validate(params);
    const double phi1 = params.phi1;
    const double phi2 = params.phi2;
    const double disc = phi1 * phi1 + 4.0 * phi2;
    const double threshold = 1e-12 * std::max(1.0, phi1 * phi1);

    if (std::fabs(disc) <= threshold) {
        const double c = phi1 / 2.0;
        return {{c, 0.0}, {c, 0.0}, RootKind::RepeatedReal};
    }
    if (disc > 0.0) {
        const double s = std::sqrt(disc);
        // Larger-magnitude root without cancellation, the other from c1 c2 = -phi2.
        const double c1 = phi1 >= 0.0 ? (phi1 + s) / 2.0 : (phi1 - s) / 2.0;
        double c2 = -phi2 / c1;
        if (c2 == 0.0) c2 = 0.0;  // drop the sign of zero
        return {{c1, 0.0}, {c2, 0.0}, RootKind::DistinctReal};
    }
    const double re = phi1 / 2.0;
    const double im = std::sqrt(-disc) / 2.0;
    return {{re, im}, {re, -im}, RootKind::ComplexConjugate};
}

Stationarity is_stationary(const AR2Params& params) {
    const auto roots = characteristic_roots(params);
    // |c|^2 = -phi2 for a complex pair; hypot of the parts can round below 1 on the boundary.
    const double rho = roots.kind == RootKind::ComplexConjugate ? std::sqrt(-params.phi2) : roots.max_modulus();
    return {rho < 1.0, 1.0 - rho};
}

bool box_condition(const AR2Params& params) {
    validate(params);
    return std::fabs(params.phi1) < 2.0 && std::fabs(params.phi2) < 1.0;
}

namespace detail {

std::complex<double> power(std::complex<double> c, std::size_t k) {
    if (c.imag() == 0.0) return {std::pow(c.real(), static_cast<double>(k)), 0.0};
    const double kd = static_cast<double>(k);
    return std::polar(std::pow(std::abs(c), kd), kd * std::arg(c));
}

}  // namespace detail

double psi_partial_fractions(const CharacteristicRoots& roots, std::size_t u) {
    if (u == 0) return 1.0;
    if (roots.kind == RootKind::RepeatedReal) return repeated_root_psi(roots.c1.real(), u);
    if (near_repeated(roots)) return repeated_root_psi(((roots.c1 + roots.c2) / 2.0).real(), u);

    const std::size_t n = u + 1;
    const double rho = roots.max_modulus();
    const double scale = static_cast<double>(n) * std::pow(rho, static_cast<double>(u));

    if (roots.kind == RootKind::ComplexConjugate) {
        // Conjugate powers are exact mirror images, so the numerator is
        // purely imaginary and the quotient real up to rounding.
        const auto numer = detail::power(roots.c1, n) - detail::power(roots.c2, n);
        return check_real(numer / (roots.c1 - roots.c2), scale, "partial fractions");
    }

    // Distinct real: psi_u = c1^u (1 - q^n) / (1 - q) with q = c2 / c1.
    const double c1 = roots.c1.real();
    const double c2 = roots.c2.real();
    const double lead = std::pow(c1, static_cast<double>(u));
    if (c2 == 0.0) return lead;
    const double q = c2 / c1;
    if (q < 0.0) return lead * (1.0 - std::pow(q, static_cast<double>(n))) / (1.0 - q);
    // Same sign: 1 - q^n = -expm1(n log1p(-d)) with d = 1 - q, accurate when
    // the roots are close.
    const double d = (c1 - c2) / c1;
    const double ratio = -std::expm1(static_cast<double>(n) * std::log1p(-d)) / d;
    return lead * ratio;
}

double psi_cauchy_product(const CharacteristicRoots& roots, std::size_t u) {
    // Neumaier-compensated sums of the real and imaginary parts.
    double sum_re = 0.0, comp_re = 0.0, sum_im = 0.0, comp_im = 0.0;
    auto accumulate = [](double& sum, double& comp, double x) {
        const double t = sum + x;
        comp += std::fabs(sum) >= std::fabs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    };
    for (std::size_t k = 0; k <= u; ++k) {
        const auto term = detail::power(roots.c1, k) * detail::power(roots.c2, u - k);
        accumulate(sum_re, comp_re, term.real());
        accumulate(sum_im, comp_im, term.imag());
    }
    const double scale = static_cast<double>(u + 1) * std::pow(roots.max_modulus(), static_cast<double>(u));
    return check_real({sum_re + comp_re, sum_im + comp_im}, scale, "Cauchy product");
}

}  // namespace ar2
