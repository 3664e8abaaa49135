#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace ar2 {

/// Y_t = phi1 Y_{t-1} + phi2 Y_{t-2} + eps_t with Var(eps_t) = sigma^2.
struct AR2Params {
    double phi1 = 0.0;
    double phi2 = 0.0;
    double sigma = 1.0;
};

/// Throws std::invalid_argument on non-finite fields or sigma <= 0.
void validate(const AR2Params& params);

enum class RootKind { DistinctReal, RepeatedReal, ComplexConjugate };

[[nodiscard]] std::string_view to_string(RootKind kind) noexcept;

/// Roots of x^2 - phi1 x - phi2, so that
/// 1 - phi1 L - phi2 L^2 = (1 - c1 L)(1 - c2 L), c1 + c2 = phi1, c1 c2 = -phi2.
///
/// Real distinct roots are ordered by magnitude, then by real part. A complex
/// pair is ordered with the positive imaginary part first.
struct CharacteristicRoots {
    std::complex<double> c1;
    std::complex<double> c2;
    RootKind kind = RootKind::RepeatedReal;

    [[nodiscard]] double max_modulus() const noexcept;
};

[[nodiscard]] CharacteristicRoots characteristic_roots(const AR2Params& params);

struct Stationarity {
    bool stationary = false;
    double margin = 0.0;  // 1 - max root modulus; negative when explosive
};

[[nodiscard]] Stationarity is_stationary(const AR2Params& params);

/// |phi1| < 2 and |phi2| < 1. Necessary for stationarity but not
/// sufficient: (1.5, 0.6) satisfies it while having a root of modulus 1.83.
[[nodiscard]] bool box_condition(const AR2Params& params);

/// psi_u = (c1^(u+1) - c2^(u+1)) / (c1 - c2), or (u+1) c^u for a repeated
/// root. Roots closer than 1e-8 relative are treated as repeated at their mean.
[[nodiscard]] double psi_partial_fractions(const CharacteristicRoots& roots, std::size_t u);

/// psi_u = sum_{k=0}^{u} c1^k c2^(u-k): the u-th coefficient of the product
/// of the two AR(1) inverses (1 - c1 L)^{-1} (1 - c2 L)^{-1}.
[[nodiscard]] double psi_cauchy_product(const CharacteristicRoots& roots, std::size_t u);

namespace detail {

// Relative gap below which distinct roots are merged.
inline constexpr double near_repeated_cutoff = 1e-8;
// Allowed imaginary residue of a coefficient, relative to its scale.
inline constexpr double realness_tolerance = 1e-10;

// c^k. Real inputs stay on the real axis; complex inputs go through polar
// form so that conjugate pairs produce exactly conjugate powers.
[[nodiscard]] std::complex<double> power(std::complex<double> c, std::size_t k);

}  // namespace detail

}  // namespace ar2
