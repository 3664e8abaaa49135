#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ar2/numeric.hpp"

/// Horadam numbers A_u and polynomials A_u(x) for the recurrence
/// A_u = phi1 A_{u-1} + phi2 A_{u-2}, A_0 = 1, A_1 = phi1.
///
/// Three independent routes are provided: the linear recursion, the
/// binomial closed form, and reciprocation of the generating function
/// 1 / (1 - phi1 t - phi2 t^2).
namespace ar2::horadam {

struct Params {
    double phi1 = 0.0;
    double phi2 = 0.0;
};

/// Throws std::invalid_argument unless both coefficients are finite.
void validate(const Params& params);

enum class Method { Recursion, ClosedForm, PowerSeries };

struct Sequence {
    Params params;
    std::vector<double> values;  // A_0..A_n
    Method method = Method::Recursion;

    [[nodiscard]] std::size_t order() const noexcept { return values.size() - 1; }
};

/// A_u(x) in the monomial basis. Coefficients are kept in wide precision
/// because A_u(x) cancels heavily for phi2 < 0.
struct Polynomial {
    std::size_t degree = 0;
    std::vector<wide_real> coeffs;  // coeffs[j] multiplies x^j, size degree + 1

    [[nodiscard]] std::vector<double> coefficients() const;
};

/// n-choose-k in exact arithmetic; 0 when k > n. Throws OverflowError if the
/// result does not fit in exact_uint.
[[nodiscard]] exact_uint binomial(std::uint64_t n, std::uint64_t k);

[[nodiscard]] Sequence recursive(const Params& params, std::size_t n);

/// sum_{k=0}^{floor(u/2)} C(u-k, k) phi2^k phi1^(u-2k), summed from the
/// highest k down in wide precision. Well defined at phi1 = 0.
[[nodiscard]] double closed_form(const Params& params, std::size_t u);
[[nodiscard]] wide_real closed_form_wide(const Params& params, std::size_t u);

/// A_0..A_n by the closed form, one independent sum per index.
[[nodiscard]] Sequence closed_form_sequence(const Params& params, std::size_t n);

/// First n+1 coefficients of 1 / denominator(t) for a formal power series
/// with denominator[0] != 0.
[[nodiscard]] std::vector<double> reciprocal_series(std::span<const double> denominator,
                                                    std::size_t n);

[[nodiscard]] Sequence power_series(const Params& params, std::size_t n);

[[nodiscard]] Polynomial polynomial(const Params& params, std::size_t u);

/// Horner evaluation in wide precision.
[[nodiscard]] double evaluate(const Polynomial& poly, double x);

// Exact mode, usable only for integer coefficients. Throws OverflowError as
// soon as a value leaves the exact_int range.
[[nodiscard]] std::vector<exact_int> recursive_exact(std::int64_t phi1, std::int64_t phi2,
                                                     std::size_t n);

/// True when both coefficients are integers that the exact mode accepts.
[[nodiscard]] bool has_exact_representation(const Params& params) noexcept;

}  // namespace ar2::horadam
