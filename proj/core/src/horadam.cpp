#include "ar2/horadam.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ar2/error.hpp"

namespace ar2 {

namespace {

template <typename Int>
std::string integer_to_string(Int value, bool negative) {
    std::string digits;
    do {
        digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    } while (value != 0);
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

exact_uint gcd(exact_uint a, exact_uint b) {
    while (b != 0) {
        exact_uint t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

std::string to_string(exact_uint value) { return integer_to_string(value, false); }

std::string to_string(exact_int value) {
    if (value >= 0) return integer_to_string(static_cast<exact_uint>(value), false);
    // Two's complement magnitude, valid for the minimum value as well.
    exact_uint magnitude = ~static_cast<exact_uint>(value) + 1;
    return integer_to_string(magnitude, true);
}

}  // namespace ar2

namespace ar2::horadam {

namespace {

// phi^0..phi^n in wide precision, by repeated multiplication.
std::vector<wide_real> wide_powers(double phi, std::size_t n) {
    std::vector<wide_real> out(n + 1);
    out[0] = 1;
    for (std::size_t j = 1; j <= n; ++j) out[j] = out[j - 1] * static_cast<wide_real>(phi);
    return out;
}

// Binomials are exact integers (overflow throws); products accumulate in
// wide precision from the highest power of phi2 down.
wide_real closed_form_term_sum(std::size_t u, const std::vector<wide_real>& p1,
                               const std::vector<wide_real>& p2) {
    wide_real sum = 0;
    for (std::size_t k = u / 2 + 1; k-- > 0;) {
        const auto c = static_cast<wide_real>(binomial(u - k, k));
        sum += c * p2[k] * p1[u - 2 * k];
    }
    return sum;
}

}  // namespace

void validate(const Params& params) {
    if (!std::isfinite(params.phi1) || !std::isfinite(params.phi2)) {
        throw std::invalid_argument("Horadam coefficients must be finite");
    }
}

std::vector<double> Polynomial::coefficients() const {
    std::vector<double> out(coeffs.size());
    std::transform(coeffs.begin(), coeffs.end(), out.begin(),
                   [](wide_real c) { return static_cast<double>(c); });
    return out;
}

exact_uint binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    exact_uint result = 1;
    // After step i, result == C(n - k + i, i); each step divides exactly.
    for (std::uint64_t i = 1; i <= k; ++i) {
        const exact_uint numer = n - k + i;
        const exact_uint g = gcd(result, i);
        const exact_uint reduced = result / g;
        const exact_uint factor = numer / (i / g);
        exact_uint next = 0;
        if (__builtin_mul_overflow(reduced, factor, &next)) {
            throw OverflowError("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                                ") exceeds 128-bit range");
        }
        result = next;
    }
    return result;
}

Sequence recursive(const Params& params, std::size_t n) {
    validate(params);
    Sequence seq{params, std::vector<double>(n + 1), Method::Recursion};
    auto& a = seq.values;
    a[0] = 1.0;
    if (n >= 1) a[1] = params.phi1;
    for (std::size_t u = 2; u <= n; ++u) {
        a[u] = params.phi1 * a[u - 1] + params.phi2 * a[u - 2];
    }
    return seq;
}

wide_real closed_form_wide(const Params& params, std::size_t u) {
    validate(params);
    const auto p1 = wide_powers(params.phi1, u);
    const auto p2 = wide_powers(params.phi2, u / 2);
    return closed_form_term_sum(u, p1, p2);
}

double closed_form(const Params& params, std::size_t u) {
    return static_cast<double>(closed_form_wide(params, u));
}

Sequence closed_form_sequence(const Params& params, std::size_t n) {
    validate(params);
    const auto p1 = wide_powers(params.phi1, n);
    const auto p2 = wide_powers(params.phi2, n / 2);
    Sequence seq{params, std::vector<double>(n + 1), Method::ClosedForm};
    for (std::size_t u = 0; u <= n; ++u) {
        seq.values[u] = static_cast<double>(closed_form_term_sum(u, p1, p2));
    }
    return seq;
}

std::vector<double> reciprocal_series(std::span<const double> denominator, std::size_t n) {
    if (denominator.empty() || denominator[0] == 0.0) {
        throw std::invalid_argument("series reciprocal needs a nonzero constant term");
    }
    const double inv0 = 1.0 / denominator[0];
    std::vector<double> b(n + 1);
    b[0] = inv0;
    // Coefficient u of b * denominator vanishes for u >= 1.
    for (std::size_t u = 1; u <= n; ++u) {
        double acc = 0.0;
        const std::size_t top = std::min(u, denominator.size() - 1);
        for (std::size_t j = 1; j <= top; ++j) acc += denominator[j] * b[u - j];
        b[u] = -acc * inv0;
    }
    return b;
}

Sequence power_series(const Params& params, std::size_t n) {
    validate(params);
    const double denominator[] = {1.0, -params.phi1, -params.phi2};
    return {params, reciprocal_series(denominator, n), Method::PowerSeries};
}

Polynomial polynomial(const Params& params, std::size_t u) {
    validate(params);
    const auto p1 = wide_powers(params.phi1, u);
    const auto p2 = wide_powers(params.phi2, u / 2);
    Polynomial poly{u, std::vector<wide_real>(u + 1, wide_real{0})};
    for (std::size_t k = 0; k <= u / 2; ++k) {
        poly.coeffs[u - 2 * k] = static_cast<wide_real>(binomial(u - k, k)) * p2[k] * p1[u - 2 * k];
    }
    return poly;
}

double evaluate(const Polynomial& poly, double x) {
    wide_real acc = 0;
    const auto wx = static_cast<wide_real>(x);
    for (auto it = poly.coeffs.rbegin(); it != poly.coeffs.rend(); ++it) acc = acc * wx + *it;
    return static_cast<double>(acc);
}

std::vector<exact_int> recursive_exact(std::int64_t phi1, std::int64_t phi2, std::size_t n) {
    std::vector<exact_int> a(n + 1);
    a[0] = 1;
    if (n >= 1) a[1] = phi1;
    for (std::size_t u = 2; u <= n; ++u) {
        exact_int lhs = 0;
        exact_int rhs = 0;
        if (__builtin_mul_overflow(static_cast<exact_int>(phi1), a[u - 1], &lhs) ||
            __builtin_mul_overflow(static_cast<exact_int>(phi2), a[u - 2], &rhs) ||
            __builtin_add_overflow(lhs, rhs, &a[u])) {
            throw OverflowError("exact Horadam number A_" + std::to_string(u) +
                                " exceeds 128-bit range");
        }
    }
    return a;
}

bool has_exact_representation(const Params& params) noexcept {
    constexpr double limit = 9.2e18;  // inside int64_t
    auto integral = [](double v) { return std::isfinite(v) && std::trunc(v) == v && std::fabs(v) < limit; };
    return integral(params.phi1) && integral(params.phi2);
}

}  // namespace ar2::horadam
