#include "ar2/noise.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ar2/error.hpp"

namespace ar2::noise {

namespace {

constexpr std::uint32_t philox_m0 = 0xD2511F53u;
constexpr std::uint32_t philox_m1 = 0xCD9E8D57u;
constexpr std::uint32_t philox_w0 = 0x9E3779B9u;
constexpr std::uint32_t philox_w1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(product >> 32);
    lo = static_cast<std::uint32_t>(product);
}

inline PhiloxBlock philox_round(const PhiloxBlock& ctr, const PhiloxKey& key) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(philox_m0, ctr[0], hi0, lo0);
    mulhilo(philox_m1, ctr[2], hi1, lo1);
    return {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

// Horner with explicit evaluation order.
template <std::size_t N>
inline double poly(const double (&c)[N], double x) {
    double acc = c[N - 1];
    for (std::size_t i = N - 1; i-- > 0;) acc = acc * x + c[i];
    return acc;
}

// Wichura, AS241 PPND16.
constexpr double as241_a[] = {3.3871328727963666080e0, 1.3314166789178437745e+2,
                              1.9715909503065514427e+3, 1.3731693765509461125e+4,
                              4.5921953931549871457e+4, 6.7265770927008700853e+4,
                              3.3430575583588128105e+4, 2.5090809287301226727e+3};
constexpr double as241_b[] = {1.0,
                              4.2313330701600911252e+1, 6.8718700749205790830e+2,
                              5.3941960214247511077e+3, 2.1213794301586595867e+4,
                              3.9307895800092710610e+4, 2.8729085735721942674e+4,
                              5.2264952788528545610e+3};
constexpr double as241_c[] = {1.42343711074968357734e0, 4.63033784615654529590e0,
                              5.76949722146069140550e0, 3.64784832476320460504e0,
                              1.27045825245236838258e0, 2.41780725177450611770e-1,
                              2.27238449892691845833e-2, 7.74545014278341407640e-4};
constexpr double as241_d[] = {1.0,
                              2.05319162663775882187e0, 1.67638483018380384940e0,
                              6.89767334985100004550e-1, 1.48103976427480074590e-1,
                              1.51986665636164571966e-2, 5.47593808499534494600e-4,
                              1.05075007164441684324e-9};
constexpr double as241_e[] = {6.65790464350110377720e0, 5.46378491116411436990e0,
                              1.78482653991729133580e0, 2.96560571828504891230e-1,
                              2.65321895265761230930e-2, 1.24266094738807843860e-3,
                              2.71155556874348757815e-5, 2.01033439929228813265e-7};
constexpr double as241_f[] = {1.0,
                              5.99832206555887937690e-1, 1.36929880922735805310e-1,
                              1.48753612908506148525e-2, 7.86869131145613259100e-4,
                              1.84631831751005468180e-5, 1.42151175831644588870e-7,
                              2.04426310338993978564e-15};

void check_spec(const NoiseSpec& spec) {
    if (!std::isfinite(spec.sigma) || !(spec.sigma > 0.0)) {
        throw std::invalid_argument("noise sigma must be finite and positive");
    }
}

}  // namespace

PhiloxBlock philox4x32_10(PhiloxBlock counter, PhiloxKey key) noexcept {
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += philox_w0;
            key[1] += philox_w1;
        }
        counter = philox_round(counter, key);
    }
    return counter;
}

double uniform_at(std::uint64_t seed, std::uint64_t index) noexcept {
    const PhiloxBlock ctr = {static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0u, 0u};
    const PhiloxKey key = {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    const auto out = philox4x32_10(ctr, key);
    const std::uint64_t bits = (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
    // Midpoint of one of 2^53 equal cells: never 0 or 1.
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

double portable_log(double x) noexcept {
    if (std::isnan(x) || x < 0.0) return std::numeric_limits<double>::quiet_NaN();
    if (x == 0.0) return -std::numeric_limits<double>::infinity();
    if (std::isinf(x)) return x;
    constexpr double ln2_hi = 6.93147180369123816490e-01;
    constexpr double ln2_lo = 1.90821492927058770002e-10;
    constexpr double sqrt_half = 0.70710678118654752440;
    int e = 0;
    double m = std::frexp(x, &e);  // exact, m in [0.5, 1)
    if (m < sqrt_half) {
        m *= 2.0;
        --e;
    }
    // log(m) = 2 atanh(s), |s| <= 0.1716
    const double s = (m - 1.0) / (m + 1.0);
    const double s2 = s * s;
    double series = 1.0 / 25.0;
    for (int k = 11; k >= 0; --k) series = series * s2 + 1.0 / (2.0 * k + 1.0);
    const double de = static_cast<double>(e);
    return de * ln2_hi + (de * ln2_lo + 2.0 * s * series);
}

double normal_quantile(double p) noexcept {
    const double q = p - 0.5;
    if (std::fabs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q * poly(as241_a, r) / poly(as241_b, r);
    }
    double r = q < 0.0 ? p : 1.0 - p;
    r = std::sqrt(-portable_log(r));
    double value;
    if (r <= 5.0) {
        r -= 1.6;
        value = poly(as241_c, r) / poly(as241_d, r);
    } else {
        r -= 5.0;
        value = poly(as241_e, r) / poly(as241_f, r);
    }
    return q < 0.0 ? -value : value;
}

double standard_normal_at(std::uint64_t seed, std::uint64_t index) noexcept {
    return normal_quantile(uniform_at(seed, index));
}

std::vector<double> white_noise(const NoiseSpec& spec) {
    check_spec(spec);
    if (spec.length == 0) throw DomainError("white noise length must be positive");
    std::vector<double> out(spec.length);
    white_noise_range(spec, 0, out);
    return out;
}

void white_noise_range(const NoiseSpec& spec, std::uint64_t first, std::span<double> out) {
    check_spec(spec);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = spec.sigma * standard_normal_at(spec.seed, first + i);
    }
}

}  // namespace ar2::noise
