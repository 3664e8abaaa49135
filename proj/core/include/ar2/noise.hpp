#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

/// Counter-based Gaussian white noise.
///
/// Draw i of seed s is a pure function of (s, i): Philox4x32-10 keyed by the
/// seed encrypts the counter i, the top 53 bits become a uniform in (0, 1),
/// and Wichura's AS241 (PPND16) maps it to a standard normal. AS241 uses a
/// portable logarithm built from IEEE-754 arithmetic only, so the output is
/// bit-identical on every conforming platform.
namespace ar2::noise {

/// Recorded in output headers. Bump when the seed -> sequence mapping changes.
inline constexpr std::string_view algorithm_id = "philox4x32-10/as241/v1";

enum class Distribution { Gaussian };

struct NoiseSpec {
    std::uint64_t seed = 0;
    std::size_t length = 0;
    double sigma = 1.0;
    Distribution distribution = Distribution::Gaussian;
};

using PhiloxBlock = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

/// Ten rounds of Philox4x32.
[[nodiscard]] PhiloxBlock philox4x32_10(PhiloxBlock counter, PhiloxKey key) noexcept;

/// Uniform on the open interval (0, 1) for (seed, index).
[[nodiscard]] double uniform_at(std::uint64_t seed, std::uint64_t index) noexcept;

/// Standard normal for (seed, index).
[[nodiscard]] double standard_normal_at(std::uint64_t seed, std::uint64_t index) noexcept;

/// Inverse of the standard normal CDF, p in (0, 1).
[[nodiscard]] double normal_quantile(double p) noexcept;

/// Natural log from +, -, *, / only; matches std::log to about one ulp.
[[nodiscard]] double portable_log(double x) noexcept;

/// Throws DomainError on zero length, std::invalid_argument on sigma <= 0.
[[nodiscard]] std::vector<double> white_noise(const NoiseSpec& spec);

/// Draws [first, first + out.size()) of the sequence. Disjoint ranges may be
/// filled concurrently and agree with white_noise().
void white_noise_range(const NoiseSpec& spec, std::uint64_t first, std::span<double> out);

}  // namespace ar2::noise
