#include "ar2/grid.hpp"

#include <array>

namespace ar2 {

std::vector<AR2Params> stationary_grid(std::size_t resolution, double sigma) {
    std::vector<AR2Params> out;
    if (resolution == 0) return out;
    if (resolution == 1) return {{0.0, 0.0, sigma}};
    out.reserve(resolution * resolution);
    const auto span = static_cast<double>(resolution - 1);
    for (std::size_t j = 0; j < resolution; ++j) {
        const double phi2 = 0.85 * (2.0 * static_cast<double>(j) - span) / span;
        for (std::size_t i = 0; i < resolution; ++i) {
            const double phi1 = 0.9 * (1.0 - phi2) * (2.0 * static_cast<double>(i) - span) / span;
            out.push_back({phi1, phi2, sigma});
        }
    }
    return out;
}

std::vector<AR2Params> repeated_root_points(double sigma) {
    constexpr std::array<double, 6> phi1s = {-1.6, -1.0, -0.5, 0.5, 1.0, 1.6};
    std::vector<AR2Params> out;
    for (double phi1 : phi1s) out.push_back({phi1, -(phi1 * phi1) / 4.0, sigma});
    return out;
}

}  // namespace ar2
