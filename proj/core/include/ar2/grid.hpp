#pragma once

#include <cstddef>
#include <vector>

#include "ar2/ar2_model.hpp"

namespace ar2 {

/// resolution x resolution points strictly inside the stationarity triangle.
/// phi2 spans [-0.85, 0.85]; phi1 spans 90% of the admissible width
/// |phi1| < 1 - phi2 at each row. Odd resolutions include phi1 = 0 and
/// phi2 = 0 exactly.
[[nodiscard]] std::vector<AR2Params> stationary_grid(std::size_t resolution, double sigma = 1.0);

/// Non-degenerate repeated-root models phi2 = -phi1^2 / 4.
[[nodiscard]] std::vector<AR2Params> repeated_root_points(double sigma = 1.0);

}  // namespace ar2
