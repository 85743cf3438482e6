#pragma once

#include <Eigen/Core>
#include <Eigen/LU>

namespace hybrident {

using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;
using Mat6 = Eigen::Matrix<double, 6, 6>;

// Quadrature ordering of the full system.
enum Quadrature : int { kXc = 0, kYc = 1, kQm = 2, kPm = 3, kXs = 4, kYs = 5 };

}  // namespace hybrident
