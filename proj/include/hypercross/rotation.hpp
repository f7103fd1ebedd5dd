#pragma once

#include <Eigen/Dense>

namespace hypercross {

using VecN = Eigen::VectorXd;

struct RotationMatrix {
  Eigen::MatrixXd entries;

  int dim() const { return static_cast<int>(entries.rows()); }
};

/// exp(theta V) for V = V_n(axis / |axis|), n in {3, 7}, in closed form
///
///   R = I + sin(theta) V + (1 - cos(theta)) V^2,
///
/// which holds because V^3 = -V for a unit axis. The axis is a fixed point.
/// Under the V(r) omega = omega x r convention, theta = pi/2 about e3 takes
/// e1 to -e2.
RotationMatrix rotation_matrix(const VecN& axis, double theta);

VecN rotate(const VecN& v, const VecN& axis, double theta);

}  // namespace hypercross
