#include "hypercross/rotation.hpp"

#include <cmath>
#include <string>

#include "hypercross/cross.hpp"
#include "hypercross/errors.hpp"

namespace hypercross {

RotationMatrix rotation_matrix(const VecN& axis, double theta) {
  const double norm = axis.norm();
  if (!(norm > 1e-300)) {
    throw std::invalid_argument("rotation axis must be nonzero");
  }
  const Eigen::MatrixXd v = cross_matrix(axis / norm).entries;
  const long n = v.rows();
  return {Eigen::MatrixXd::Identity(n, n) + std::sin(theta) * v +
          (1.0 - std::cos(theta)) * (v * v)};
}

VecN rotate(const VecN& v, const VecN& axis, double theta) {
  if (v.size() != axis.size()) {
    throw DimensionError("rotated vector has dimension " + std::to_string(v.size()) +
                         " but axis has " + std::to_string(axis.size()));
  }
  return rotation_matrix(axis, theta).entries * v;
}

}  // namespace hypercross
