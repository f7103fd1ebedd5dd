#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace hypercross {

/// Coordinate map x -> y with y[target[k]] = sign[k] * x[k].
struct SignedPermutation {
  std::vector<int> target;
  std::vector<int> sign;

  static SignedPermutation identity(int n);

  int size() const { return static_cast<int>(target.size()); }
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
  Eigen::VectorXd apply_inverse(const Eigen::VectorXd& y) const;
  Eigen::MatrixXd matrix() const;
  std::string describe(const std::string& from = "x",
                       const std::string& to = "y") const;

  friend bool operator==(const SignedPermutation&,
                         const SignedPermutation&) = default;
};

}  // namespace hypercross
