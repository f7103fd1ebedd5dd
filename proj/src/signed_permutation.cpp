#include "hypercross/signed_permutation.hpp"

#include <sstream>

namespace hypercross {

SignedPermutation SignedPermutation::identity(int n) {
  SignedPermutation p;
  for (int k = 0; k < n; ++k) {
    p.target.push_back(k);
    p.sign.push_back(1);
  }
  return p;
}

Eigen::VectorXd SignedPermutation::apply(const Eigen::VectorXd& x) const {
  Eigen::VectorXd y(x.size());
  for (int k = 0; k < size(); ++k) y(target[k]) = sign[k] * x(k);
  return y;
}

Eigen::VectorXd SignedPermutation::apply_inverse(const Eigen::VectorXd& y) const {
  Eigen::VectorXd x(y.size());
  for (int k = 0; k < size(); ++k) x(k) = sign[k] * y(target[k]);
  return x;
}

Eigen::MatrixXd SignedPermutation::matrix() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size(), size());
  for (int k = 0; k < size(); ++k) m(target[k], k) = sign[k];
  return m;
}

std::string SignedPermutation::describe(const std::string& from,
                                        const std::string& to) const {
  std::ostringstream os;
  for (int k = 0; k < size(); ++k) {
    if (k) os << ", ";
    os << to << target[k] + 1 << " = " << (sign[k] < 0 ? "-" : "") << from
       << k + 1;
  }
  return os.str();
}

}  // namespace hypercross
