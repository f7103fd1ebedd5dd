#include "hypercross/cross.hpp"

#include <string>

#include "hypercross/algebra.hpp"
#include "hypercross/errors.hpp"

namespace hypercross {
namespace {

void require_cross_dim(long n) {
  if (n != 3 && n != 7) {
    throw DimensionError("cross product needs dimension 3 or 7, got " +
                         std::to_string(n));
  }
}

// Cells are written as signed 1-based indices (0 = zero entry).
LinearTemplate from_rows(int n, const int* cells) {
  LinearTemplate t(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int c = cells[i * n + j];
      t.at(i, j) = c == 0 ? SignedVar::zero()
                          : SignedVar{c > 0 ? 1 : -1, (c > 0 ? c : -c) - 1};
    }
  }
  return t;
}

LinearTemplate make_v3() {
  // (x, y, z) = (x1, x2, x3)
  static const int cells[] = {
      0,  3, -2,
     -3,  0,  1,
      2, -1,  0,
  };
  return from_rows(3, cells);
}

LinearTemplate make_v7() {
  static const int cells[] = {
      0,  7, -6, -5,  4,  3, -2,
     -7,  0, -5,  6,  3, -4,  1,
      6,  5,  0,  7, -2, -1, -4,
      5, -6, -7,  0, -1,  2,  3,
     -4, -3,  2,  1,  0,  7, -6,
     -3,  4,  1, -2, -7,  0,  5,
      2, -1,  4, -3,  6, -5,  0,
  };
  return from_rows(7, cells);
}

}  // namespace

const LinearTemplate& cross_template(int n) {
  require_cross_dim(n);
  static const LinearTemplate v3 = make_v3();
  static const LinearTemplate v7 = make_v7();
  return n == 3 ? v3 : v7;
}

CrossMatrix cross_matrix(const VecN& r) {
  require_cross_dim(r.size());
  return {cross_template(static_cast<int>(r.size())).evaluate(r)};
}

VecN cross(const VecN& omega, const VecN& r) {
  if (omega.size() != r.size()) {
    throw DimensionError("cross operands differ in dimension: " +
                         std::to_string(omega.size()) + " vs " +
                         std::to_string(r.size()));
  }
  return cross_matrix(r).entries * omega;
}

VecN cross_from_algebra(const VecN& a, const VecN& b) {
  if (a.size() != b.size()) {
    throw DimensionError("cross operands differ in dimension: " +
                         std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
  require_cross_dim(a.size());
  const int level = a.size() == 3 ? 2 : 3;
  std::vector<double> ca(a.size() + 1, 0.0), cb(b.size() + 1, 0.0);
  for (long k = 0; k < a.size(); ++k) {
    ca[k + 1] = a(k);
    cb[k + 1] = b(k);
  }
  const Hypercomplex p =
      cd_multiply(Hypercomplex(level, std::move(ca)), Hypercomplex(level, std::move(cb)));
  VecN out(a.size());
  for (long k = 0; k < a.size(); ++k) out(k) = p[k + 1];
  return out;
}

const SignedPermutation& algebra_coordinate_map(int n) {
  require_cross_dim(n);
  static const SignedPermutation p3 = SignedPermutation::identity(3);
  static const SignedPermutation p7{{0, 1, 3, 6, 5, 4, 2},
                                    {-1, -1, 1, 1, 1, 1, 1}};
  return n == 3 ? p3 : p7;
}

InertiaMatrix inertia_tensor(const VecN& r) {
  if (r.size() < 1) throw DimensionError("inertia tensor needs n >= 1");
  const long n = r.size();
  return {r.squaredNorm() * Eigen::MatrixXd::Identity(n, n) - r * r.transpose()};
}

double kinetic_energy(const VecN& omega, const VecN& r) {
  return 0.5 * cross(omega, r).squaredNorm();
}

std::vector<int> admissible_dimensions(int max_n) {
  if (max_n < 1) throw DimensionError("max_n must be at least 1");
  std::vector<int> out;
  for (long n = 1; n <= max_n; ++n) {
    const long params = n * (n - 1) / 2;
    if (params == 0 || params == n || params == 3 * n) {
      out.push_back(static_cast<int>(n));
    }
  }
  return out;
}

VecN jacobi_sum(const VecN& a, const VecN& b, const VecN& c) {
  return cross(cross(a, b), c) + cross(cross(b, c), a) + cross(cross(c, a), b);
}

std::optional<std::array<int, 3>> find_jacobi_failure(int n) {
  require_cross_dim(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const VecN s = jacobi_sum(VecN::Unit(n, i), VecN::Unit(n, j), VecN::Unit(n, k));
        if (s.cwiseAbs().maxCoeff() != 0.0) return std::array<int, 3>{i, j, k};
      }
    }
  }
  return std::nullopt;
}

}  // namespace hypercross
