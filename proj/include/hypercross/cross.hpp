#pragma once

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <vector>

#include "hypercross/linear_template.hpp"
#include "hypercross/signed_permutation.hpp"

namespace hypercross {

using VecN = Eigen::VectorXd;

/// The n x n antisymmetric matrix V_n(r) (n = 3 or 7) with
/// V_n(r) * omega = omega x r.
///
/// For n = 3 this is
///
///     |  0   z  -y |
///     | -z   0   x |
///     |  y  -x   0 |
///
/// which is the negative of the usual skew matrix [r]_x: the matrix is
/// parameterized by the second operand, so V(r) omega = omega x r = -[r]_x omega.
struct CrossMatrix {
  Eigen::MatrixXd entries;

  int dim() const { return static_cast<int>(entries.rows()); }
};

/// Symmetric n x n matrix |r|^2 I - r r^t.
struct InertiaMatrix {
  Eigen::MatrixXd entries;

  int dim() const { return static_cast<int>(entries.rows()); }
};

/// Signed-coordinate template of V_n for n = 3 or 7; variable k stands for
/// r_{k+1}. The 7-D template is the classical table as is, which already
/// satisfies antisymmetry and V^t V = |r|^2 I - r r^t, so no cell is repaired.
const LinearTemplate& cross_template(int n);

CrossMatrix cross_matrix(const VecN& r);

/// omega x r, computed as V_n(r) * omega.
VecN cross(const VecN& omega, const VecN& r);

/// Imaginary part of the quaternion (n = 3) or octonion (n = 7) product of
/// the purely imaginary elements sum_k a_k e_k and sum_k b_k e_k.
///
/// This product is a cross product in the algebra's own coordinates. The two
/// conventions are tied by algebra_coordinate_map(n) = P:
///   cross_from_algebra(P a, P b) == P cross(a, b).
VecN cross_from_algebra(const VecN& a, const VecN& b);

/// Frozen signed permutation reconciling cross() with cross_from_algebra().
/// Identity for n = 3. For n = 7 it was found by exhaustive search over all
/// 7! * 2^7 signed permutations on the 49 basis pairs (first hit in
/// lexicographic order); the tests repeat the search.
const SignedPermutation& algebra_coordinate_map(int n);

/// |r|^2 I - r r^t for any n >= 1.
InertiaMatrix inertia_tensor(const VecN& r);

/// T = 1/2 |omega x r|^2 for a unit mass.
double kinetic_energy(const VecN& omega, const VecN& r);

/// n in [1, max_n] with n(n-1)/2 equal to 0, n or 3n: the parameter count
/// of V_n against no constraint, n components, or n components plus 2n
/// orthogonality constraints.
std::vector<int> admissible_dimensions(int max_n);

/// (a x b) x c + (b x c) x a + (c x a) x b.
VecN jacobi_sum(const VecN& a, const VecN& b, const VecN& c);

/// First basis triple (zero-based indices) whose Jacobi sum is nonzero, or
/// nothing if the Jacobi identity holds on every basis triple.
std::optional<std::array<int, 3>> find_jacobi_failure(int n);

}  // namespace hypercross
