#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "hypercross/linear_template.hpp"

namespace hypercross {

using VecN = Eigen::VectorXd;

/// m x m matrix linear in a generating vector u (m in {2, 4, 8, 16}).
///
/// The classical transformation matrices carry one coordinate of u on the
/// diagonal (the scalar slot). With that coordinate zero the matrix is
/// antisymmetric, and for m <= 8 it satisfies H^t H = |u|^2 I and
/// H^2 = -|u|^2 I. For m = 16 orthogonality fails, as it must for any
/// 16 x 16 matrix linear in 16 coordinates.
struct HurwitzMatrix {
  Eigen::MatrixXd entries;

  int size() const { return static_cast<int>(entries.rows()); }
};

/// Index of the coordinate of u that sits on the diagonal of H_m(u).
int scalar_slot(int m);

/// Tabulated templates:
///   m = 2:  [[u1, u2], [-u2, u1]]
///   m = 4:  the Kustaanheimo-Stiefel system matrix
///   m = 8:  the R^8 -> R^5 system matrix. One cell (row 5, column 3)
///           is left unknown in the table and reconstructed as the
///           unique signed coordinate keeping H - u5 I antisymmetric and
///           H^t H = |u|^2 I; the reconstruction gives -u3.
///   m = 16: the doubling recurrence (no tabulated form).
const LinearTemplate& hurwitz_template(int m);

/// Cells reconstructed in the m = 8 template, one line each.
const std::vector<std::string>& hurwitz_repair_notes();

/// Doubling recurrence for m in {2, 4, 8, 16}: with u = (a, b) split into
/// halves that are read as elements of the (m/2)-dimensional algebra,
///
///   H_m(a, b) = |  M(b)      J M(a) |
///               | -J N(a)    N(b)   |
///
/// where M(x) y = conj(x) y, N(x) y = y conj(x) and J is conjugation.
/// Reproduces the tabulated m = 4 and m = 8 templates exactly.
LinearTemplate doubling_template(int m);

HurwitzMatrix hurwitz_matrix(const VecN& u);

/// Block matrix [[V_n(r), r], [-r^t, 0]] for n in {3, 7}. For n = 3 this is
/// the 4 x 4 matrix of the quaternion h = x e1 + y e2 + z e3 acting by right
/// multiplication q -> q h in the basis order (e1, e2, e3, e0).
HurwitzMatrix bordered_from_cross(const VecN& r);

const LinearTemplate& bordered_template(int n);

/// bordered_from_cross(r) == diag(row_sign) * H_{n+1}(u(r)) * diag(col_sign),
/// where u(r)[l] = u_from_r[l] evaluated on r (zero in the scalar slot).
struct BorderedReconciliation {
  std::vector<SignedVar> u_from_r;
  std::vector<int> row_sign;
  std::vector<int> col_sign;

  VecN embed(const VecN& r) const;
};

/// Frozen maps for n = 3 and n = 7, found by search over signed
/// permutations of rows and columns (the permutation part is the identity
/// in both cases).
const BorderedReconciliation& bordered_reconciliation(int n);

/// Output of a Hurwitz transformation. `zeros` counts the trailing rows of
/// the defining system H(u) u that vanish identically.
struct TransformResult {
  VecN z;
  int zeros = 0;
};

/// R^2 -> R^2: (u1^2 - u2^2, 2 u1 u2).
TransformResult levi_civita(const VecN& u);

/// R^4 -> R^3 (Kustaanheimo-Stiefel), read off the rows of the m = 4 system.
TransformResult ks_transform(const VecN& u);

/// R^8 -> R^5, read off the first five rows of the m = 8 system.
TransformResult hurwitz_r8_to_r5(const VecN& u);

/// R^{2m} -> R^{m+1} for m in {1, 2, 4, 8}:
///   z_{1..m} = 2 conj(a) b, z_{m+1} = |a|^2 - |b|^2
/// with a, b the halves of u read as elements of the m-dimensional algebra.
/// conj(a) b is the product by the matrix M_m(a); for m = 1, 2 this is the
/// tabulated H_m. At m = 2 the result equals ks_transform, at m = 4 it equals
/// hurwitz_r8_to_r5, and at m = 1 it is levi_civita with outputs swapped.
TransformResult hurwitz_recursive(const VecN& u);

enum class TransformKind { kLeviCivita, kKs, kR8R5, kR16R9 };

TransformKind parse_transform_kind(const std::string& name);
std::string to_string(TransformKind kind);
TransformResult transform(TransformKind kind, const VecN& u);

/// Restricted search for an n x n matrix H whose entries are drawn from
/// {0, +-x_1, ..., +-x_n}, shaped as (scalar diagonal) + (antisymmetric),
/// with H^t H = |x|^2 I as a polynomial identity. Supported for 1 <= n <= 4.
///
/// This is the shape of the tabulated matrices; it is a finite check, not a
/// proof of Hurwitz's theorem.
bool obstruction_search(int n);

/// Same search, returning the first solution found.
std::optional<LinearTemplate> obstruction_witness(int n);

}  // namespace hypercross
