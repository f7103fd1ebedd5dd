#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace hypercross {

using VecN = Eigen::VectorXd;
using Complex = std::complex<double>;

/// Complex components paired from real coordinates as
/// v1 = u1 + i u2, v2 = u3 + i u4, ...
struct ComplexSpinor {
  Eigen::VectorXcd v;

  int dim() const { return static_cast<int>(v.size()); }
};

ComplexSpinor spinor_from_real(const VecN& u);
VecN real_from_spinor(const ComplexSpinor& s);

/// sigma_1, sigma_2, sigma_3.
const std::vector<Eigen::Matrix2cd>& pauli_matrices();

/// Dirac representation: gamma^0 = diag(I, -I), gamma^k = [[0, s_k], [-s_k, 0]],
/// gamma^5 = [[0, I], [I, 0]].
struct DiracMatrices {
  Eigen::Matrix4cd g0, g1, g2, g3, g5;
};
const DiracMatrices& dirac_matrices();

/// A Hermitian quadratic form v^dagger G v with a readable name such as
/// "-i g3".
struct NamedForm {
  std::string name;
  Eigen::MatrixXcd matrix;
};

/// The 16 Hermitian elements spanned by products of the Dirac matrices:
/// 1, g0..g3, g5, g_mu g5, g_mu g_nu (mu < nu), each scaled by 1 or i.
std::vector<NamedForm> dirac_hermitian_basis();

/// (v^dagger sigma_k v)_k. The conjugate transpose is what makes the forms
/// real; with it the output equals ks_transform(u) for v = spinor_from_real(u).
VecN pauli_form(const ComplexSpinor& s);

/// Five forms reproducing hurwitz_r8_to_r5 under the same pairing:
///   z1 = g5, z2 = -i g3, z3 = i g2, z4 = -i g1, z5 = g0.
const std::vector<NamedForm>& dirac_forms();

VecN dirac_form(const ComplexSpinor& s);

/// v^dagger G v, keeping the (ideally zero) imaginary part.
Complex hermitian_form(const Eigen::VectorXcd& v, const Eigen::MatrixXcd& g);

/// Real coefficients c (one row per output) with
///   target(u)_k = sum_A c(k, A) v(u)^dagger basis_A v(u)
/// found by least squares on the inputs e_i and e_i + e_j. Used to rederive
/// the Dirac forms from the real transformation.
Eigen::MatrixXd solve_form_coefficients(
    const std::vector<NamedForm>& basis, int real_dim, int outputs,
    const std::function<VecN(const VecN&)>& target);

}  // namespace hypercross
