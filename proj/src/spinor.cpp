#include "hypercross/spinor.hpp"

#include <string>

#include "hypercross/errors.hpp"

namespace hypercross {
namespace {

const Complex kI{0.0, 1.0};

void require_spinor_dim(const ComplexSpinor& s, int n, const char* what) {
  if (s.dim() != n) {
    throw DimensionError(std::string(what) + " needs " + std::to_string(n) +
                         " complex components, got " + std::to_string(s.dim()));
  }
}

Eigen::Matrix4cd block(const Eigen::Matrix2cd& tl, const Eigen::Matrix2cd& tr,
                       const Eigen::Matrix2cd& bl, const Eigen::Matrix2cd& br) {
  Eigen::Matrix4cd m;
  m << tl, tr, bl, br;
  return m;
}

}  // namespace

ComplexSpinor spinor_from_real(const VecN& u) {
  if (u.size() % 2 != 0) {
    throw DimensionError("pairing into complex components needs an even dimension, got " +
                         std::to_string(u.size()));
  }
  Eigen::VectorXcd v(u.size() / 2);
  for (long i = 0; i < v.size(); ++i) v(i) = Complex(u(2 * i), u(2 * i + 1));
  return {v};
}

VecN real_from_spinor(const ComplexSpinor& s) {
  VecN u(2 * s.v.size());
  for (long i = 0; i < s.v.size(); ++i) {
    u(2 * i) = s.v(i).real();
    u(2 * i + 1) = s.v(i).imag();
  }
  return u;
}

const std::vector<Eigen::Matrix2cd>& pauli_matrices() {
  static const std::vector<Eigen::Matrix2cd> sigma = [] {
    Eigen::Matrix2cd s1, s2, s3;
    s1 << 0, 1, 1, 0;
    s2 << 0, -kI, kI, 0;
    s3 << 1, 0, 0, -1;
    return std::vector<Eigen::Matrix2cd>{s1, s2, s3};
  }();
  return sigma;
}

const DiracMatrices& dirac_matrices() {
  static const DiracMatrices d = [] {
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    const Eigen::Matrix2cd zero = Eigen::Matrix2cd::Zero();
    const auto& s = pauli_matrices();
    return DiracMatrices{block(id, zero, zero, -id), block(zero, s[0], -s[0], zero),
                         block(zero, s[1], -s[1], zero),
                         block(zero, s[2], -s[2], zero), block(zero, id, id, zero)};
  }();
  return d;
}

std::vector<NamedForm> dirac_hermitian_basis() {
  const DiracMatrices& d = dirac_matrices();
  const std::vector<std::pair<std::string, Eigen::Matrix4cd>> gammas = {
      {"g0", d.g0}, {"g1", d.g1}, {"g2", d.g2}, {"g3", d.g3}};

  std::vector<std::pair<std::string, Eigen::Matrix4cd>> products;
  products.emplace_back("1", Eigen::Matrix4cd::Identity());
  for (const auto& [name, g] : gammas) products.emplace_back(name, g);
  products.emplace_back("g5", d.g5);
  for (const auto& [name, g] : gammas) products.emplace_back(name + " g5", g * d.g5);
  for (std::size_t a = 0; a < gammas.size(); ++a) {
    for (std::size_t b = a + 1; b < gammas.size(); ++b) {
      products.emplace_back(gammas[a].first + " " + gammas[b].first,
                            gammas[a].second * gammas[b].second);
    }
  }

  std::vector<NamedForm> basis;
  for (const auto& [name, p] : products) {
    if (p.adjoint().isApprox(p)) {
      basis.push_back({name, p});
    } else {
      basis.push_back({"i " + name, kI * p});
    }
  }
  return basis;
}

Complex hermitian_form(const Eigen::VectorXcd& v, const Eigen::MatrixXcd& g) {
  return v.dot(g * v);  // Eigen's dot conjugates the first argument
}

VecN pauli_form(const ComplexSpinor& s) {
  require_spinor_dim(s, 2, "Pauli form");
  const auto& sigma = pauli_matrices();
  VecN z(3);
  for (int k = 0; k < 3; ++k) z(k) = hermitian_form(s.v, sigma[k]).real();
  return z;
}

const std::vector<NamedForm>& dirac_forms() {
  static const std::vector<NamedForm> forms = [] {
    const DiracMatrices& d = dirac_matrices();
    return std::vector<NamedForm>{{"g5", d.g5},
                                  {"-i g3", -kI * d.g3},
                                  {"i g2", kI * d.g2},
                                  {"-i g1", -kI * d.g1},
                                  {"g0", d.g0}};
  }();
  return forms;
}

VecN dirac_form(const ComplexSpinor& s) {
  require_spinor_dim(s, 4, "Dirac form");
  const auto& forms = dirac_forms();
  VecN z(static_cast<long>(forms.size()));
  for (std::size_t k = 0; k < forms.size(); ++k) {
    z(static_cast<long>(k)) = hermitian_form(s.v, forms[k].matrix).real();
  }
  return z;
}

Eigen::MatrixXd solve_form_coefficients(
    const std::vector<NamedForm>& basis, int real_dim, int outputs,
    const std::function<VecN(const VecN&)>& target) {
  std::vector<VecN> inputs;
  for (int i = 0; i < real_dim; ++i) {
    inputs.push_back(VecN::Unit(real_dim, i));
    for (int j = i + 1; j < real_dim; ++j) {
      inputs.push_back(VecN::Unit(real_dim, i) + VecN::Unit(real_dim, j));
    }
  }
  const long rows = static_cast<long>(inputs.size());
  const long cols = static_cast<long>(basis.size());
  Eigen::MatrixXd design(rows, cols);
  Eigen::MatrixXd rhs(rows, outputs);
  for (long r = 0; r < rows; ++r) {
    const Eigen::VectorXcd v = spinor_from_real(inputs[r]).v;
    for (long c = 0; c < cols; ++c) design(r, c) = hermitian_form(v, basis[c].matrix).real();
    const VecN z = target(inputs[r]);
    if (z.size() != outputs) throw DimensionError("target output size mismatch");
    rhs.row(r) = z.transpose();
  }
  return design.colPivHouseholderQr().solve(rhs).transpose();
}

}  // namespace hypercross
