// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "hypercross/algebra.hpp"
#include "hypercross/cli.hpp"
#include "hypercross/cross.hpp"
#include "hypercross/hurwitz.hpp"
#include "hypercross/rotation.hpp"
#include "hypercross/spinor.hpp"
#include "oracles.hpp"

using namespace hypercross;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome quaternion_table() {
  const BasisTable t = basis_table(2);
  bool ok = t(1, 2) == BasisProduct{1, 3} && t(2, 3) == BasisProduct{1, 1} &&
            t(3, 1) == BasisProduct{1, 2};
  for (int i = 1; i < 4; ++i) ok = ok && t(i, i) == BasisProduct{-1, 0};
  return {ok, "e1e2=" + to_string(t(1, 2)) + " e2e3=" + to_string(t(2, 3)) +
                  " e3e1=" + to_string(t(3, 1))};
}

Outcome octonion_anticommutation() {
  const BasisTable t = basis_table(3);
  int good = 0, squares = 0;
  for (int i = 1; i < 8; ++i) {
    squares += t(i, i) == BasisProduct{-1, 0};
    for (int j = i + 1; j < 8; ++j) {
      good += t(i, j) == BasisProduct{-t(j, i).sign, t(j, i).index};
    }
  }
  return {good == 21 && squares == 7,
          std::to_string(good) + "/21 pairs, " + std::to_string(squares) + "/7 squares"};
}

Outcome orthogonality(oracle::Rng& rng) {
  bool ok = true;
  std::string detail;
  for (int m : {2, 4, 8, 16}) {
    double gram = 0.0, square = 0.0;
    for (int s = 0; s < 1000; ++s) {
      const VectorXd u = rng.vector(m);
      const MatrixXd h = hurwitz_matrix(u).entries;
      const MatrixXd id = MatrixXd::Identity(m, m);
      gram = std::max(gram, oracle::max_abs(h.transpose() * h - u.squaredNorm() * id) /
                                u.squaredNorm());
      // H^2 = -|u|^2 I needs the diagonal coordinate at zero
      VectorXd p = u;
      p(scalar_slot(m)) = 0.0;
      const MatrixXd hp = hurwitz_matrix(p).entries;
      square = std::max(square, oracle::max_abs(hp * hp + p.squaredNorm() * id) / p.squaredNorm());
    }
    const bool m_ok = gram < 1e-12 && square < 1e-12;
    ok = ok && m_ok;
    detail += "m=" + std::to_string(m) + " " + fmt("%.1e", gram) + "/" + fmt("%.1e", square) +
              (m_ok ? "" : " (fails)") + (m == 16 ? "" : "; ");
  }
  return {ok, detail};
}

Outcome inertia(oracle::Rng& rng) {
  double worst = 0.0;
  for (int n : {3, 7}) {
    for (int s = 0; s < 1000; ++s) {
      const VectorXd r = rng.vector(n);
      const MatrixXd v = cross_matrix(r).entries;
      worst = std::max(worst, oracle::max_abs(inertia_tensor(r).entries - v.transpose() * v));
    }
  }
  return {worst < 1e-12, "max residual " + fmt("%.2e", worst)};
}

Outcome cubic(oracle::Rng& rng) {
  double worst = 0.0;
  for (int n : {3, 7}) {
    for (int s = 0; s < 1000; ++s) {
      const VectorXd r = rng.unit(n);
      const MatrixXd v = cross_matrix(r).entries;
      worst = std::max(worst, oracle::max_abs(v * v * v + r.squaredNorm() * v));
    }
  }
  return {worst < 1e-10, "max residual " + fmt("%.2e", worst)};
}

Outcome rotation(oracle::Rng& rng) {
  const double two_pi = 2.0 * std::numbers::pi;
  double worst = 0.0;
  for (int n : {3, 7}) {
    for (int s = 0; s < 500; ++s) {
      const VectorXd axis = rng.unit(n);
      const double theta = rng.uniform(-two_pi, two_pi);
      const MatrixXd expected = oracle::series_exp(theta * cross_matrix(axis).entries, 30);
      worst = std::max(worst, oracle::max_abs(rotation_matrix(axis, theta).entries - expected));
    }
  }
  return {worst < 1e-10, "max deviation " + fmt("%.2e", worst)};
}

Outcome sums_of_squares(oracle::Rng& rng) {
  double worst = 0.0;
  for (const auto& [kind, n] : {std::pair{TransformKind::kLeviCivita, 2},
                                {TransformKind::kKs, 4},
                                {TransformKind::kR8R5, 8},
                                {TransformKind::kR16R9, 16}}) {
    for (int s = 0; s < 1000; ++s) {
      const VectorXd u = rng.vector(n);
      const double lhs = transform(kind, u).z.norm();
      worst = std::max(worst, std::abs(lhs - u.squaredNorm()) / u.squaredNorm());
    }
  }
  return {worst < 1e-12, "max relative residual " + fmt("%.2e", worst)};
}

Outcome dimension_counting() {
  const std::vector<int> d = admissible_dimensions(100);
  std::string s;
  for (int n : d) s += (s.empty() ? "" : " ") + std::to_string(n);
  return {d == std::vector<int>{1, 3, 7}, "{" + s + "}"};
}

Outcome obstruction() {
  const auto t0 = std::chrono::steady_clock::now();
  const bool r1 = obstruction_search(1), r2 = obstruction_search(2);
  const bool r3 = obstruction_search(3), r4 = obstruction_search(4);
  const double secs = seconds_since(t0);
  const bool ok = r1 && r2 && !r3 && r4 && secs < 60.0;
  std::string detail = std::string("n=1 ") + (r1 ? "true" : "false") + ", n=2 " +
                       (r2 ? "true" : "false") + ", n=3 " + (r3 ? "true" : "false") + ", n=4 " +
                       (r4 ? "true" : "false") + fmt(", %.2f s", secs);
  return {ok, detail};
}

Outcome cross_axioms(oracle::Rng& rng) {
  double orth = 0.0, anti = 0.0, lagrange = 0.0;
  for (int s = 0; s < 1000; ++s) {
    const VectorXd a = rng.vector(7), b = rng.vector(7);
    const VectorXd c = cross(a, b);
    orth = std::max({orth, std::abs(c.dot(a)), std::abs(c.dot(b))});
    anti = std::max(anti, (c + cross(b, a)).cwiseAbs().maxCoeff());
    lagrange = std::max(lagrange, std::abs(c.squaredNorm() - (a.squaredNorm() * b.squaredNorm() -
                                                              a.dot(b) * a.dot(b))));
  }
  const bool fails7 = find_jacobi_failure(7).has_value();
  const bool holds3 = !find_jacobi_failure(3).has_value();
  const bool ok = orth < 1e-12 && anti < 1e-12 && lagrange < 1e-12 && fails7 && holds3;
  return {ok, "orth " + fmt("%.1e", orth) + ", anti " + fmt("%.1e", anti) + ", lagrange " +
                  fmt("%.1e", lagrange) + ", Jacobi witness 7-D " + (fails7 ? "yes" : "no") +
                  ", 3-D clean " + (holds3 ? "yes" : "no")};
}

Outcome spinors(oracle::Rng& rng) {
  double pauli = 0.0, dirac = 0.0;
  for (int s = 0; s < 1000; ++s) {
    const VectorXd u4 = rng.vector(4), u8 = rng.vector(8);
    pauli = std::max(
        pauli, (pauli_form(spinor_from_real(u4)) - ks_transform(u4).z).cwiseAbs().maxCoeff());
    dirac = std::max(
        dirac, (dirac_form(spinor_from_real(u8)) - hurwitz_r8_to_r5(u8).z).cwiseAbs().maxCoeff());
  }
  return {pauli < 1e-12 && dirac < 1e-12,
          "pauli " + fmt("%.2e", pauli) + ", dirac " + fmt("%.2e", dirac)};
}

Outcome sedenions() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto failure = find_norm_failure(4);
  const auto divisor = find_zero_divisor(4);
  const double secs = seconds_since(t0);
  bool ok = failure.has_value() && divisor.has_value() && secs < 10.0;
  std::string detail;
  if (divisor) {
    ok = ok && cd_multiply(divisor->left, divisor->right) == Hypercomplex(4);
    detail += "(e" + std::to_string(divisor->i) + "+e" + std::to_string(divisor->j) + ")(e" +
              std::to_string(divisor->k) + "-e" + std::to_string(divisor->l) + ")=0";
  }
  if (failure) {
    detail += fmt(", |xy|^2=%g", failure->product_norm_sq) +
              fmt(" vs %g", failure->norm_sq_product);
  }
  return {ok, detail + fmt(", %.3f s", secs)};
}

Outcome cli_verify() {
  const std::vector<std::string> args{"verify", "--samples", "1000", "--seed", "42"};
  std::ostringstream out1, err1, out2, err2;
  const int c1 = cli::run(args, out1, err1);
  const int c2 = cli::run(args, out2, err2);
  const bool same = out1.str() == out2.str();
  const std::string last = [&] {
    std::string s = out1.str();
    if (!s.empty()) s.pop_back();
    return s.substr(s.rfind('\n') + 1);
  }();
  return {c1 == 0 && c2 == 0 && same,
          "exit " + std::to_string(c1) + "/" + std::to_string(c2) +
              (same ? ", identical output, " : ", output differs, ") + last};
}

}  // namespace

int main() {
  oracle::Rng rng(20260418);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"quaternion table", quaternion_table},
      {"octonion anticommutation", octonion_anticommutation},
      {"Hurwitz orthogonality and H^2 = -|u|^2 I", [&] { return orthogonality(rng); }},
      {"inertia identity", [&] { return inertia(rng); }},
      {"cubic identity", [&] { return cubic(rng); }},
      {"rotation closed form vs series", [&] { return rotation(rng); }},
      {"sums of squares", [&] { return sums_of_squares(rng); }},
      {"dimension counting", dimension_counting},
      {"obstruction search", obstruction},
      {"7-D cross product axioms", [&] { return cross_axioms(rng); }},
      {"spinor reconciliation", [&] { return spinors(rng); }},
      {"sedenion findings", sedenions},
      {"CLI verify reproducibility", cli_verify},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Outcome o = criteria[i].second();
    failed += !o.passed;
    std::printf("%s %2zu %s: %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
