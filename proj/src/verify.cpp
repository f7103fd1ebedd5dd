#include "hypercross/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>

#include "hypercross/algebra.hpp"
#include "hypercross/cross.hpp"
#include "hypercross/hurwitz.hpp"
#include "hypercross/rotation.hpp"
#include "hypercross/spinor.hpp"

namespace hypercross {

VerifyReport make_report(std::string name, std::size_t samples, double max_residual,
                         double tolerance) {
  return {std::move(name), samples, max_residual, tolerance, max_residual <= tolerance};
}

double SampleRng::uniform() {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return 2.0 * unit - 1.0;
}

double SampleRng::uniform(double lo, double hi) {
  return lo + (hi - lo) * 0.5 * (uniform() + 1.0);
}

Eigen::VectorXd SampleRng::vector(long n) {
  Eigen::VectorXd v(n);
  for (long i = 0; i < n; ++i) v(i) = uniform();
  return v;
}

Eigen::VectorXd SampleRng::unit_vector(long n) {
  while (true) {
    Eigen::VectorXd v = vector(n);
    const double norm = v.norm();
    if (norm > 1e-3) return v / norm;
  }
}

namespace {

using Mat = Eigen::MatrixXd;
using Reports = std::vector<VerifyReport>;

struct Context {
  const VerifyOptions& options;
  SampleRng rng;

  std::size_t n() const { return options.samples; }
  double tol(double default_tol) const { return options.tolerance.value_or(default_tol); }
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

Hypercomplex random_element(SampleRng& rng, int level) {
  const Eigen::VectorXd v = rng.vector(1L << level);
  return Hypercomplex(level, std::vector<double>(v.data(), v.data() + v.size()));
}

double max_abs(const Hypercomplex& a, const Hypercomplex& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

// Exact check: residual is the number of violations.
VerifyReport exact(std::string name, std::size_t cases, std::size_t violations) {
  return make_report(std::move(name), cases, static_cast<double>(violations), 0.0);
}

// Existence check: residual 0 when a witness was found, 1 otherwise.
VerifyReport witness(std::string name, std::size_t cases, bool found) {
  return make_report(std::move(name), cases, found ? 0.0 : 1.0, 0.0);
}

// Truncated Taylor series on a / 2^s with |a / 2^s| <= 1, then squared s times.
Mat series_exp(const Mat& a, int terms) {
  int squarings = 0;
  for (double norm = a.lpNorm<Eigen::Infinity>(); norm > 1.0; norm /= 2.0) ++squarings;
  const Mat scaled = a / std::ldexp(1.0, squarings);
  Mat sum = Mat::Identity(a.rows(), a.cols());
  Mat term = sum;
  for (int k = 1; k < terms; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

Reports suite_eq5(Context&) {
  const BasisTable t = basis_table(2);
  std::size_t bad = 0;
  bad += !(t(1, 2) == BasisProduct{1, 3});
  bad += !(t(2, 3) == BasisProduct{1, 1});
  bad += !(t(3, 1) == BasisProduct{1, 2});
  for (int i = 1; i < 4; ++i) bad += !(t(i, i) == BasisProduct{-1, 0});
  return {exact("eq5.quaternion_table", 6, bad)};
}

Reports suite_eq8(Context&) {
  const BasisTable t = basis_table(3);
  std::size_t bad = 0, pairs = 0;
  for (int i = 1; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) {
      ++pairs;
      bad += !(t(i, j).index == t(j, i).index && t(i, j).sign == -t(j, i).sign);
    }
  }
  std::size_t bad_sq = 0, units = 0;
  for (int k = 0; k <= kMaxLevel; ++k) {
    const BasisTable tk = basis_table(k);
    for (std::size_t i = 1; i < tk.dim(); ++i) {
      ++units;
      bad_sq += !(tk(i, i) == BasisProduct{-1, 0});
    }
  }
  return {exact("eq8.octonion_anticommute", pairs, bad),
          exact("eq8.unit_squares", units, bad_sq)};
}

Reports suite_composition(Context& c) {
  Reports out;
  for (int k = 0; k <= 3; ++k) {
    double worst = 0.0;
    for (std::size_t s = 0; s < c.n(); ++s) {
      const Hypercomplex a = random_element(c.rng, k), b = random_element(c.rng, k);
      const double rhs = norm_sq(a) * norm_sq(b);
      worst = std::max(worst, std::abs(norm_sq(cd_multiply(a, b)) - rhs) / rhs);
    }
    out.push_back(make_report("composition.norm_level" + std::to_string(k), c.n(), worst,
                              c.tol(1e-12)));
  }
  double left = 0.0, right = 0.0, anti = 0.0, real_part = 0.0, table = 0.0;
  for (std::size_t s = 0; s < c.n(); ++s) {
    const Hypercomplex a = random_element(c.rng, 3), b = random_element(c.rng, 3);
    left = std::max(left, max_abs(cd_multiply(a, cd_multiply(a, b)),
                                  cd_multiply(cd_multiply(a, a), b)));
    right = std::max(right, max_abs(cd_multiply(cd_multiply(b, a), a),
                                    cd_multiply(b, cd_multiply(a, a))));
    const Hypercomplex ab = cd_multiply(a, b);
    const double scale = std::sqrt(norm_sq(ab));
    table = std::max(table, max_abs(ab, table_multiply(a, b, cached_basis_table(3))) / scale);

    const Hypercomplex q = random_element(c.rng, 2), p = random_element(c.rng, 2);
    anti = std::max(anti, max_abs(conjugate(cd_multiply(q, p)),
                                  cd_multiply(conjugate(p), conjugate(q))));
    const Hypercomplex sed = random_element(c.rng, 4);
    real_part = std::max(real_part,
                         std::abs(norm_sq(sed) - cd_multiply(sed, conjugate(sed)).real()));
  }
  out.push_back(make_report("composition.alternative_left", c.n(), left, c.tol(1e-12)));
  out.push_back(make_report("composition.alternative_right", c.n(), right, c.tol(1e-12)));
  out.push_back(make_report("composition.conjugate_reverses", c.n(), anti, c.tol(1e-12)));
  out.push_back(make_report("composition.norm_is_real_part", c.n(), real_part, c.tol(1e-12)));
  out.push_back(make_report("composition.table_multiply", c.n(), table, c.tol(1e-13)));
  return out;
}

Reports suite_witness(Context& c) {
  Reports out;
  out.push_back(witness("witness.octonion_nonassociative", 343,
                        find_nonassociative_triple(3).has_value()));
  out.push_back(witness("witness.sedenion_zero_divisor", 11025,
                        find_zero_divisor(4).has_value()));
  out.push_back(witness("witness.sedenion_norm_failure", 1, find_norm_failure(4).has_value()));
  out.push_back(witness("witness.jacobi_fails_n7", 343, find_jacobi_failure(7).has_value()));
  out.push_back(exact("witness.jacobi_holds_n3", 27, find_jacobi_failure(3).has_value()));
  // Orthogonality at m = 16 cannot hold for a matrix linear in u.
  bool broken = false;
  for (std::size_t s = 0; s < c.n() && !broken; ++s) {
    const Eigen::VectorXd u = c.rng.vector(16);
    const Mat h = hurwitz_matrix(u).entries;
    broken = max_abs(h.transpose() * h - u.squaredNorm() * Mat::Identity(16, 16)) >
             1e-6 * u.squaredNorm();
  }
  out.push_back(witness("witness.h16_not_orthogonal", c.n(), broken));
  return out;
}

Reports suite_cross(Context& c) {
  Reports out;
  for (int n : {3, 7}) {
    const std::string p = "cross.n" + std::to_string(n) + ".";
    double orth = 0.0, anti = 0.0, lagrange = 0.0, algebra = 0.0;
    const SignedPermutation& map = algebra_coordinate_map(n);
    for (std::size_t s = 0; s < c.n(); ++s) {
      const Eigen::VectorXd a = c.rng.vector(n), b = c.rng.vector(n);
      const Eigen::VectorXd x = cross(a, b);
      orth = std::max({orth, std::abs(x.dot(a)), std::abs(x.dot(b))});
      anti = std::max(anti, (x + cross(b, a)).cwiseAbs().maxCoeff());
      const double rhs = a.squaredNorm() * b.squaredNorm() - std::pow(a.dot(b), 2);
      lagrange = std::max(lagrange, std::abs(x.squaredNorm() - rhs) /
                                        (a.squaredNorm() * b.squaredNorm()));
      algebra = std::max(algebra, (cross_from_algebra(map.apply(a), map.apply(b)) -
                                   map.apply(x)).cwiseAbs().maxCoeff());
    }
    out.push_back(make_report(p + "orthogonality", c.n(), orth, c.tol(1e-12)));
    out.push_back(make_report(p + "antisymmetry", c.n(), anti, c.tol(1e-12)));
    out.push_back(make_report(p + "lagrange", c.n(), lagrange, c.tol(1e-12)));
    out.push_back(make_report(p + "algebra_map", c.n(), algebra, c.tol(1e-12)));
  }
  return out;
}

Reports suite_eq2(Context& c) {
  Reports out;
  for (int n : {3, 7}) {
    double inertia = 0.0, energy = 0.0;
    for (std::size_t s = 0; s < c.n(); ++s) {
      const Eigen::VectorXd r = c.rng.vector(n), w = c.rng.vector(n);
      const Mat v = cross_matrix(r).entries;
      const Mat m = inertia_tensor(r).entries;
      inertia = std::max(inertia, max_abs(m - v.transpose() * v));
      energy = std::max(energy, std::abs(kinetic_energy(w, r) - 0.5 * w.dot(m * w)));
    }
    out.push_back(make_report("eq2.inertia_n" + std::to_string(n), c.n(), inertia,
                              c.tol(1e-12)));
    out.push_back(make_report("eq2.kinetic_n" + std::to_string(n), c.n(), energy,
                              c.tol(1e-12)));
  }
  return out;
}

Reports suite_eq3(Context& c) {
  Reports out;
  for (int m : {2, 4, 8}) {
    double worst = 0.0;
    for (std::size_t s = 0; s < c.n(); ++s) {
      const Eigen::VectorXd u = c.rng.vector(m);
      const Mat h = hurwitz_matrix(u).entries;
      const double n2 = u.squaredNorm();
      worst = std::max(worst, max_abs(h.transpose() * h - n2 * Mat::Identity(m, m)) / n2);
    }
    out.push_back(make_report("eq3.orthogonality_m" + std::to_string(m), c.n(), worst,
                              c.tol(1e-12)));
  }
  for (int n : {3, 7}) {
    double worst = 0.0;
    for (std::size_t s = 0; s < c.n(); ++s) {
      const Eigen::VectorXd r = c.rng.vector(n);
      const Mat h = bordered_from_cross(r).entries;
      const double n2 = r.squaredNorm();
      worst = std::max(worst,
                       max_abs(h.transpose() * h - n2 * Mat::Identity(n + 1, n + 1)) / n2);
    }
    out.push_back(make_report("eq3.bordered_n" + std::to_string(n), c.n(), worst,
                              c.tol(1e-12)));
  }
  return out;
}

Reports suite_eq15(Context& c) {
  Reports out;
  for (int n : {3, 7}) {
    double worst = 0.0;
    for (std::size_t s = 0; s < c.n(); ++s) {
      const Eigen::VectorXd r = c.rng.unit_vector(n);
      const Mat v = cross_matrix(r).entries;
      worst = std::max(worst, max_abs(v * v * v + r.squaredNorm() * v));
    }
    out.push_back(make_report("eq15.cubic_n" + std::to_string(n), c.n(), worst,
                              c.tol(1e-10)));
  }
  return out;
}

Reports suite_eq16(Context& c) {
  Reports out;
  const double two_pi = 2.0 * std::numbers::pi;
  for (int n : {3, 7}) {
    double series = 0.0, group = 0.0, det = 0.0, norm = 0.0;
    for (std::size_t s = 0; s < c.n(); ++s) {
      const Eigen::VectorXd axis = c.rng.unit_vector(n);
      const double t1 = c.rng.uniform(-two_pi, two_pi);
      const double t2 = c.rng.uniform(-two_pi, two_pi);
      const Mat r1 = rotation_matrix(axis, t1).entries;
      series = std::max(series, max_abs(r1 - series_exp(t1 * cross_matrix(axis).entries, 30)));
      group = std::max(group, max_abs(r1 * rotation_matrix(axis, t2).entries -
                                      rotation_matrix(axis, t1 + t2).entries));
      det = std::max(det, std::abs(r1.determinant() - 1.0));
      const Eigen::VectorXd v = c.rng.vector(n);
      norm = std::max(norm, std::abs((r1 * v).norm() - v.norm()) / v.norm());
    }
    const std::string p = "eq16.n" + std::to_string(n) + ".";
    out.push_back(make_report(p + "series", c.n(), series, c.tol(1e-10)));
    out.push_back(make_report(p + "group_law", c.n(), group, c.tol(1e-10)));
    out.push_back(make_report(p + "determinant", c.n(), det, c.tol(n == 3 ? 1e-10 : 1e-8)));
    out.push_back(make_report(p + "preserves_norm", c.n(), norm, c.tol(1e-10)));
  }
  return out;
}

Reports suite_eq17(Context& c) {
  Reports out;
  for (int m : {2, 4, 8}) {
    double worst = 0.0;
    for (std::size_t s = 0; s < c.n(); ++s) {
      Eigen::VectorXd u = c.rng.vector(m);
      u(scalar_slot(m)) = 0.0;
      const Mat h = hurwitz_matrix(u).entries;
      const double n2 = u.squaredNorm();
      worst = std::max(worst, max_abs(h * h + n2 * Mat::Identity(m, m)) / n2);
    }
    out.push_back(make_report("eq17.square_m" + std::to_string(m), c.n(), worst,
                              c.tol(1e-12)));
  }
  for (int n : {3, 7}) {
    double worst = 0.0;
    for (std::size_t s = 0; s < c.n(); ++s) {
      const Eigen::VectorXd r = c.rng.vector(n);
      const Mat h = bordered_from_cross(r).entries;
      const double n2 = r.squaredNorm();
      worst = std::max(worst, max_abs(h * h + n2 * Mat::Identity(n + 1, n + 1)) / n2);
    }
    out.push_back(make_report("eq17.bordered_n" + std::to_string(n), c.n(), worst,
                              c.tol(1e-12)));
  }
  return out;
}

Reports suite_sums_of_squares(Context& c) {
  Reports out;
  const std::pair<TransformKind, int> kinds[] = {{TransformKind::kLeviCivita, 2},
                                                 {TransformKind::kKs, 4},
                                                 {TransformKind::kR8R5, 8},
                                                 {TransformKind::kR16R9, 16}};
  for (const auto& [kind, dim] : kinds) {
    double worst = 0.0;
    for (std::size_t s = 0; s < c.n(); ++s) {
      const Eigen::VectorXd u = c.rng.vector(dim);
      const double n2 = u.squaredNorm();
      worst = std::max(worst, std::abs(transform(kind, u).z.norm() - n2) / n2);
    }
    out.push_back(make_report("sos." + to_string(kind), c.n(), worst, c.tol(1e-12)));
  }
  double ks = 0.0, r8 = 0.0;
  for (std::size_t s = 0; s < c.n(); ++s) {
    const Eigen::VectorXd u4 = c.rng.vector(4), u8 = c.rng.vector(8);
    ks = std::max(ks, (ks_transform(u4).z - hurwitz_recursive(u4).z).cwiseAbs().maxCoeff());
    r8 = std::max(r8, (hurwitz_r8_to_r5(u8).z - hurwitz_recursive(u8).z).cwiseAbs().maxCoeff());
  }
  out.push_back(make_report("sos.ks_matches_recursive", c.n(), ks, c.tol(1e-12)));
  out.push_back(make_report("sos.r8r5_matches_recursive", c.n(), r8, c.tol(1e-12)));
  return out;
}

Reports suite_spinor(Context& c) {
  double pauli = 0.0, dirac = 0.0, imag = 0.0;
  for (std::size_t s = 0; s < c.n(); ++s) {
    const Eigen::VectorXd u4 = c.rng.vector(4), u8 = c.rng.vector(8);
    pauli = std::max(pauli, (pauli_form(spinor_from_real(u4)) - ks_transform(u4).z)
                                .cwiseAbs().maxCoeff());
    const ComplexSpinor v8 = spinor_from_real(u8);
    dirac = std::max(dirac, (dirac_form(v8) - hurwitz_r8_to_r5(u8).z).cwiseAbs().maxCoeff());
    for (const NamedForm& f : dirac_forms()) {
      imag = std::max(imag, std::abs(hermitian_form(v8.v, f.matrix).imag()));
    }
  }
  return {make_report("spinor.pauli_matches_ks", c.n(), pauli, c.tol(1e-12)),
          make_report("spinor.dirac_matches_r8r5", c.n(), dirac, c.tol(1e-12)),
          make_report("spinor.forms_real", c.n(), imag, c.tol(1e-14))};
}

Reports suite_dims(Context&) {
  const std::vector<int> expected{1, 3, 7};
  return {exact("dims.admissible_100", 100, admissible_dimensions(100) != expected)};
}

Reports suite_obstruction(Context&) {
  Reports out;
  for (int n = 1; n <= 4; ++n) {
    const bool expected = n != 3;
    out.push_back(exact("obstruction.n" + std::to_string(n), 1,
                        obstruction_search(n) != expected));
  }
  return out;
}

using SuiteFn = Reports (*)(Context&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites = {
      {"composition", suite_composition},
      {"cross", suite_cross},
      {"dims", suite_dims},
      {"eq15", suite_eq15},
      {"eq16", suite_eq16},
      {"eq17", suite_eq17},
      {"eq2", suite_eq2},
      {"eq3", suite_eq3},
      {"eq5", suite_eq5},
      {"eq8", suite_eq8},
      {"obstruction", suite_obstruction},
      {"spinor", suite_spinor},
      {"sums-of-squares", suite_sums_of_squares},
      {"witness", suite_witness},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<VerifyReport> run_suite(const std::string& name, const VerifyOptions& options) {
  const auto it = registry().find(name);
  if (it == registry().end()) {
    throw std::invalid_argument("unknown verification suite '" + name + "'");
  }
  Context ctx{options, SampleRng(options.seed ^ fnv1a(name))};
  return it->second(ctx);
}

std::vector<VerifyReport> run_suites(const std::vector<std::string>& names,
                                     const VerifyOptions& options) {
  const std::vector<std::string>& selected = names.empty() ? suite_names() : names;
  std::vector<VerifyReport> all;
  for (const std::string& name : selected) {
    Reports r = run_suite(name, options);
    all.insert(all.end(), r.begin(), r.end());
  }
  std::stable_sort(all.begin(), all.end(), [](const VerifyReport& a, const VerifyReport& b) {
    return a.identity_name < b.identity_name;
  });
  return all;
}

}  // namespace hypercross
