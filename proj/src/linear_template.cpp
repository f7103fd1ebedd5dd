#include "hypercross/linear_template.hpp"

#include <stdexcept>
#include <utility>

namespace hypercross {

LinearTemplate::LinearTemplate(std::size_t size, int num_vars)
    : size_(size), num_vars_(num_vars), cells_(size * size) {}

void LinearTemplate::mark_unknown(std::size_t i, std::size_t j) {
  unknowns_.emplace_back(i, j);
  at(i, j) = SignedVar::zero();
}

Eigen::MatrixXd LinearTemplate::evaluate(const Eigen::VectorXd& x) const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size_, size_);
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) {
      const SignedVar& c = at(i, j);
      if (!c.is_zero()) m(i, j) = c.sign * x(c.var);
    }
  }
  return m;
}

QuadPoly::QuadPoly(int num_vars)
    : n_(num_vars), c_(static_cast<std::size_t>(num_vars) * (num_vars + 1) / 2) {}

namespace {
std::size_t tri_index(int n, int a, int b) {
  if (a > b) std::swap(a, b);
  // rows 0..a-1 hold n, n-1, ..., n-a+1 entries
  return static_cast<std::size_t>(a) * n - static_cast<std::size_t>(a) * (a - 1) / 2 +
         (b - a);
}
}  // namespace

long QuadPoly::coeff(int a, int b) const { return c_[tri_index(n_, a, b)]; }

void QuadPoly::add(int a, int b, long c) { c_[tri_index(n_, a, b)] += c; }

PolyMatrix gram(const LinearTemplate& t) {
  const std::size_t n = t.size();
  PolyMatrix g(n, std::vector<QuadPoly>(n, QuadPoly(t.num_vars())));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const SignedVar& p = t.at(k, i);
        const SignedVar& q = t.at(k, j);
        if (p.is_zero() || q.is_zero()) continue;
        g[i][j].add(p.var, q.var, p.sign * q.sign);
      }
    }
  }
  return g;
}

PolyMatrix scaled_identity(std::size_t size, int num_vars) {
  PolyMatrix g(size, std::vector<QuadPoly>(size, QuadPoly(num_vars)));
  for (std::size_t i = 0; i < size; ++i) {
    for (int a = 0; a < num_vars; ++a) g[i][i].add(a, a, 1);
  }
  return g;
}

PolyMatrix lagrange_target(std::size_t size, int num_vars) {
  PolyMatrix g = scaled_identity(size, num_vars);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      g[i][j].add(static_cast<int>(i), static_cast<int>(j), -1);
    }
  }
  return g;
}

std::vector<QuadPoly> apply_to_generator(const LinearTemplate& t,
                                         std::vector<int> generator_vars) {
  if (generator_vars.size() != t.size()) {
    throw std::invalid_argument("generator length does not match template");
  }
  std::vector<QuadPoly> rows(t.size(), QuadPoly(t.num_vars()));
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      const SignedVar& c = t.at(i, j);
      if (c.is_zero() || generator_vars[j] < 0) continue;
      rows[i].add(c.var, generator_vars[j], c.sign);
    }
  }
  return rows;
}

bool antisymmetric_up_to_scalar(const LinearTemplate& t,
                                std::optional<SignedVar> diagonal) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    const SignedVar expected = diagonal.value_or(SignedVar::zero());
    if (t.at(i, i) != expected) return false;
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t.at(i, j) != t.at(j, i).negated()) return false;
    }
  }
  return true;
}

namespace {

std::vector<SignedVar> candidates(int num_vars) {
  std::vector<SignedVar> out{SignedVar::zero()};
  for (int k = 0; k < num_vars; ++k) {
    out.push_back(SignedVar::plus(k));
    out.push_back(SignedVar::minus(k));
  }
  return out;
}

void enumerate_repairs(LinearTemplate& work, std::size_t depth,
                       const std::vector<SignedVar>& cands,
                       const std::function<bool(const LinearTemplate&)>& accept,
                       std::vector<LinearTemplate>& found) {
  const auto& unknowns = work.unknowns();
  if (depth == unknowns.size()) {
    if (accept(work)) found.push_back(work);
    return;
  }
  const auto [i, j] = unknowns[depth];
  for (const SignedVar& c : cands) {
    work.at(i, j) = c;
    enumerate_repairs(work, depth + 1, cands, accept, found);
  }
  work.at(i, j) = SignedVar::zero();
}

}  // namespace

RepairResult repair(const LinearTemplate& t,
                    const std::function<bool(const LinearTemplate&)>& accept) {
  LinearTemplate work = t;
  std::vector<LinearTemplate> found;
  enumerate_repairs(work, 0, candidates(t.num_vars()), accept, found);
  if (found.size() != 1) {
    throw std::logic_error("template repair is not unique: " +
                           std::to_string(found.size()) + " candidates");
  }
  RepairResult result{found.front(), {}};
  for (const auto& [i, j] : t.unknowns()) {
    result.notes.push_back("entry (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ") = " +
                           to_string(result.repaired.at(i, j), "u"));
  }
  return result;
}

std::string to_string(const SignedVar& v, const std::string& symbol) {
  if (v.is_zero()) return "0";
  return (v.sign < 0 ? "-" : "") + symbol + std::to_string(v.var + 1);
}

}  // namespace hypercross
