#include "hypercross/algebra.hpp"

#include <array>
#include <bit>
#include <mutex>
#include <utility>

namespace hypercross {
namespace {

void check_level(int level) {
  if (level < 0 || level > kMaxLevel) {
    throw LevelError("Cayley-Dickson level " + std::to_string(level) +
                     " outside supported range 0.." +
                     std::to_string(kMaxLevel));
  }
}

std::size_t dim_of(int level) { return std::size_t{1} << level; }

void conj_into(std::span<const double> x, std::span<double> out) {
  out[0] = x[0];
  for (std::size_t i = 1; i < x.size(); ++i) out[i] = -x[i];
}

// out = x * y on 2^k coefficients. out must not alias x or y.
void cd_product(std::span<const double> x, std::span<const double> y,
                std::span<double> out) {
  const std::size_t n = x.size();
  if (n == 1) {
    out[0] = x[0] * y[0];
    return;
  }
  const std::size_t h = n / 2;
  const auto a = x.first(h), b = x.subspan(h);
  const auto c = y.first(h), d = y.subspan(h);

  std::vector<double> scratch(4 * h);
  std::span<double> conj_c(scratch.data(), h);
  std::span<double> conj_d(scratch.data() + h, h);
  std::span<double> t1(scratch.data() + 2 * h, h);
  std::span<double> t2(scratch.data() + 3 * h, h);
  conj_into(c, conj_c);
  conj_into(d, conj_d);

  // lower half: a c - conj(d) b
  cd_product(a, c, t1);
  cd_product(conj_d, b, t2);
  for (std::size_t i = 0; i < h; ++i) out[i] = t1[i] - t2[i];
  // upper half: d a + b conj(c)
  cd_product(d, a, t1);
  cd_product(b, conj_c, t2);
  for (std::size_t i = 0; i < h; ++i) out[h + i] = t1[i] + t2[i];
}

// Same doubling rule on basis units, tracked as (sign, index) in integers.
BasisProduct unit_product(int level, int i, int j) {
  if (level == 0) return {1, 0};
  const int h = 1 << (level - 1);
  if (i < h && j < h) return unit_product(level - 1, i, j);
  if (i < h) {
    // (e_i, 0)(0, e_j') = (0, e_j' e_i)
    const BasisProduct p = unit_product(level - 1, j - h, i);
    return {p.sign, h + p.index};
  }
  if (j < h) {
    // (0, e_i')(e_j, 0) = (0, e_i' conj(e_j))
    const BasisProduct p = unit_product(level - 1, i - h, j);
    return {j == 0 ? p.sign : -p.sign, h + p.index};
  }
  // (0, e_i')(0, e_j') = (-conj(e_j') e_i', 0)
  const int jp = j - h;
  const BasisProduct p = unit_product(level - 1, jp, i - h);
  return {jp == 0 ? -p.sign : p.sign, p.index};
}

}  // namespace

Hypercomplex::Hypercomplex(int level) : level_(level) {
  check_level(level);
  coeffs_.assign(dim_of(level), 0.0);
}

Hypercomplex::Hypercomplex(int level, std::vector<double> coeffs)
    : level_(level), coeffs_(std::move(coeffs)) {
  check_level(level);
  if (coeffs_.size() != dim_of(level)) {
    throw LevelError("level " + std::to_string(level) + " needs " +
                     std::to_string(dim_of(level)) + " coefficients, got " +
                     std::to_string(coeffs_.size()));
  }
}

Hypercomplex::Hypercomplex(int level, std::initializer_list<double> coeffs)
    : Hypercomplex(level, std::vector<double>(coeffs)) {}

Hypercomplex Hypercomplex::basis(int level, std::size_t index, double scale) {
  Hypercomplex e(level);
  if (index >= e.dim()) {
    throw LevelError("basis index " + std::to_string(index) +
                     " out of range for level " + std::to_string(level));
  }
  e.coeffs_[index] = scale;
  return e;
}

Hypercomplex Hypercomplex::from_coeffs(std::vector<double> coeffs) {
  const std::size_t n = coeffs.size();
  if (n == 0 || !std::has_single_bit(n)) {
    throw LevelError("coefficient count " + std::to_string(n) +
                     " is not a power of two");
  }
  return Hypercomplex(std::countr_zero(n), std::move(coeffs));
}

std::vector<double> Hypercomplex::imaginary() const {
  return {coeffs_.begin() + 1, coeffs_.end()};
}

namespace {
void require_same_level(const Hypercomplex& a, const Hypercomplex& b) {
  if (a.level() != b.level()) {
    throw LevelError("level mismatch: " + std::to_string(a.level()) + " vs " +
                     std::to_string(b.level()));
  }
}
}  // namespace

Hypercomplex operator+(const Hypercomplex& a, const Hypercomplex& b) {
  require_same_level(a, b);
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return Hypercomplex(a.level(), std::move(out));
}

Hypercomplex operator-(const Hypercomplex& a, const Hypercomplex& b) {
  require_same_level(a, b);
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
  return Hypercomplex(a.level(), std::move(out));
}

Hypercomplex operator-(const Hypercomplex& a) { return -1.0 * a; }

Hypercomplex operator*(double s, const Hypercomplex& a) {
  std::vector<double> out(a.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * a[i];
  return Hypercomplex(a.level(), std::move(out));
}

Hypercomplex operator*(const Hypercomplex& a, const Hypercomplex& b) {
  return cd_multiply(a, b);
}

Hypercomplex cd_multiply(const Hypercomplex& a, const Hypercomplex& b) {
  require_same_level(a, b);
  std::vector<double> out(a.dim());
  cd_product(a.coeffs(), b.coeffs(), out);
  return Hypercomplex(a.level(), std::move(out));
}

Hypercomplex conjugate(const Hypercomplex& a) {
  std::vector<double> out(a.dim());
  conj_into(a.coeffs(), out);
  return Hypercomplex(a.level(), std::move(out));
}

double norm_sq(const Hypercomplex& a) {
  double s = 0.0;
  for (double c : a.coeffs()) s += c * c;
  return s;
}

BasisTable::BasisTable(int level, std::vector<BasisProduct> entries)
    : level_(level), entries_(std::move(entries)) {
  check_level(level);
  if (entries_.size() != dim() * dim()) {
    throw LevelError("basis table for level " + std::to_string(level) +
                     " has wrong entry count");
  }
}

BasisTable basis_table(int k) {
  check_level(k);
  const int n = 1 << k;
  std::vector<BasisProduct> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) entries.push_back(unit_product(k, i, j));
  }
  return BasisTable(k, std::move(entries));
}

const BasisTable& cached_basis_table(int k) {
  check_level(k);
  static std::array<std::once_flag, kMaxLevel + 1> once;
  static std::array<std::vector<BasisTable>, kMaxLevel + 1> tables;
  std::call_once(once[k], [k] { tables[k].push_back(basis_table(k)); });
  return tables[k].front();
}

Hypercomplex table_multiply(const Hypercomplex& a, const Hypercomplex& b,
                            const BasisTable& table) {
  require_same_level(a, b);
  if (table.level() != a.level()) {
    throw LevelError("basis table level " + std::to_string(table.level()) +
                     " does not match operand level " +
                     std::to_string(a.level()));
  }
  const std::size_t n = a.dim();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const BasisProduct& p = table(i, j);
      out[p.index] += p.sign * (a[i] * b[j]);
    }
  }
  return Hypercomplex(a.level(), std::move(out));
}

std::string to_string(const BasisProduct& p) {
  return (p.sign < 0 ? "-e" : "+e") + std::to_string(p.index);
}

std::optional<BasisTriple> find_nonassociative_triple(int level) {
  const int n = 1 << level;
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      for (int k = 1; k < n; ++k) {
        const Hypercomplex ei = Hypercomplex::basis(level, i);
        const Hypercomplex ej = Hypercomplex::basis(level, j);
        const Hypercomplex ek = Hypercomplex::basis(level, k);
        if (cd_multiply(cd_multiply(ei, ej), ek) != cd_multiply(ei, cd_multiply(ej, ek))) {
          return BasisTriple{i, j, k};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<ZeroDivisor> find_zero_divisor(int level) {
  const int n = 1 << level;
  const Hypercomplex zero(level);
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Hypercomplex left = Hypercomplex::basis(level, i) + Hypercomplex::basis(level, j);
      for (int k = 1; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
          const Hypercomplex right =
              Hypercomplex::basis(level, k) - Hypercomplex::basis(level, l);
          if (cd_multiply(left, right) == zero) return ZeroDivisor{i, j, k, l, left, right};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<NormFailure> find_norm_failure(int level) {
  const int n = 1 << level;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Hypercomplex x = Hypercomplex::basis(level, i) + Hypercomplex::basis(level, j);
      for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
          for (double s : {1.0, -1.0}) {
            const Hypercomplex y =
                Hypercomplex::basis(level, k) + Hypercomplex::basis(level, l, s);
            const double lhs = norm_sq(cd_multiply(x, y));
            const double rhs = norm_sq(x) * norm_sq(y);
            if (lhs != rhs) return NormFailure{x, y, lhs, rhs};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace hypercross
