#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypercross {

/// Highest Cayley-Dickson level accepted (level 5 has 32 coefficients).
inline constexpr int kMaxLevel = 5;

class LevelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element of the level-k Cayley-Dickson algebra: reals (k=0), complexes,
/// quaternions, octonions, sedenions, and one level beyond.
///
/// coeffs()[0] is the real part and coeffs()[i] the coefficient of e_i.
/// Values are immutable once built; all arithmetic returns new elements.
class Hypercomplex {
 public:
  /// Zero element at `level`.
  explicit Hypercomplex(int level);
  Hypercomplex(int level, std::vector<double> coeffs);
  Hypercomplex(int level, std::initializer_list<double> coeffs);

  /// Unit basis element e_index at `level` (e_0 is the identity).
  static Hypercomplex basis(int level, std::size_t index, double scale = 1.0);

  /// Level deduced from the coefficient count, which must be a power of two.
  static Hypercomplex from_coeffs(std::vector<double> coeffs);

  int level() const { return level_; }
  std::size_t dim() const { return coeffs_.size(); }
  std::span<const double> coeffs() const { return coeffs_; }
  double operator[](std::size_t i) const { return coeffs_[i]; }
  double real() const { return coeffs_[0]; }

  /// Coefficients 1..dim-1.
  std::vector<double> imaginary() const;

  friend Hypercomplex operator+(const Hypercomplex& a, const Hypercomplex& b);
  friend Hypercomplex operator-(const Hypercomplex& a, const Hypercomplex& b);
  friend Hypercomplex operator-(const Hypercomplex& a);
  friend Hypercomplex operator*(double s, const Hypercomplex& a);
  friend Hypercomplex operator*(const Hypercomplex& a, const Hypercomplex& b);
  friend bool operator==(const Hypercomplex& a, const Hypercomplex& b) = default;

 private:
  int level_;
  std::vector<double> coeffs_;
};

/// Cayley-Dickson product with the doubling rule
///   (a, b)(c, d) = (ac - conj(d) b,  d a + b conj(c)),
/// where an element of level k is split into two level-(k-1) halves.
/// This convention gives e1 e2 = e3, e2 e3 = e1, e3 e1 = e2 for quaternions.
Hypercomplex cd_multiply(const Hypercomplex& a, const Hypercomplex& b);

Hypercomplex conjugate(const Hypercomplex& a);

/// Sum of squared coefficients; equals the real part of a * conj(a).
double norm_sq(const Hypercomplex& a);

/// e_i e_j = sign * e_index.
struct BasisProduct {
  int sign = 1;
  int index = 0;

  friend bool operator==(const BasisProduct&, const BasisProduct&) = default;
};

/// Exact multiplication table of the basis units at one level.
class BasisTable {
 public:
  BasisTable(int level, std::vector<BasisProduct> entries);

  int level() const { return level_; }
  std::size_t dim() const { return std::size_t{1} << level_; }
  const BasisProduct& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * dim() + j];
  }

 private:
  int level_;
  std::vector<BasisProduct> entries_;
};

/// Table of e_i e_j for 0 <= k <= kMaxLevel. Built from cd_multiply on basis
/// units with integer sign bookkeeping, so every entry is exact.
BasisTable basis_table(int k);

/// Cached table for level k; the reference stays valid for the program's life.
const BasisTable& cached_basis_table(int k);

/// Bilinear expansion of a * b over a precomputed table.
Hypercomplex table_multiply(const Hypercomplex& a, const Hypercomplex& b,
                            const BasisTable& table);

std::string to_string(const BasisProduct& p);

/// Indices (i, j, k) of basis units, all >= 1.
struct BasisTriple {
  int i = 0, j = 0, k = 0;
};

/// First (lexicographic) triple with (e_i e_j) e_k != e_i (e_j e_k).
std::optional<BasisTriple> find_nonassociative_triple(int level);

/// left * right == 0 exactly with left = e_i + e_j, right = e_k - e_l.
struct ZeroDivisor {
  int i = 0, j = 0, k = 0, l = 0;
  Hypercomplex left, right;
};

/// Exhaustive scan over 1 <= i < j, 1 <= k < l; first hit in lexicographic
/// order of (i, j, k, l).
std::optional<ZeroDivisor> find_zero_divisor(int level);

/// x = e_i + e_j, y = e_k +- e_l with norm_sq(x y) != norm_sq(x) norm_sq(y).
struct NormFailure {
  Hypercomplex x, y;
  double product_norm_sq = 0.0;
  double norm_sq_product = 0.0;
};

std::optional<NormFailure> find_norm_failure(int level);

}  // namespace hypercross
