#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hypercross {

/// One matrix entry of the form 0, +x_k or -x_k (k is zero-based).
struct SignedVar {
  int sign = 0;  ///< 0 means the entry is identically zero
  int var = 0;

  static constexpr SignedVar zero() { return {0, 0}; }
  static constexpr SignedVar plus(int k) { return {1, k}; }
  static constexpr SignedVar minus(int k) { return {-1, k}; }

  bool is_zero() const { return sign == 0; }
  SignedVar negated() const { return {-sign, var}; }

  friend bool operator==(const SignedVar&, const SignedVar&) = default;
};

/// Square matrix whose entries are signed single coordinates of a generating
/// vector. Entries listed in `unknowns` are placeholders for cells
/// whose value is reconstructed by repair().
class LinearTemplate {
 public:
  LinearTemplate(std::size_t size, int num_vars);

  std::size_t size() const { return size_; }
  int num_vars() const { return num_vars_; }

  SignedVar& at(std::size_t i, std::size_t j) { return cells_[i * size_ + j]; }
  const SignedVar& at(std::size_t i, std::size_t j) const {
    return cells_[i * size_ + j];
  }

  void mark_unknown(std::size_t i, std::size_t j);
  const std::vector<std::pair<std::size_t, std::size_t>>& unknowns() const {
    return unknowns_;
  }

  Eigen::MatrixXd evaluate(const Eigen::VectorXd& x) const;

 private:
  std::size_t size_;
  int num_vars_;
  std::vector<SignedVar> cells_;
  std::vector<std::pair<std::size_t, std::size_t>> unknowns_;
};

/// Quadratic polynomial sum_{a<=b} coeff(a,b) x_a x_b with integer
/// coefficients.
class QuadPoly {
 public:
  explicit QuadPoly(int num_vars);

  int num_vars() const { return n_; }
  long coeff(int a, int b) const;
  void add(int a, int b, long c);

  friend bool operator==(const QuadPoly&, const QuadPoly&) = default;

 private:
  int n_;
  std::vector<long> c_;  // upper triangle, row-major, includes diagonal
};

/// Matrix of quadratic polynomials, e.g. the Gram matrix T^t T of a template.
using PolyMatrix = std::vector<std::vector<QuadPoly>>;

/// T^t T computed symbolically in exact integer arithmetic.
PolyMatrix gram(const LinearTemplate& t);

/// |x|^2 I.
PolyMatrix scaled_identity(std::size_t size, int num_vars);

/// |x|^2 I - x x^t; the Gram matrix of a cross-product matrix.
PolyMatrix lagrange_target(std::size_t size, int num_vars);

/// Product T x as linear-in-T, linear-in-x polynomials: row i is sum_j T_ij x_j.
std::vector<QuadPoly> apply_to_generator(const LinearTemplate& t,
                                         std::vector<int> generator_vars);

/// T + T^t == 0 exactly, except that the diagonal may hold the same entry
/// `diagonal` everywhere when it is given.
bool antisymmetric_up_to_scalar(const LinearTemplate& t,
                                std::optional<SignedVar> diagonal);

struct RepairResult {
  LinearTemplate repaired;
  std::vector<std::string> notes;  ///< one line per reconstructed cell
};

/// Fill every unknown cell with the unique value in {0, +-x_k} for which
/// `accept` holds; throws std::logic_error if no value or several values
/// qualify for any cell.
RepairResult repair(const LinearTemplate& t,
                    const std::function<bool(const LinearTemplate&)>& accept);

std::string to_string(const SignedVar& v, const std::string& symbol = "x");

}  // namespace hypercross
