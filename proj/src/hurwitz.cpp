#include "hypercross/hurwitz.hpp"

#include <array>
#include <bit>
#include <cstdlib>

#include "hypercross/algebra.hpp"
#include "hypercross/cross.hpp"
#include "hypercross/errors.hpp"

namespace hypercross {
namespace {

void require_hurwitz_size(long m) {
  if (m != 2 && m != 4 && m != 8 && m != 16) {
    throw DimensionError("Hurwitz matrix size must be one of {2, 4, 8, 16}, got " +
                         std::to_string(m));
  }
}

void require_bordered_dim(long n) {
  if (n != 3 && n != 7) {
    throw DimensionError("bordered cross matrix needs dimension 3 or 7, got " +
                         std::to_string(n));
  }
}

void require_dim(const VecN& u, long n, const char* what) {
  if (u.size() != n) {
    throw DimensionError(std::string(what) + " needs a vector of dimension " +
                         std::to_string(n) + ", got " + std::to_string(u.size()));
  }
}

// Signed 1-based cell codes; 0 is a zero entry, kUnknown a cell to reconstruct.
constexpr int kUnknown = 99;

LinearTemplate from_codes(int m, const int* cells) {
  LinearTemplate t(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const int c = cells[i * m + j];
      if (c == kUnknown) {
        t.mark_unknown(i, j);
      } else if (c != 0) {
        t.at(i, j) = {c > 0 ? 1 : -1, std::abs(c) - 1};
      }
    }
  }
  return t;
}

LinearTemplate tabulated_h2() {
  static const int cells[] = {
      1, 2,
     -2, 1,
  };
  return from_codes(2, cells);
}

LinearTemplate tabulated_h4() {
  static const int cells[] = {
      3,  4,  1,  2,
     -4,  3,  2, -1,
     -1, -2,  3,  4,
     -2,  1, -4,  3,
  };
  return from_codes(4, cells);
}

LinearTemplate tabulated_h8_raw() {
  static const int cells[] = {
      5,  6,  7,  8,  1,  2,  3,  4,
     -6,  5,  8, -7,  2, -1, -4,  3,
     -7, -8,  5,  6,  3,  4, -1, -2,
     -8,  7, -6,  5,  4, -3,  2, -1,
     -1, -2, kUnknown, -4,  5,  6,  7,  8,
     -2,  1, -4,  3, -6,  5, -8,  7,
     -3,  4,  1, -2, -7,  8,  5, -6,
     -4, -3,  2,  1, -8, -7,  6,  5,
  };
  return from_codes(8, cells);
}

const RepairResult& repaired_h8() {
  static const RepairResult result = [] {
    const int slot = scalar_slot(8);
    return repair(tabulated_h8_raw(), [slot](const LinearTemplate& t) {
      return antisymmetric_up_to_scalar(t, SignedVar::plus(slot)) &&
             gram(t) == scaled_identity(8, 8);
    });
  }();
  return result;
}

LinearTemplate bordered(int n) {
  const LinearTemplate& v = cross_template(n);
  LinearTemplate t(n + 1, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t.at(i, j) = v.at(i, j);
    t.at(i, n) = SignedVar::plus(i);
    t.at(n, i) = SignedVar::minus(i);
  }
  return t;
}

TransformResult read_system(const LinearTemplate& t, const VecN& u) {
  const long m = u.size();
  const VecN y = t.evaluate(u) * u;
  VecN z(m / 2 + 1);
  z(0) = y(0);
  for (long i = 1; i < z.size(); ++i) z(i) = -y(i);
  return {z, static_cast<int>(m / 2 - 1)};
}

}  // namespace

int scalar_slot(int m) {
  require_hurwitz_size(m);
  return m == 2 ? 0 : m / 2;
}

LinearTemplate doubling_template(int m) {
  require_hurwitz_size(m);
  const int h = m / 2;
  const BasisTable& table = cached_basis_table(std::countr_zero(static_cast<unsigned>(h)));
  LinearTemplate t(m, m);
  // column j of M(x) is conj(x) e_j; column j of N(x) is e_j conj(x)
  for (int i = 0; i < h; ++i) {
    const int conj_sign = i == 0 ? 1 : -1;
    for (int j = 0; j < h; ++j) {
      const BasisProduct left = table(i, j);   // e_i e_j
      const BasisProduct right = table(j, i);  // e_j e_i
      const int ms = conj_sign * left.sign;
      const int ns = conj_sign * right.sign;
      const int jsign_m = left.index == 0 ? 1 : -1;
      const int jsign_n = right.index == 0 ? 1 : -1;
      // top-left M(b), top-right J M(a)
      t.at(left.index, j) = {ms, h + i};
      t.at(left.index, h + j) = {jsign_m * ms, i};
      // bottom-left -J N(a), bottom-right N(b)
      t.at(h + right.index, j) = {-jsign_n * ns, i};
      t.at(h + right.index, h + j) = {ns, h + i};
    }
  }
  return t;
}

const LinearTemplate& hurwitz_template(int m) {
  require_hurwitz_size(m);
  static const LinearTemplate h2 = tabulated_h2();
  static const LinearTemplate h4 = tabulated_h4();
  static const LinearTemplate h16 = doubling_template(16);
  switch (m) {
    case 2:
      return h2;
    case 4:
      return h4;
    case 8:
      return repaired_h8().repaired;
    default:
      return h16;
  }
}

const std::vector<std::string>& hurwitz_repair_notes() {
  return repaired_h8().notes;
}

HurwitzMatrix hurwitz_matrix(const VecN& u) {
  require_hurwitz_size(u.size());
  return {hurwitz_template(static_cast<int>(u.size())).evaluate(u)};
}

const LinearTemplate& bordered_template(int n) {
  require_bordered_dim(n);
  static const LinearTemplate b3 = bordered(3);
  static const LinearTemplate b7 = bordered(7);
  return n == 3 ? b3 : b7;
}

HurwitzMatrix bordered_from_cross(const VecN& r) {
  require_bordered_dim(r.size());
  return {bordered_template(static_cast<int>(r.size())).evaluate(r)};
}

VecN BorderedReconciliation::embed(const VecN& r) const {
  VecN u = VecN::Zero(static_cast<long>(u_from_r.size()));
  for (std::size_t l = 0; l < u_from_r.size(); ++l) {
    const SignedVar& s = u_from_r[l];
    if (!s.is_zero()) u(l) = s.sign * r(s.var);
  }
  return u;
}

const BorderedReconciliation& bordered_reconciliation(int n) {
  require_bordered_dim(n);
  using S = SignedVar;
  static const BorderedReconciliation r3{
      {S::plus(1), S::plus(0), S::zero(), S::plus(2)},
      {1, -1, 1, -1},
      {-1, 1, -1, 1}};
  static const BorderedReconciliation r7{
      {S::plus(3), S::plus(2), S::plus(1), S::plus(0), S::zero(), S::plus(6),
       S::plus(5), S::plus(4)},
      {1, 1, -1, -1, 1, 1, -1, 1},
      {1, 1, -1, -1, 1, 1, -1, 1}};
  return n == 3 ? r3 : r7;
}

TransformResult levi_civita(const VecN& u) {
  require_dim(u, 2, "Levi-Civita transformation");
  VecN z(2);
  z << u(0) * u(0) - u(1) * u(1), 2.0 * u(0) * u(1);
  return {z, 0};
}

TransformResult ks_transform(const VecN& u) {
  require_dim(u, 4, "Kustaanheimo-Stiefel transformation");
  return read_system(hurwitz_template(4), u);
}

TransformResult hurwitz_r8_to_r5(const VecN& u) {
  require_dim(u, 8, "R^8 -> R^5 transformation");
  return read_system(hurwitz_template(8), u);
}

TransformResult hurwitz_recursive(const VecN& u) {
  const long n = u.size();
  if (n != 2 && n != 4 && n != 8 && n != 16) {
    throw DimensionError(
        "recursive Hurwitz transformation needs dimension 2m with m in "
        "{1, 2, 4, 8}, got " + std::to_string(n));
  }
  const long m = n / 2;
  const int level = std::countr_zero(static_cast<unsigned long>(m));
  const VecN a = u.head(m), b = u.tail(m);
  const Hypercomplex ha(level, std::vector<double>(a.data(), a.data() + m));
  const Hypercomplex hb(level, std::vector<double>(b.data(), b.data() + m));
  const Hypercomplex p = cd_multiply(conjugate(ha), hb);
  VecN z(m + 1);
  for (long i = 0; i < m; ++i) z(i) = 2.0 * p[i];
  z(m) = a.squaredNorm() - b.squaredNorm();
  return {z, static_cast<int>(m - 1)};
}

TransformKind parse_transform_kind(const std::string& name) {
  if (name == "lc") return TransformKind::kLeviCivita;
  if (name == "ks") return TransformKind::kKs;
  if (name == "r8r5") return TransformKind::kR8R5;
  if (name == "r16r9") return TransformKind::kR16R9;
  throw std::invalid_argument("unknown transform kind '" + name +
                              "' (expected lc, ks, r8r5 or r16r9)");
}

std::string to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::kLeviCivita:
      return "lc";
    case TransformKind::kKs:
      return "ks";
    case TransformKind::kR8R5:
      return "r8r5";
    case TransformKind::kR16R9:
      return "r16r9";
  }
  return "?";
}

TransformResult transform(TransformKind kind, const VecN& u) {
  switch (kind) {
    case TransformKind::kLeviCivita:
      return levi_civita(u);
    case TransformKind::kKs:
      return ks_transform(u);
    case TransformKind::kR8R5:
      return hurwitz_r8_to_r5(u);
    case TransformKind::kR16R9:
      require_dim(u, 16, "R^16 -> R^9 transformation");
      return hurwitz_recursive(u);
  }
  throw std::invalid_argument("unknown transform kind");
}

namespace {

constexpr int kMaxSearch = 4;

// Cell codes: 0 zero, +-(k+1) for +-x_k.
struct SearchMatrix {
  int n;
  std::array<std::array<int, kMaxSearch>, kMaxSearch> cell{};
};

// Each column must contain every variable exactly once for the diagonal of
// H^t H to be |x|^2.
bool columns_cover(const SearchMatrix& h) {
  for (int j = 0; j < h.n; ++j) {
    unsigned seen = 0;
    for (int k = 0; k < h.n; ++k) {
      const int c = h.cell[k][j];
      if (c == 0) return false;
      const unsigned bit = 1u << (std::abs(c) - 1);
      if (seen & bit) return false;
      seen |= bit;
    }
  }
  return true;
}

bool off_diagonal_vanishes(const SearchMatrix& h) {
  const int n = h.n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::array<std::array<int, kMaxSearch>, kMaxSearch> coef{};
      for (int k = 0; k < n; ++k) {
        int a = h.cell[k][i], b = h.cell[k][j];
        const int sign = (a > 0 ? 1 : -1) * (b > 0 ? 1 : -1);
        int va = std::abs(a) - 1, vb = std::abs(b) - 1;
        if (va > vb) std::swap(va, vb);
        coef[va][vb] += sign;
      }
      for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
          if (coef[a][b] != 0) return false;
        }
      }
    }
  }
  return true;
}

LinearTemplate to_template(const SearchMatrix& h) {
  LinearTemplate t(h.n, h.n);
  for (int i = 0; i < h.n; ++i) {
    for (int j = 0; j < h.n; ++j) {
      const int c = h.cell[i][j];
      if (c != 0) t.at(i, j) = {c > 0 ? 1 : -1, std::abs(c) - 1};
    }
  }
  return t;
}

}  // namespace

std::optional<LinearTemplate> obstruction_witness(int n) {
  if (n < 1 || n > kMaxSearch) {
    throw DimensionError("obstruction search supports 1 <= n <= " +
                         std::to_string(kMaxSearch) + ", got " + std::to_string(n));
  }
  std::vector<std::pair<int, int>> upper;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) upper.emplace_back(i, j);
  }
  const int choices = 2 * n + 1;
  auto code = [n](int idx) { return idx <= n ? idx : n - idx; };  // 0, 1..n, -1..-n

  // digit 0 drives the diagonal, digits 1.. the upper triangle
  std::vector<int> digits(upper.size() + 1, 0);
  SearchMatrix h{n, {}};
  while (true) {
    const int d = code(digits[0]);
    for (int i = 0; i < n; ++i) h.cell[i][i] = d;
    for (std::size_t p = 0; p < upper.size(); ++p) {
      const int c = code(digits[p + 1]);
      h.cell[upper[p].first][upper[p].second] = c;
      h.cell[upper[p].second][upper[p].first] = -c;
    }
    if (columns_cover(h) && off_diagonal_vanishes(h)) return to_template(h);

    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == choices) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }
  return std::nullopt;
}

bool obstruction_search(int n) { return obstruction_witness(n).has_value(); }

}  // namespace hypercross
