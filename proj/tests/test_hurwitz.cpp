#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "hypercross/algebra.hpp"
#include "hypercross/errors.hpp"
#include "hypercross/hurwitz.hpp"
#include "oracles.hpp"

using namespace hypercross;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

bool same_cells(const LinearTemplate& a, const LinearTemplate& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (!(a.at(i, j) == b.at(i, j))) return false;
    }
  }
  return true;
}

VectorXd vec(std::initializer_list<double> xs) {
  VectorXd v(static_cast<long>(xs.size()));
  long i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

VectorXd pure(VectorXd u) {
  u(scalar_slot(static_cast<int>(u.size()))) = 0.0;
  return u;
}

}  // namespace

TEST(HurwitzTemplate, TabulatedFormsMatchDoubling) {
  for (int m : {4, 8, 16}) {
    EXPECT_TRUE(same_cells(hurwitz_template(m), doubling_template(m))) << "m = " << m;
  }
  // at m = 2 the recurrence puts the second coordinate on the diagonal
  const VectorXd u = vec({0.25, -3.0});
  EXPECT_EQ(doubling_template(2).evaluate(u), hurwitz_matrix(vec({-3.0, 0.25})).entries);
}

TEST(HurwitzTemplate, RepairedCell) {
  EXPECT_EQ(hurwitz_template(8).at(4, 2), SignedVar::minus(2));
  EXPECT_EQ(hurwitz_repair_notes(), (std::vector<std::string>{"entry (5,3) = -u3"}));
}

TEST(HurwitzTemplate, ScalarSlot) {
  EXPECT_EQ(scalar_slot(2), 0);
  EXPECT_EQ(scalar_slot(4), 2);
  EXPECT_EQ(scalar_slot(8), 4);
  EXPECT_EQ(scalar_slot(16), 8);
  EXPECT_THROW(scalar_slot(3), DimensionError);
}

TEST(HurwitzTemplate, OrthogonalSymbolicallyUpToEight) {
  for (int m : {2, 4, 8}) {
    const LinearTemplate& t = hurwitz_template(m);
    EXPECT_EQ(gram(t), scaled_identity(m, m)) << "m = " << m;
    EXPECT_TRUE(antisymmetric_up_to_scalar(t, SignedVar::plus(scalar_slot(m))));
  }
}

TEST(HurwitzTemplate, SixteenIsNotOrthogonal) {
  const LinearTemplate& t = hurwitz_template(16);
  EXPECT_TRUE(antisymmetric_up_to_scalar(t, SignedVar::plus(8)));
  EXPECT_NE(gram(t), scaled_identity(16, 16));
  oracle::Rng rng(21);
  const VectorXd u = rng.vector(16);
  const MatrixXd h = hurwitz_matrix(u).entries;
  EXPECT_GT(oracle::max_abs(h.transpose() * h - u.squaredNorm() * MatrixXd::Identity(16, 16)),
            1e-3 * u.squaredNorm());
}

TEST(HurwitzMatrix, NumericIdentitiesOnPureU) {
  oracle::Rng rng(22);
  for (int m : {2, 4, 8}) {
    for (int s = 0; s < 200; ++s) {
      const VectorXd u = pure(rng.vector(m));
      const MatrixXd h = hurwitz_matrix(u).entries;
      const MatrixXd id = MatrixXd::Identity(m, m);
      EXPECT_LT(oracle::max_abs(h.transpose() * h - u.squaredNorm() * id), 1e-14);
      EXPECT_LT(oracle::max_abs(h * h + u.squaredNorm() * id), 1e-14);
      EXPECT_EQ(h + h.transpose(), MatrixXd::Zero(m, m));
    }
  }
}

TEST(HurwitzMatrix, Examples) {
  EXPECT_EQ(hurwitz_matrix(VectorXd::Zero(8)).entries, MatrixXd::Zero(8, 8));
  MatrixXd h2(2, 2);
  h2 << 3, 4, -4, 3;
  EXPECT_EQ(hurwitz_matrix(vec({3, 4})).entries, h2);
  EXPECT_THROW(hurwitz_matrix(VectorXd::Zero(6)), DimensionError);
}

TEST(Bordered, ThreeDimIsTheQuaternionMatrix) {
  const double x = 0.5, y = -1.5, z = 2.0;
  MatrixXd expected(4, 4);
  expected << 0, z, -y, x, -z, 0, x, y, y, -x, 0, z, -x, -y, -z, 0;
  EXPECT_EQ(bordered_from_cross(vec({x, y, z})).entries, expected);
  EXPECT_EQ(bordered_from_cross(VectorXd::Zero(3)).entries, MatrixXd::Zero(4, 4));

  // right multiplication q -> q h, h = x e1 + y e2 + z e3, basis (e1, e2, e3, e0)
  const std::array<int, 4> order{1, 2, 3, 0};
  const Hypercomplex h(2, {0.0, x, y, z});
  MatrixXd right(4, 4);
  for (int c = 0; c < 4; ++c) {
    const Hypercomplex p = cd_multiply(Hypercomplex::basis(2, order[c]), h);
    for (int r = 0; r < 4; ++r) right(r, c) = p[order[r]];
  }
  EXPECT_EQ(right, expected);
}

TEST(Bordered, FrozenReconciliation) {
  oracle::Rng rng(23);
  for (int n : {3, 7}) {
    const BorderedReconciliation& rec = bordered_reconciliation(n);
    const VectorXd row = Eigen::Map<const Eigen::VectorXi>(rec.row_sign.data(), n + 1).cast<double>();
    const VectorXd col = Eigen::Map<const Eigen::VectorXi>(rec.col_sign.data(), n + 1).cast<double>();
    for (int s = 0; s < 50; ++s) {
      const VectorXd r = rng.vector(n);
      const VectorXd u = rec.embed(r);
      EXPECT_EQ(u(scalar_slot(n + 1)), 0.0);
      EXPECT_DOUBLE_EQ(u.squaredNorm(), r.squaredNorm());
      const MatrixXd rebuilt = row.asDiagonal() * hurwitz_matrix(u).entries * col.asDiagonal();
      EXPECT_EQ(bordered_from_cross(r).entries, rebuilt);
    }
  }
}

// Search over u_l = r_{pi(l)} (all signs +, scalar slot zero); row and column
// signs follow from the ratio of matching cells with row_sign[0] = +1.
TEST(Bordered, ReconciliationIsFirstSearchHit) {
  for (int n : {3, 7}) {
    const int m = n + 1;
    const int slot = scalar_slot(m);
    const LinearTemplate& h = hurwitz_template(m);
    const LinearTemplate& b = bordered_template(n);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<BorderedReconciliation> first;
    do {
      std::vector<int> r_of_u(m, -1);
      for (int l = 0, k = 0; l < m; ++l) {
        if (l != slot) r_of_u[l] = perm[k++];
      }
      // sign ratio cell by cell, or 0 on mismatch
      auto ratio = [&](int i, int j) {
        const SignedVar hc = h.at(i, j), bc = b.at(i, j);
        const bool h_zero = hc.is_zero() || r_of_u[hc.var] < 0;
        if (h_zero || bc.is_zero()) return h_zero && bc.is_zero() ? 2 : 0;
        return r_of_u[hc.var] == bc.var ? hc.sign * bc.sign : 0;
      };
      bool ok = true;
      for (int i = 0; i < m && ok; ++i) {
        for (int j = 0; j < m && ok; ++j) ok = ratio(i, j) != 0;
      }
      // propagate row_i col_j = ratio from row_sign[0] = +1
      std::vector<int> row(m, 0), col(m, 0);
      row[0] = 1;
      for (int pass = 0; pass < m && ok; ++pass) {
        for (int i = 0; i < m; ++i) {
          for (int j = 0; j < m; ++j) {
            const int q = ratio(i, j);
            if (q == 2) continue;
            if (row[i] != 0 && col[j] == 0) col[j] = q * row[i];
            if (col[j] != 0 && row[i] == 0) row[i] = q * col[j];
          }
        }
      }
      for (int i = 0; i < m && ok; ++i) ok = row[i] != 0 && col[i] != 0;
      for (int i = 0; i < m && ok; ++i) {
        for (int j = 0; j < m && ok; ++j) {
          const int q = ratio(i, j);
          ok = q == 2 || q == row[i] * col[j];
        }
      }
      if (ok && !first) {
        BorderedReconciliation rec;
        for (int l = 0; l < m; ++l) {
          rec.u_from_r.push_back(r_of_u[l] < 0 ? SignedVar::zero() : SignedVar::plus(r_of_u[l]));
        }
        rec.row_sign = row;
        rec.col_sign = col;
        first = rec;
      }
    } while (!first && std::next_permutation(perm.begin(), perm.end()));
    ASSERT_TRUE(first.has_value()) << "n = " << n;
    const BorderedReconciliation& frozen = bordered_reconciliation(n);
    EXPECT_EQ(first->u_from_r, frozen.u_from_r);
    EXPECT_EQ(first->row_sign, frozen.row_sign);
    EXPECT_EQ(first->col_sign, frozen.col_sign);
  }
}

TEST(Transform, LeviCivitaExamples) {
  EXPECT_EQ(levi_civita(vec({1, 0})).z, vec({1, 0}));
  EXPECT_EQ(levi_civita(vec({0, 0})).z, vec({0, 0}));
  EXPECT_EQ(levi_civita(vec({1, 1})).z, vec({0, 2}));
  EXPECT_EQ(levi_civita(vec({1, 1})).z.norm(), 2.0);
}

TEST(Transform, KsExamples) {
  EXPECT_EQ(ks_transform(vec({1, 0, 0, 0})).z, vec({0, 0, 1}));
  EXPECT_EQ(ks_transform(VectorXd::Zero(4)).z, VectorXd::Zero(3));
}

TEST(Transform, R8R5Examples) {
  VectorXd e1 = VectorXd::Unit(8, 0);
  EXPECT_EQ(hurwitz_r8_to_r5(e1).z, VectorXd::Unit(5, 4));
  EXPECT_EQ(hurwitz_r8_to_r5(VectorXd::Zero(8)).z, VectorXd::Zero(5));
  EXPECT_EQ(hurwitz_recursive(VectorXd::Zero(16)).z, VectorXd::Zero(9));
}

TEST(Transform, SumsOfSquares) {
  oracle::Rng rng(24);
  for (TransformKind kind : {TransformKind::kLeviCivita, TransformKind::kKs, TransformKind::kR8R5,
                             TransformKind::kR16R9}) {
    const long n = kind == TransformKind::kLeviCivita ? 2
                   : kind == TransformKind::kKs       ? 4
                   : kind == TransformKind::kR8R5     ? 8
                                                      : 16;
    for (int s = 0; s < 300; ++s) {
      const VectorXd u = rng.vector(n);
      const TransformResult r = transform(kind, u);
      EXPECT_EQ(r.z.size(), n / 2 + 1);
      EXPECT_NEAR(r.z.norm(), u.squaredNorm(), 1e-13 * u.squaredNorm());
    }
  }
}

TEST(Transform, RecursiveAgreesWithSystemMatrices) {
  oracle::Rng rng(25);
  for (int s = 0; s < 200; ++s) {
    const VectorXd u2 = rng.vector(2), u4 = rng.vector(4), u8 = rng.vector(8);
    const VectorXd lc = levi_civita(u2).z;
    const VectorXd rec2 = hurwitz_recursive(u2).z;
    EXPECT_NEAR(rec2(0), lc(1), 1e-15);
    EXPECT_NEAR(rec2(1), lc(0), 1e-15);
    EXPECT_LT((hurwitz_recursive(u4).z - ks_transform(u4).z).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LT((hurwitz_recursive(u8).z - hurwitz_r8_to_r5(u8).z).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(Transform, ZerosAreStructural) {
  EXPECT_EQ(levi_civita(vec({1, 2})).zeros, 0);
  EXPECT_EQ(ks_transform(VectorXd::Ones(4)).zeros, 1);
  EXPECT_EQ(hurwitz_r8_to_r5(VectorXd::Ones(8)).zeros, 3);
  EXPECT_EQ(hurwitz_recursive(VectorXd::Ones(16)).zeros, 7);
  for (int m : {4, 8, 16}) {
    std::vector<int> vars(m);
    std::iota(vars.begin(), vars.end(), 0);
    const auto rows = apply_to_generator(hurwitz_template(m), vars);
    int trailing = 0;
    for (int i = m - 1; i >= 0 && rows[i] == QuadPoly(m); --i) ++trailing;
    EXPECT_EQ(trailing, m / 2 - 1) << "m = " << m;
  }
}

TEST(Transform, KindNames) {
  for (const char* name : {"lc", "ks", "r8r5", "r16r9"}) {
    EXPECT_EQ(to_string(parse_transform_kind(name)), name);
  }
  EXPECT_THROW(parse_transform_kind("r32r17"), std::invalid_argument);
  EXPECT_THROW(ks_transform(VectorXd::Zero(3)), DimensionError);
  EXPECT_THROW(transform(TransformKind::kR16R9, VectorXd::Zero(8)), DimensionError);
}

TEST(Obstruction, SmallDimensions) {
  EXPECT_TRUE(obstruction_search(1));
  EXPECT_TRUE(obstruction_search(2));
  EXPECT_FALSE(obstruction_search(3));
  EXPECT_TRUE(obstruction_search(4));
  EXPECT_THROW(obstruction_search(0), DimensionError);
  EXPECT_THROW(obstruction_search(5), DimensionError);
}

TEST(Obstruction, WitnessesAreOrthogonal) {
  for (int n : {1, 2, 4}) {
    const auto w = obstruction_witness(n);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(gram(*w), scaled_identity(n, n));
    EXPECT_TRUE(antisymmetric_up_to_scalar(*w, w->at(0, 0)));
  }
}
