#include "kfcl/triality.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace kfcl {

namespace {

// Shared per-process tables: left/right multiplication by each basis unit
// and the products e_a e_b as vectors.
struct UnitTables {
  std::array<Matrix, 8> left;
  std::array<Matrix, 8> right;
  Vector prod[8][8];
};

const UnitTables& unit_tables() {
  static const UnitTables t = [] {
    UnitTables u;
    for (int a = 0; a < 8; ++a) {
      u.left[static_cast<std::size_t>(a)] = left_op(Octonion::unit(a));
      u.right[static_cast<std::size_t>(a)] = right_op(Octonion::unit(a));
    }
    for (int a = 0; a < 8; ++a) {
      for (int b = 0; b < 8; ++b) {
        u.prod[a][b] = mul(Octonion::unit(a), Octonion::unit(b)).to_vector();
      }
    }
    return u;
  }();
  return t;
}

// Basis of 8x8 skew matrices, E_ij - E_ji for i < j, in row-lexicographic
// order; 28 elements.
const std::vector<Matrix>& skew_basis8() {
  static const std::vector<Matrix> basis = [] {
    std::vector<Matrix> v;
    for (int i = 0; i < 8; ++i) {
      for (int j = i + 1; j < 8; ++j) {
        Matrix m = Matrix::Zero(8, 8);
        m(i, j) = 1.0;
        m(j, i) = -1.0;
        v.push_back(m);
      }
    }
    return v;
  }();
  return basis;
}

void require_8x8(const Matrix& m, const char* what) {
  if (m.rows() != 8 || m.cols() != 8) {
    throw std::invalid_argument(std::string(what) + ": need an 8x8 operator");
  }
}

int pick_extreme_entry(const Matrix& m) {
  int best = 0;
  double mag = -1.0;
  for (int idx = 0; idx < m.size(); ++idx) {
    const double v = std::abs(m(idx / 8, idx % 8));
    if (v > mag) {
      mag = v;
      best = idx;
    }
  }
  return best;
}

}  // namespace

TrialityTriple mul(const TrialityTriple& s, const TrialityTriple& t) {
  return {s.A * t.A, s.B * t.B, s.C * t.C};
}

TrialityTriple inverse(const TrialityTriple& t) {
  return {t.A.transpose(), t.B.transpose(), t.C.transpose()};
}

double verify_triple(const Matrix& A, const Matrix& B, const Matrix& C) {
  require_8x8(A, "verify_triple");
  require_8x8(B, "verify_triple");
  require_8x8(C, "verify_triple");
  double worst = 0.0;
  for (int a = 0; a < 8; ++a) {
    const Octonion ax = Octonion::from_vector(A.col(a));
    for (int b = 0; b < 8; ++b) {
      const Octonion by = Octonion::from_vector(B.col(b));
      const Vector lhs = mul(ax, by).to_vector();
      const Vector rhs = C * unit_tables().prod[a][b];
      worst = std::max(worst, (lhs - rhs).norm());
    }
  }
  return worst;
}

double verify_triple(const TrialityTriple& t) {
  return verify_triple(t.A, t.B, t.C);
}

double inf_residual(const InfTriple& t) {
  require_8x8(t.a, "inf_residual");
  require_8x8(t.b, "inf_residual");
  require_8x8(t.c, "inf_residual");
  const UnitTables& u = unit_tables();
  double worst = 0.0;
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const Vector lhs = u.right[static_cast<std::size_t>(b)] * t.a.col(a) +
                         u.left[static_cast<std::size_t>(a)] * t.b.col(b);
      worst = std::max(worst, (lhs - t.c * u.prod[a][b]).norm());
    }
  }
  return worst;
}

InfLiftResult inf_lift(const Matrix& a) {
  require_8x8(a, "inf_lift");
  if ((a + a.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
    throw std::invalid_argument("inf_lift: input must be skew-symmetric");
  }
  const UnitTables& u = unit_tables();
  const std::vector<Matrix>& skew = skew_basis8();
  const int nskew = static_cast<int>(skew.size());

  // Unknowns: 28 skew coordinates for b, 28 for c. Equations: for each basis
  // pair (x, y) = (e_p, e_q) the 8 components of
  //   e_p * b(e_q) - c(e_p e_q) = -(a e_p) * e_q.
  Matrix sys = Matrix::Zero(512, 2 * nskew);
  Vector rhs(512);
  int row = 0;
  for (int p = 0; p < 8; ++p) {
    for (int q = 0; q < 8; ++q) {
      for (int k = 0; k < nskew; ++k) {
        sys.block(row, k, 8, 1) =
            u.left[static_cast<std::size_t>(p)] *
            skew[static_cast<std::size_t>(k)].col(q);
        sys.block(row, nskew + k, 8, 1) =
            -(skew[static_cast<std::size_t>(k)] * u.prod[p][q]);
      }
      rhs.segment(row, 8) =
          -(u.right[static_cast<std::size_t>(q)] * a.col(p));
      row += 8;
    }
  }

  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(sys);
  cod.setThreshold(kRankTolerance);
  const int nullity = 2 * nskew - static_cast<int>(cod.rank());
  const Vector sol = cod.solve(rhs);

  InfLiftResult out;
  out.nullity = nullity;
  Matrix b = Matrix::Zero(8, 8);
  Matrix c = Matrix::Zero(8, 8);
  for (int k = 0; k < nskew; ++k) {
    b += sol(k) * skew[static_cast<std::size_t>(k)];
    c += sol(nskew + k) * skew[static_cast<std::size_t>(k)];
  }
  out.triple = {a, b, c};
  out.residual = (sys * sol - rhs).norm();
  if (nullity != 0) {
    throw std::runtime_error("inf_lift: inconsistent system (nullity " +
                             std::to_string(nullity) + ")");
  }
  return out;
}

std::pair<TrialityTriple, TrialityTriple> companions(const Matrix& A) {
  require_8x8(A, "companions");
  if ((A.transpose() * A - Matrix::Identity(8, 8)).cwiseAbs().maxCoeff() >
      1e-10) {
    throw std::invalid_argument("companions: A must be orthogonal");
  }
  const UnitTables& u = unit_tables();
  const Matrix la1 = left_op(Octonion::from_vector(A.col(0)));

  // Homogeneous system in the 64 entries of B (column-major unknowns):
  //   (A e_p) * (B e_q) - L_{A(1)} B (e_p e_q) = 0.
  Matrix sys = Matrix::Zero(512, 64);
  int row = 0;
  for (int p = 0; p < 8; ++p) {
    const Matrix lap = left_op(Octonion::from_vector(A.col(p)));
    for (int q = 0; q < 8; ++q) {
      const Vector& w = u.prod[p][q];
      for (int col = 0; col < 8; ++col) {
        // Contribution of B's column `col`.
        Matrix coeff = Matrix::Zero(8, 8);
        if (col == q) coeff += lap;
        coeff -= w(col) * la1;
        sys.block(row, 8 * col, 8, 8) = coeff;
      }
      row += 8;
    }
  }

  Eigen::BDCSVD<Matrix> svd(sys, Eigen::ComputeThinV);
  const Vector& sv = svd.singularValues();
  int null_dim = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) <= 1e-8 * sv(0)) ++null_dim;
  }
  if (null_dim != 1) {
    throw std::runtime_error("companions: solution space has dimension " +
                             std::to_string(null_dim) + ", expected 1");
  }

  Matrix b(8, 8);
  const Vector vec = svd.matrixV().col(63);
  for (int col = 0; col < 8; ++col) b.col(col) = vec.segment(8 * col, 8);

  // An orthogonal 8x8 matrix has Frobenius norm sqrt(8).
  b *= std::sqrt(8.0) / b.norm();
  const int idx = pick_extreme_entry(b);
  if (b(idx / 8, idx % 8) < 0.0) b = -b;
  if ((b.transpose() * b - Matrix::Identity(8, 8)).cwiseAbs().maxCoeff() >
      1e-8) {
    throw std::runtime_error("companions: solved B is not orthogonal");
  }
  const Matrix c = la1 * b;
  return {TrialityTriple{A, b, c}, TrialityTriple{A, -b, -c}};
}

TrialityTriple exp_triple(double t, const InfTriple& T) {
  return {mat_exp(t * T.a), mat_exp(t * T.b), mat_exp(t * T.c)};
}

}  // namespace kfcl
