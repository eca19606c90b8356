#include "kfcl/spinlie.hpp"

#include <cmath>
#include <stdexcept>

namespace kfcl {

namespace {

Vector flatten_triple(const InfTriple& t) {
  Vector v(192);
  v.segment(0, 64) = Eigen::Map<const Vector>(t.a.data(), 64);
  v.segment(64, 64) = Eigen::Map<const Vector>(t.b.data(), 64);
  v.segment(128, 64) = Eigen::Map<const Vector>(t.c.data(), 64);
  return v;
}

Vector flatten_block(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix span_matrix(const std::vector<Vector>& cols) {
  Matrix m(cols.front().size(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) {
    m.col(static_cast<Eigen::Index>(k)) = cols[k];
  }
  return m;
}

TrialityTriple imaginary_unit_triple(const Octonion& z) {
  const Matrix lz = left_op(z);
  return {lz * right_op(conj(z)), lz, lz};
}

}  // namespace

int GeneratorSet::size() const {
  return is_block_set() ? static_cast<int>(blocks.size())
                        : static_cast<int>(triples.size());
}

std::vector<Vector> GeneratorSet::flattened() const {
  std::vector<Vector> out;
  if (is_block_set()) {
    for (const Matrix& m : blocks) out.push_back(flatten_block(m));
  } else {
    for (const InfTriple& t : triples) out.push_back(flatten_triple(t));
  }
  return out;
}

GeneratorSet gen_spin7() {
  const PaperBasis& pb = paper_basis();
  GeneratorSet g;
  g.name = "S1";
  for (int i = 1; i <= 7; ++i) {
    for (int j = i + 1; j <= 7; ++j) {
      const Matrix b = left_op(pb.unit(i)) * left_op(pb.unit(j));
      // The first entry is pinned by the y = 1 slice of the tangent triple
      // identity: a(x) = b(x) - x b(1).
      const Matrix a = b - right_op(Octonion::from_vector(b.col(0)));
      g.triples.push_back({a, b, b});
      g.labels.emplace_back(i, j);
    }
  }
  return g;
}

GeneratorSet gen_spin8() {
  const PaperBasis& pb = paper_basis();
  GeneratorSet g = gen_spin7();
  g.name = "S2";
  for (int i = 1; i <= 7; ++i) {
    const Matrix l = left_op(pb.unit(i));
    const Matrix r = right_op(pb.unit(i));
    g.triples.push_back({l, r, l + r});
    g.labels.emplace_back(i, 0);
  }
  return g;
}

GeneratorSet gen_spin9() {
  GeneratorSet s2 = gen_spin8();
  GeneratorSet g;
  g.name = "S3";
  for (std::size_t k = 0; k < s2.triples.size(); ++k) {
    g.blocks.push_back(embed_block_diagonal(s2.triples[k]));
    g.labels.push_back(s2.labels[k]);
  }
  g.blocks.push_back(spin9_J());
  g.labels.emplace_back(0, 0);
  for (int i = 1; i <= 7; ++i) {
    g.blocks.push_back(spin9_Ji(i));
    g.labels.emplace_back(0, i);
  }
  return g;
}

Matrix embed_block_diagonal(const InfTriple& t) {
  Matrix m = Matrix::Zero(16, 16);
  m.block(0, 0, 8, 8) = t.a;
  m.block(8, 8, 8, 8) = t.c;
  return m;
}

InfTriple bracket(const InfTriple& x, const InfTriple& y) {
  return {x.a * y.a - y.a * x.a, x.b * y.b - y.b * x.b,
          x.c * y.c - y.c * x.c};
}

Matrix bracket(const Matrix& x, const Matrix& y) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows()) {
    throw std::invalid_argument("bracket: operands must live in one algebra");
  }
  return x * y - y * x;
}

double closure_check(const GeneratorSet& g) {
  const std::vector<Vector> flat = g.flattened();
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(span_matrix(flat));
  const int n = g.size();
  double worst = 0.0;
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      Vector v;
      if (g.is_block_set()) {
        v = flatten_block(bracket(g.blocks[static_cast<std::size_t>(p)],
                                  g.blocks[static_cast<std::size_t>(q)]));
      } else {
        v = flatten_triple(bracket(g.triples[static_cast<std::size_t>(p)],
                                   g.triples[static_cast<std::size_t>(q)]));
      }
      const double scale = v.norm();
      if (scale == 0.0) continue;
      const Vector coeff = cod.solve(v);
      const double dist = (span_matrix(flat) * coeff - v).norm();
      worst = std::max(worst, dist / scale);
    }
  }
  return worst;
}

std::vector<InfTriple> g2_subalgebra() {
  const GeneratorSet s1 = gen_spin7();
  const int n = s1.size();
  Matrix d(64, n);
  for (int k = 0; k < n; ++k) {
    const InfTriple& t = s1.triples[static_cast<std::size_t>(k)];
    d.col(k) = Eigen::Map<const Vector>(Matrix(t.a - t.b).data(), 64);
  }
  Eigen::BDCSVD<Matrix> svd(d, Eigen::ComputeFullV);
  const Vector& sv = svd.singularValues();
  std::vector<InfTriple> basis;
  for (int k = 0; k < n; ++k) {
    const bool in_null = k >= sv.size() || sv(k) <= kRankTolerance * sv(0);
    if (!in_null) continue;
    const Vector coeff = svd.matrixV().col(k);
    Matrix m = Matrix::Zero(8, 8);
    for (int p = 0; p < n; ++p) {
      m += coeff(p) * s1.triples[static_cast<std::size_t>(p)].b;
    }
    basis.push_back({m, m, m});
  }
  if (basis.size() != 14) {
    throw std::logic_error("g2_subalgebra: computed dimension " +
                           std::to_string(basis.size()) + ", expected 14");
  }
  return basis;
}

double derivation_residual(const Matrix& d) {
  double worst = 0.0;
  for (int a = 0; a < 8; ++a) {
    const Octonion ea = Octonion::unit(a);
    const Octonion da = Octonion::from_vector(d.col(a));
    for (int b = 0; b < 8; ++b) {
      const Octonion eb = Octonion::unit(b);
      const Vector lhs = d * mul(ea, eb).to_vector();
      const Vector rhs =
          (mul(da, eb) + mul(ea, Octonion::from_vector(d.col(b)))).to_vector();
      worst = std::max(worst, (lhs - rhs).norm());
    }
  }
  return worst;
}

double spin7_first_entry_pattern_residual() {
  const GeneratorSet s1 = gen_spin7();
  const Matrix p = paper_basis().change_of_basis();
  double worst = 0.0;
  for (std::size_t k = 0; k < s1.triples.size(); ++k) {
    const auto [i, j] = s1.labels[k];
    Matrix expected = Matrix::Zero(8, 8);
    expected(j, i) = 2.0;
    expected(i, j) = -2.0;
    const Matrix got = p.transpose() * s1.triples[k].a * p;
    worst = std::max(worst, (got - expected).cwiseAbs().maxCoeff());
  }
  return worst;
}

CurveCheck curve_generator_crosscheck(double h) {
  const PaperBasis& pb = paper_basis();
  const GeneratorSet s1 = gen_spin7();
  const std::vector<Vector> flat = s1.flattened();
  const Matrix span = span_matrix(flat);
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(span);

  CurveCheck out;
  for (int i = 1; i <= 7; ++i) {
    for (int j = i + 1; j <= 7; ++j) {
      const Octonion ei = pb.unit(i);
      const Octonion ej = pb.unit(j);
      const TrialityTriple base = imaginary_unit_triple(ei);
      auto curve = [&](double t) {
        const Octonion z = std::cos(t) * ei + std::sin(t) * ej;
        return mul(imaginary_unit_triple(z), base);
      };
      const TrialityTriple fwd = curve(h);
      const TrialityTriple bwd = curve(-h);
      const InfTriple raw{(fwd.A - bwd.A) / (2.0 * h),
                          (fwd.B - bwd.B) / (2.0 * h),
                          (fwd.C - bwd.C) / (2.0 * h)};

      const Matrix oracle = left_op(ej) * left_op(ei);
      out.max_oracle_residual = std::max(
          out.max_oracle_residual, (raw.b - oracle).cwiseAbs().maxCoeff());

      // Transport to the identity through the base value (I, -I, -I).
      const InfTriple tangent{raw.a, -raw.b, -raw.c};
      const Vector v = flatten_triple(tangent);
      const Vector coeff = cod.solve(v);
      const double dist = (span * coeff - v).norm();
      out.span_distances.push_back(dist);
      out.max_span_distance = std::max(out.max_span_distance, dist);
    }
  }
  return out;
}

Matrix spin9_J() {
  Matrix m = Matrix::Zero(16, 16);
  m.block(0, 8, 8, 8) = Matrix::Identity(8, 8);
  m.block(8, 0, 8, 8) = -Matrix::Identity(8, 8);
  return m;
}

Matrix spin9_Ji(int i) {
  if (i < 1 || i > 7) throw std::invalid_argument("spin9_Ji: index");
  const Matrix r = right_op(paper_basis().unit(i));
  Matrix m = Matrix::Zero(16, 16);
  m.block(0, 8, 8, 8) = r;
  m.block(8, 0, 8, 8) = r;
  return m;
}

Matrix spin9_rotation(double t) {
  // J squares to -1, so the exponential closes as cos + sin.
  return std::cos(t) * Matrix::Identity(16, 16) + std::sin(t) * spin9_J();
}

Matrix spin9_partial_rotation(double t, int i) {
  return std::cos(t) * Matrix::Identity(16, 16) + std::sin(t) * spin9_Ji(i);
}

}  // namespace kfcl
