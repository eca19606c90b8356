#include "kfcl/finsler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kfcl {

namespace {

void require_spd(const Matrix& q, const char* what) {
  if (q.rows() != q.cols()) {
    throw std::invalid_argument(std::string(what) + ": matrix must be square");
  }
  if ((q - q.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument(std::string(what) + ": matrix must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(q, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() <= 0.0) {
    throw std::invalid_argument(std::string(what) +
                                ": matrix must be positive definite");
  }
}

}  // namespace

MinkowskiNorm::MinkowskiNorm(Matrix q, Vector b, bool randers)
    : q_(std::move(q)), b_(std::move(b)), randers_(randers) {}

MinkowskiNorm MinkowskiNorm::riemannian(const Matrix& q) {
  require_spd(q, "MinkowskiNorm::riemannian");
  return MinkowskiNorm(q, Vector::Zero(q.rows()), false);
}

MinkowskiNorm MinkowskiNorm::randers(const Matrix& a, const Vector& b) {
  require_spd(a, "MinkowskiNorm::randers");
  if (b.size() != a.rows()) {
    throw std::invalid_argument("MinkowskiNorm::randers: drift dimension");
  }
  const double drift_norm = std::sqrt(b.dot(a.ldlt().solve(b)));
  if (!(drift_norm < 1.0)) {
    throw std::invalid_argument(
        "MinkowskiNorm::randers: ||b||_{A^{-1}} must be < 1, got " +
        std::to_string(drift_norm));
  }
  return MinkowskiNorm(a, b, true);
}

double MinkowskiNorm::eval(const Vector& v) const {
  const double alpha = std::sqrt(v.dot(q_ * v));
  return randers_ ? alpha + b_.dot(v) : alpha;
}

KfclCheck kfcl_check(const std::vector<Vector>& points,
                     const MinkowskiNorm& f) {
  if (points.empty()) {
    throw std::invalid_argument("kfcl_check: empty sample");
  }
  KfclCheck r;
  r.sample_size = static_cast<int>(points.size());
  double lo = 0.0, hi = 0.0, sum = 0.0;
  bool first = true;
  for (const Vector& p : points) {
    const double value = f.eval(p);
    sum += value;
    if (first) {
      lo = hi = value;
      first = false;
    } else {
      lo = std::min(lo, value);
      hi = std::max(hi, value);
    }
  }
  r.spread = hi - lo;
  r.mean = sum / r.sample_size;
  r.is_constant = r.spread <= 1e-8 * r.mean;
  return r;
}

KfclCheck kfcl_check(const OrbitSample& sample, const MinkowskiNorm& f) {
  return kfcl_check(sample.points, f);
}

std::string to_string(QuadricClass c) {
  switch (c) {
    case QuadricClass::Riemannian: return "riemannian";
    case QuadricClass::Randers: return "randers";
    case QuadricClass::Neither: return "neither";
  }
  throw std::invalid_argument("to_string: unknown quadric class");
}

QuadricFit quadric_fit(const std::vector<Vector>& points) {
  if (points.empty()) throw std::invalid_argument("quadric_fit: no points");
  const int d = static_cast<int>(points.front().size());
  const int unknowns = d * (d + 1) / 2 + d;
  if (static_cast<int>(points.size()) < unknowns) {
    throw std::invalid_argument("quadric_fit: need at least d(d+3)/2 points");
  }

  Matrix sys(static_cast<Eigen::Index>(points.size()), unknowns);
  for (std::size_t r = 0; r < points.size(); ++r) {
    const Vector& v = points[r];
    if (v.size() != d) {
      throw std::invalid_argument("quadric_fit: mixed dimensions");
    }
    int col = 0;
    for (int i = 0; i < d; ++i) {
      for (int j = i; j < d; ++j) {
        sys(static_cast<Eigen::Index>(r), col++) =
            (i == j) ? v(i) * v(j) : 2.0 * v(i) * v(j);
      }
    }
    for (int i = 0; i < d; ++i) {
      sys(static_cast<Eigen::Index>(r), col++) = v(i);
    }
  }
  const LstsqResult sol = lstsq(sys, Vector::Ones(points.size()));

  QuadricFit fit;
  fit.raw_Q = Matrix(d, d);
  fit.raw_l = Vector(d);
  {
    int col = 0;
    for (int i = 0; i < d; ++i) {
      for (int j = i; j < d; ++j) {
        fit.raw_Q(i, j) = sol.x(col);
        fit.raw_Q(j, i) = sol.x(col);
        ++col;
      }
    }
    for (int i = 0; i < d; ++i) fit.raw_l(i) = sol.x(col++);
  }

  Eigen::SelfAdjointEigenSolver<Matrix> eig(fit.raw_Q, Eigen::EigenvaluesOnly);
  const double eig_min = eig.eigenvalues().minCoeff();
  const double eig_max = eig.eigenvalues().cwiseAbs().maxCoeff();
  const bool definite = eig_min > 1e-10 * std::max(1.0, eig_max);

  if (!definite) {
    // Degenerate or indefinite; report the raw fit as diagnostics.
    fit.Q = fit.raw_Q;
    fit.center = Vector::Zero(d);
    fit.residual = (sys * sol.x - Vector::Ones(points.size()))
                       .cwiseAbs()
                       .maxCoeff();
    fit.classification = QuadricClass::Neither;
    return fit;
  }

  fit.center = -0.5 * fit.raw_Q.ldlt().solve(fit.raw_l);
  const double scale = 1.0 + fit.center.dot(fit.raw_Q * fit.center);
  fit.Q = fit.raw_Q / scale;

  fit.residual = 0.0;
  for (const Vector& v : points) {
    const Vector w = v - fit.center;
    fit.residual = std::max(fit.residual, std::abs(w.dot(fit.Q * w) - 1.0));
  }

  // Position of the origin relative to the fitted surface.
  const double origin_level = fit.center.dot(fit.Q * fit.center);
  fit.borderline = std::abs(origin_level - 1.0) <= 1e-6;
  if (fit.center.norm() <= 1e-8) {
    fit.classification = QuadricClass::Riemannian;
  } else if (!fit.borderline && origin_level < 1.0) {
    fit.classification = QuadricClass::Randers;
  } else {
    fit.classification = QuadricClass::Neither;
  }
  return fit;
}

MinkowskiNorm randers_from_quadric(const QuadricFit& fit) {
  if (fit.classification == QuadricClass::Neither) {
    throw std::domain_error(
        "randers_from_quadric: fit is not an ellipsoid with the origin inside");
  }
  if (fit.classification == QuadricClass::Riemannian) {
    return MinkowskiNorm::riemannian(fit.Q);
  }
  // The level set of sqrt(v' A v) + b . v = 1 is v' (A - b b') v + 2 b . v = 1,
  // so match against the raw fit.
  const Vector b = 0.5 * fit.raw_l;
  const Matrix a = fit.raw_Q + b * b.transpose();
  return MinkowskiNorm::randers(a, b);
}

double round_cw_check(const SphereModel& model, const Matrix& g, int n,
                      std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("round_cw_check: need n >= 1");
  const int d = model.ambient_dim;
  if (g.rows() != d || g.cols() != d) {
    throw std::invalid_argument("round_cw_check: isometry dimension");
  }
  if ((g.transpose() * g - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() >
      1e-10) {
    throw std::invalid_argument("round_cw_check: g must be orthogonal");
  }
  RngStream rng(seed);
  double lo = 0.0, hi = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vector p = rng.sphere_point(d);
    const double c = std::clamp(p.dot(g * p), -1.0, 1.0);
    const double dist = std::acos(c);
    if (i == 0) {
      lo = hi = dist;
    } else {
      lo = std::min(lo, dist);
      hi = std::max(hi, dist);
    }
  }
  return hi - lo;
}

SpanCoordinates principal_span(const std::vector<Vector>& points, double tol) {
  if (points.empty()) throw std::invalid_argument("principal_span: no points");
  Matrix m(static_cast<Eigen::Index>(points.size()), points.front().size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    m.row(static_cast<Eigen::Index>(i)) = points[i].transpose();
  }
  Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinV);
  const Vector& sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(0) > 0.0 && sv(i) > tol * sv(0)) ++rank;
  }
  SpanCoordinates out;
  out.basis = svd.matrixV().leftCols(rank);
  for (const Vector& p : points) {
    out.coords.push_back(out.basis.transpose() * p);
  }
  return out;
}

}  // namespace kfcl
