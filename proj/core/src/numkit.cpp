#include "kfcl/numkit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kfcl {

Matrix mat_exp(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("mat_exp: matrix must be square");
  }
  if (!m.allFinite()) {
    throw std::invalid_argument("mat_exp: entries must be finite");
  }
  const Eigen::Index n = m.rows();
  const Matrix id = Matrix::Identity(n, n);

  // Scale until ||A||_inf <= 1/2; the [6/6] truncation error there is ~2e-17.
  const double nrm = n == 0 ? 0.0 : m.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (nrm > 0.5) {
    squarings = std::min(30, static_cast<int>(std::ceil(std::log2(nrm / 0.5))));
  }
  const Matrix a = m / std::ldexp(1.0, squarings);

  static constexpr double c[7] = {1.0,       1.0 / 2.0,    5.0 / 44.0,
                                  1.0 / 66.0, 1.0 / 792.0, 1.0 / 15840.0,
                                  1.0 / 665280.0};
  const Matrix a2 = a * a;
  const Matrix a4 = a2 * a2;
  const Matrix a6 = a2 * a4;
  const Matrix even = c[0] * id + c[2] * a2 + c[4] * a4 + c[6] * a6;
  const Matrix odd = a * (c[1] * id + c[3] * a2 + c[5] * a4);
  Matrix f = (even - odd).partialPivLu().solve(even + odd);
  for (int k = 0; k < squarings; ++k) f = f * f;
  return f;
}

int rank_tol(const std::vector<Vector>& vectors, double tol) {
  if (tol <= 0.0) {
    throw std::invalid_argument("rank_tol: tolerance must be positive");
  }
  if (vectors.empty()) return 0;
  const Eigen::Index len = vectors.front().size();
  Matrix a(static_cast<Eigen::Index>(vectors.size()), len);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != len) {
      throw std::invalid_argument("rank_tol: vectors must share one length");
    }
    a.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose();
  }
  Eigen::BDCSVD<Matrix> svd(a);
  const Vector& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol * sv(0)) ++rank;
  }
  return rank;
}

LstsqResult lstsq(const Matrix& a, const Vector& y) {
  if (a.rows() < 1) {
    throw std::invalid_argument("lstsq: need at least one row");
  }
  if (a.rows() != y.size()) {
    throw std::invalid_argument("lstsq: dimension mismatch");
  }
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(a);
  LstsqResult r;
  r.x = cod.solve(y);
  r.residual = (a * r.x - y).norm();
  return r;
}

double RngStream::unit() {
  // 53 significant bits, shifted into the open interval.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
  return lo + (hi - lo) * unit();
}

double RngStream::normal() {
  const double u1 = unit();
  const double u2 = unit();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

Vector RngStream::uniform_vector(int n, double lo, double hi) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = uniform(lo, hi);
  return v;
}

Vector RngStream::gaussian_vector(int n) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = normal();
  return v;
}

Vector RngStream::sphere_point(int n) {
  for (;;) {
    Vector v = gaussian_vector(n);
    const double len = v.norm();
    if (len > 1e-12) return v / len;
  }
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed ^ (salt + 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace kfcl
