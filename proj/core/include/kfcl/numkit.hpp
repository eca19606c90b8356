#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace kfcl {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Default relative tolerance for all rank decisions in the project.
inline constexpr double kRankTolerance = 1e-9;

/// Matrix exponential by scaling-and-squaring with a [6/6] Pade approximant.
/// Inputs are scaled until the infinity norm is at most 1/2; the squaring
/// depth is capped at 30, which covers norms up to ~5e8. Relative accuracy is
/// better than 1e-12 for norms up to 10, and exponentials of skew matrices
/// stay orthogonal to the same level.
Matrix mat_exp(const Matrix& m);

/// Number of singular values above tol * (largest singular value).
/// All vectors must have the same length; an empty list has rank 0.
int rank_tol(const std::vector<Vector>& vectors, double tol = kRankTolerance);

struct LstsqResult {
  Vector x;
  double residual;  // ||A x - y||_2 at the minimizer
};

/// Least squares via a complete orthogonal decomposition. Rank-deficient
/// systems are allowed; the minimum-norm minimizer (pseudo-inverse
/// convention) is returned.
LstsqResult lstsq(const Matrix& a, const Vector& y);

/// Seeded random stream. mt19937_64 is fully specified by the standard and
/// all variates are derived from raw 64-bit draws (no distribution objects),
/// so a fixed seed reproduces the same sequence everywhere.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double unit();
  double uniform(double lo, double hi);
  /// Standard normal (Box-Muller, two draws per variate).
  double normal();

  Vector uniform_vector(int n, double lo, double hi);
  Vector gaussian_vector(int n);
  /// Uniform on the unit sphere of R^n.
  Vector sphere_point(int n);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Deterministic sub-seed derivation (one splitmix64 round of seed ^ salt).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

/// FNV-1a hash; stable across platforms, used to salt per-task streams.
std::uint64_t fnv1a(std::string_view s);

}  // namespace kfcl
