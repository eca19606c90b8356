#pragma once

#include "kfcl/spinlie.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace kfcl {

enum class SphereKind { SO, U, SU, Sp, SpU1, SpSp1, G2, Spin7, Spin9 };

std::string to_string(SphereKind k);
SphereKind sphere_kind_from_string(const std::string& s);

/// A transitive sphere model: the acting Lie algebra realized as real skew
/// matrices on the ambient space, plus the base point whose tangent space
/// hosts the projection pr(X) = X x0.
struct SphereModel {
  SphereKind kind;
  int ambient_dim = 0;
  std::vector<Matrix> lie_basis;
  Vector base_point;

  int sphere_dim() const { return ambient_dim - 1; }
  int algebra_dim() const { return static_cast<int>(lie_basis.size()); }
  /// Orthonormal basis of the tangent space at the base point, one column per
  /// direction. Base points are coordinate vectors, so these are the
  /// remaining coordinate directions in order.
  Matrix tangent_basis() const;
  Matrix lie_combination(const Vector& coeffs) const;
};

/// Size parameter m >= 1: S^m for SO, S^{2m+1} for U and SU, S^{4m+3} for
/// Sp, SpU1 and SpSp1. G2, Spin7 and Spin9 are fixed models of S^6, S^7 and
/// S^15 and take no parameter (pass 0). Complex entries are realized as 2x2
/// real blocks, quaternionic entries as 4x4 left-multiplication blocks; the
/// scalar factors of SpU1 and SpSp1 act by right multiplication blocks.
SphereModel make_model(SphereKind kind, int m = 0);

/// Left multiplication by a quaternion (a, b, c, d) on R^4 = H.
Matrix quaternion_left_matrix(const std::array<double, 4>& q);
/// Right multiplication by a quaternion on R^4 = H.
Matrix quaternion_right_matrix(const std::array<double, 4>& q);

/// X p, the value of the fundamental vector field of X at p. p must be on
/// the sphere to 1e-10.
Vector killing_value(const SphereModel& model, const Matrix& X, const Vector& p);

/// || g^{-1} (X (g x0)) - (g^{-1} X g) x0 ||: the pulled-back field value
/// against the projected conjugate. Zero for any invertible g.
double pullback_identity_check(const SphereModel& model, const Matrix& X,
                               const Matrix& g);

struct OrbitSample {
  SphereKind kind;
  Matrix X;
  std::uint64_t seed = 0;
  std::vector<Vector> points;       // pr(Ad(g_i) X), ambient coordinates
  std::vector<Matrix> conjugators;  // the g_i
};

/// n points pr(Ad(g) X), each g a product of 4 exponentials of random basis
/// combinations with coefficients uniform on [-pi, pi]. Deterministic under
/// the seed; every point is tangent at the base point.
OrbitSample sample_orbit(const SphereModel& model, const Matrix& X, int n,
                         std::uint64_t seed);

struct ConjugationResult {
  Matrix g;
  Vector achieved;  // pr(Ad(g) X)
  double distance;
  bool success;
  std::int64_t evaluations;
};

/// Minimizes ||pr(Ad(g) X) - target|| over g = exp(sum theta_a Y_a) by
/// random-restart coordinate descent: 32 restarts (the first from theta = 0),
/// initial step pi/4, halved after a stalled sweep, at most 200 sweeps per
/// restart. Stops at distance <= tol; never exceeds budget objective
/// evaluations. On exhaustion the best point found is returned with
/// success = false.
ConjugationResult find_conjugation(const SphereModel& model, const Matrix& X,
                                   const Vector& target, double tol,
                                   std::int64_t budget, std::uint64_t seed);

}  // namespace kfcl
