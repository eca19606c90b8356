#pragma once

#include "kfcl/spheres.hpp"

#include <string>
#include <vector>

namespace kfcl {

/// A Minkowski norm on a tangent space: either the Riemannian norm
/// sqrt(v' Q v) or the Randers norm sqrt(v' A v) + b . v. Construction
/// validates symmetry (1e-12), positive definiteness, and for the Randers
/// variant the strict bound ||b||_{A^{-1}} < 1; eval itself never throws.
class MinkowskiNorm {
 public:
  static MinkowskiNorm riemannian(const Matrix& q);
  static MinkowskiNorm randers(const Matrix& a, const Vector& b);

  bool is_randers() const { return randers_; }
  const Matrix& quadratic() const { return q_; }
  const Vector& drift() const { return b_; }
  int dim() const { return static_cast<int>(q_.rows()); }

  double eval(const Vector& v) const;

 private:
  MinkowskiNorm(Matrix q, Vector b, bool randers);
  Matrix q_;
  Vector b_;
  bool randers_;
};

struct KfclCheck {
  bool is_constant = false;
  double spread = 0.0;  // max F - min F over the sample
  double mean = 0.0;
  int sample_size = 0;
};

/// Constant-length test on a finite sample: is_constant iff
/// spread <= 1e-8 * mean. An honest sample-based check, not a proof.
KfclCheck kfcl_check(const std::vector<Vector>& points,
                     const MinkowskiNorm& f);
KfclCheck kfcl_check(const OrbitSample& sample, const MinkowskiNorm& f);

enum class QuadricClass { Riemannian, Randers, Neither };
std::string to_string(QuadricClass c);

struct QuadricFit {
  Matrix Q;         // centered form (v - c)' Q (v - c) = 1 when definite
  Vector center;
  double residual;  // max |(v - c)' Q (v - c) - 1| over the inputs
  QuadricClass classification = QuadricClass::Neither;
  bool borderline = false;  // origin within 1e-6 of the fitted surface
  Matrix raw_Q;             // raw fit v' raw_Q v + raw_l . v = 1
  Vector raw_l;
};

/// Least-squares quadric v' Q v + l . v = 1 through the points, recentered
/// when Q is positive definite (eigenvalue floor 1e-10). Classification:
/// center norm <= 1e-8 gives Riemannian; positive definite with the origin
/// strictly inside gives Randers; everything else (indefinite, degenerate,
/// origin outside or within 1e-6 of the surface, the latter flagged
/// borderline) gives Neither with diagnostics, never an exception.
/// Needs at least d(d+3)/2 points in general position.
QuadricFit quadric_fit(const std::vector<Vector>& points);

/// The norm whose unit level set is the fitted quadric; round-trips the fit
/// points to 1 up to the fit residual. Throws std::domain_error when the fit
/// is classified Neither.
MinkowskiNorm randers_from_quadric(const QuadricFit& fit);

/// Samples n random sphere points and returns max - min of the round
/// distances arccos <p, g p>. A translation moving every point the same
/// distance scores ~0; g must be orthogonal to 1e-10.
double round_cw_check(const SphereModel& model, const Matrix& g, int n,
                      std::uint64_t seed);

struct SpanCoordinates {
  Matrix basis;                // ambient x r, orthonormal columns
  std::vector<Vector> coords;  // points expressed in the span basis
};

/// Orthonormal basis of the linear span of the points (rank decided at the
/// default tolerance) and the points in those coordinates. Orbit projections
/// often live in a proper subspace of the tangent space; fitting quadrics in
/// span coordinates keeps the fit nondegenerate.
SpanCoordinates principal_span(const std::vector<Vector>& points,
                               double tol = kRankTolerance);

}  // namespace kfcl
