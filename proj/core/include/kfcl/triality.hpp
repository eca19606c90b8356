#pragma once

#include "kfcl/octonion.hpp"

#include <utility>

namespace kfcl {

/// Orthogonal triple with A(x) B(y) = C(x y) for all octonions x, y.
/// The group of all such triples is the concrete model of Spin(8) used
/// throughout; the projection onto the first entry covers SO(8) two-to-one.
struct TrialityTriple {
  Matrix A, B, C;
};

/// Skew triple with a(x) y + x b(y) = c(x y); the tangent version of the
/// above, modelling the Lie algebra.
struct InfTriple {
  Matrix a, b, c;
};

/// Componentwise product; triples are closed under it.
TrialityTriple mul(const TrialityTriple& s, const TrialityTriple& t);
/// Componentwise transpose (all entries are orthogonal).
TrialityTriple inverse(const TrialityTriple& t);

/// Max over the 64 basis pairs of ||A(e_a) B(e_b) - C(e_a e_b)||. Bilinearity
/// bounds the defect on all of O x O by this up to norm factors.
double verify_triple(const Matrix& A, const Matrix& B, const Matrix& C);
double verify_triple(const TrialityTriple& t);

/// Max over the 64 basis pairs of ||a(e_a) e_b + e_a b(e_b) - c(e_a e_b)||.
double inf_residual(const InfTriple& t);

struct InfLiftResult {
  InfTriple triple;
  int nullity;      // of the skew-parameterized system; 0 on success
  double residual;  // least-squares residual of the solve
};

/// Completes a skew a to the unique skew pair (b, c) with
/// a(x) y + x b(y) = c(x y). The 512x56 linear system (b and c parameterized
/// by skew coordinates) has full column rank; a nonzero nullity means the
/// solve went wrong and throws std::runtime_error.
InfLiftResult inf_lift(const Matrix& a);

/// The exactly-two triples with first entry A, returned as
/// {(A, B, C), (A, -B, -C)}. B spans the one-dimensional nullspace of the
/// 512x64 homogeneous system A(x) B(y) = L_{A(1)} B(x y); it is rescaled to
/// orthogonality afterwards (never imposed in the solve), with the sign fixed
/// so that the largest-magnitude entry of B is positive. A nullspace of any
/// other dimension throws std::runtime_error; A must be orthogonal to 1e-10.
std::pair<TrialityTriple, TrialityTriple> companions(const Matrix& A);

/// (exp(t a), exp(t b), exp(t c)).
TrialityTriple exp_triple(double t, const InfTriple& T);

}  // namespace kfcl
