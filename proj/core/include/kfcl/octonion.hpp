#pragma once

#include "kfcl/numkit.hpp"

#include <array>
#include <utility>

namespace kfcl {

/// An element of the Cayley algebra O, stored as 8 components over the
/// Cayley-Dickson basis 1, i, j, k, l, li, lj, lk. Components 0..3 and 4..7
/// are the two quaternion halves of the pair picture (q1, q2).
class Octonion {
 public:
  Octonion() : c_{} {}
  explicit Octonion(const std::array<double, 8>& c) : c_(c) {}

  static Octonion scalar(double r);
  /// Basis unit e_i, i in 0..7 (e_0 is the real unit).
  static Octonion unit(int i);
  static Octonion from_vector(const Vector& v);

  double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::array<double, 8>& components() const { return c_; }
  Vector to_vector() const;

  Octonion& operator+=(const Octonion& o);
  Octonion& operator-=(const Octonion& o);
  Octonion& operator*=(double s);

 private:
  std::array<double, 8> c_;
};

Octonion operator+(Octonion a, const Octonion& b);
Octonion operator-(Octonion a, const Octonion& b);
Octonion operator-(const Octonion& a);
Octonion operator*(double s, Octonion a);
Octonion operator*(Octonion a, double s);

/// Cayley-Dickson product
///   (q1, q2)(s1, s2) = (q1 s1 - conj(s2) q2, s2 q1 + q2 conj(s1)).
/// Not associative; parenthesize deliberately.
Octonion mul(const Octonion& x, const Octonion& y);
inline Octonion operator*(const Octonion& x, const Octonion& y) {
  return mul(x, y);
}

/// conj(q1, q2) = (conj(q1), -q2).
Octonion conj(const Octonion& x);
double re(const Octonion& x);
Octonion im(const Octonion& x);
/// Euclidean inner product on R^8; coincides with re(x * conj(y)).
double inner(const Octonion& x, const Octonion& y);
double norm(const Octonion& x);

/// 8x8 matrix of left multiplication by w: column b is w * e_b.
Matrix left_op(const Octonion& w);
/// 8x8 matrix of right multiplication by w: column b is e_b * w.
Matrix right_op(const Octonion& w);

/// A reordered basis with e1 e2 = e3 e4 = e5 e6 = e7 exactly, realized as a
/// signed relabeling of the Cayley-Dickson imaginary units. The relabeling is
/// a view; octonions are always stored in Cayley-Dickson coordinates.
struct PaperBasis {
  /// signed_index[i] = +-(CD index) assigned to slot i; slot 0 is the real
  /// unit and carries index 0.
  std::array<int, 8> signed_index;

  Octonion unit(int i) const;
  /// Orthogonal change of basis; column i holds unit(i) as an R^8 vector.
  Matrix change_of_basis() const;
};

/// The shipped labeling, verified once against the three product constraints
/// and pairwise orthogonality on first use. A violation (impossible for the
/// shipped constant) throws std::logic_error.
const PaperBasis& paper_basis();

/// Splits a unit imaginary z as z = z1 * z2 with z1, z2 unit imaginary and
/// <z1, z2> = 0. z1 is deterministic: the first Cayley-Dickson imaginary unit
/// not parallel to z, Gram-Schmidt against z, normalized; z2 = conj(z1) * z.
/// Inputs that are not unit imaginary (tolerance 1e-10) are rejected.
std::pair<Octonion, Octonion> decompose_orthogonal(const Octonion& z);

}  // namespace kfcl
