#include "kfcl/spheres.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kfcl {

namespace {

constexpr double kPi = std::numbers::pi;

Matrix complex_entry(double a, double b) {
  Matrix m(2, 2);
  m << a, -b, b, a;
  return m;
}

void put_block(Matrix& m, int p, int q, const Matrix& blk) {
  const int s = static_cast<int>(blk.rows());
  m.block(s * p, s * q, s, s) = blk;
}

// u(m+1) or su(m+1) as real matrices on R^{2(m+1)}.
std::vector<Matrix> unitary_basis(int n, bool traceless) {
  std::vector<Matrix> basis;
  const int d = 2 * n;
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      Matrix re = Matrix::Zero(d, d);
      put_block(re, p, q, complex_entry(1, 0));
      put_block(re, q, p, complex_entry(-1, 0));
      basis.push_back(re);
      Matrix im = Matrix::Zero(d, d);
      put_block(im, p, q, complex_entry(0, 1));
      put_block(im, q, p, complex_entry(0, 1));
      basis.push_back(im);
    }
  }
  if (traceless) {
    for (int p = 0; p + 1 < n; ++p) {
      Matrix diag = Matrix::Zero(d, d);
      put_block(diag, p, p, complex_entry(0, 1));
      put_block(diag, p + 1, p + 1, complex_entry(0, -1));
      basis.push_back(diag);
    }
  } else {
    for (int p = 0; p < n; ++p) {
      Matrix diag = Matrix::Zero(d, d);
      put_block(diag, p, p, complex_entry(0, 1));
      basis.push_back(diag);
    }
  }
  return basis;
}

// sp(m+1) as real matrices on R^{4(m+1)}.
std::vector<Matrix> symplectic_basis(int n) {
  const std::array<std::array<double, 4>, 4> units = {
      {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
  std::vector<Matrix> basis;
  const int d = 4 * n;
  for (int p = 0; p < n; ++p) {
    for (int u = 1; u < 4; ++u) {
      Matrix m = Matrix::Zero(d, d);
      put_block(m, p, p, quaternion_left_matrix(units[static_cast<std::size_t>(u)]));
      basis.push_back(m);
    }
  }
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      for (int u = 0; u < 4; ++u) {
        const auto& a = units[static_cast<std::size_t>(u)];
        const std::array<double, 4> abar = {a[0], -a[1], -a[2], -a[3]};
        Matrix m = Matrix::Zero(d, d);
        put_block(m, p, q, quaternion_left_matrix(a));
        put_block(m, q, p, -Matrix(quaternion_left_matrix(abar)));
        basis.push_back(m);
      }
    }
  }
  return basis;
}

// Right scalar multiplications on H^n, block-diagonal.
Matrix right_scalar(int n, const std::array<double, 4>& q) {
  Matrix m = Matrix::Zero(4 * n, 4 * n);
  for (int p = 0; p < n; ++p) put_block(m, p, p, quaternion_right_matrix(q));
  return m;
}

Vector coordinate_vector(int dim, int index) {
  Vector v = Vector::Zero(dim);
  v(index) = 1.0;
  return v;
}

void require_parameter(SphereKind kind, int m, bool needs_m) {
  if (needs_m && m < 1) {
    throw std::invalid_argument("make_model: " + to_string(kind) +
                                " needs a size parameter m >= 1");
  }
  if (!needs_m && m != 0) {
    throw std::invalid_argument("make_model: " + to_string(kind) +
                                " takes no size parameter");
  }
}

}  // namespace

std::string to_string(SphereKind k) {
  switch (k) {
    case SphereKind::SO: return "SO";
    case SphereKind::U: return "U";
    case SphereKind::SU: return "SU";
    case SphereKind::Sp: return "Sp";
    case SphereKind::SpU1: return "SpU1";
    case SphereKind::SpSp1: return "SpSp1";
    case SphereKind::G2: return "G2";
    case SphereKind::Spin7: return "Spin7";
    case SphereKind::Spin9: return "Spin9";
  }
  throw std::invalid_argument("to_string: unknown sphere kind");
}

SphereKind sphere_kind_from_string(const std::string& s) {
  for (SphereKind k :
       {SphereKind::SO, SphereKind::U, SphereKind::SU, SphereKind::Sp,
        SphereKind::SpU1, SphereKind::SpSp1, SphereKind::G2, SphereKind::Spin7,
        SphereKind::Spin9}) {
    if (to_string(k) == s) return k;
  }
  throw std::invalid_argument("sphere_kind_from_string: unknown kind " + s);
}

Matrix quaternion_left_matrix(const std::array<double, 4>& q) {
  Matrix m(4, 4);
  m << q[0], -q[1], -q[2], -q[3],
       q[1],  q[0], -q[3],  q[2],
       q[2],  q[3],  q[0], -q[1],
       q[3], -q[2],  q[1],  q[0];
  return m;
}

Matrix quaternion_right_matrix(const std::array<double, 4>& q) {
  Matrix m(4, 4);
  m << q[0], -q[1], -q[2], -q[3],
       q[1],  q[0],  q[3], -q[2],
       q[2], -q[3],  q[0],  q[1],
       q[3],  q[2], -q[1],  q[0];
  return m;
}

Matrix SphereModel::tangent_basis() const {
  int base_index = -1;
  for (int i = 0; i < ambient_dim; ++i) {
    if (base_point(i) == 1.0) {
      base_index = i;
      break;
    }
  }
  if (base_index < 0) {
    throw std::logic_error("tangent_basis: base point is not a coordinate vector");
  }
  Matrix t(ambient_dim, ambient_dim - 1);
  int col = 0;
  for (int i = 0; i < ambient_dim; ++i) {
    if (i == base_index) continue;
    t.col(col++) = coordinate_vector(ambient_dim, i);
  }
  return t;
}

Matrix SphereModel::lie_combination(const Vector& coeffs) const {
  if (coeffs.size() != algebra_dim()) {
    throw std::invalid_argument("lie_combination: coefficient count");
  }
  Matrix m = Matrix::Zero(ambient_dim, ambient_dim);
  for (int k = 0; k < algebra_dim(); ++k) {
    m += coeffs(k) * lie_basis[static_cast<std::size_t>(k)];
  }
  return m;
}

SphereModel make_model(SphereKind kind, int m) {
  SphereModel model;
  model.kind = kind;
  switch (kind) {
    case SphereKind::SO: {
      require_parameter(kind, m, true);
      const int d = m + 1;
      model.ambient_dim = d;
      for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
          Matrix g = Matrix::Zero(d, d);
          g(i, j) = 1.0;
          g(j, i) = -1.0;
          model.lie_basis.push_back(g);
        }
      }
      model.base_point = coordinate_vector(d, d - 1);
      break;
    }
    case SphereKind::U:
    case SphereKind::SU: {
      require_parameter(kind, m, true);
      const int n = m + 1;
      model.ambient_dim = 2 * n;
      model.lie_basis = unitary_basis(n, kind == SphereKind::SU);
      // Complex column vector (0, ..., 0, 1).
      model.base_point = coordinate_vector(2 * n, 2 * n - 2);
      break;
    }
    case SphereKind::Sp:
    case SphereKind::SpU1:
    case SphereKind::SpSp1: {
      require_parameter(kind, m, true);
      const int n = m + 1;
      model.ambient_dim = 4 * n;
      model.lie_basis = symplectic_basis(n);
      if (kind == SphereKind::SpU1) {
        model.lie_basis.push_back(right_scalar(n, {0, 1, 0, 0}));
      } else if (kind == SphereKind::SpSp1) {
        model.lie_basis.push_back(right_scalar(n, {0, 1, 0, 0}));
        model.lie_basis.push_back(right_scalar(n, {0, 0, 1, 0}));
        model.lie_basis.push_back(right_scalar(n, {0, 0, 0, 1}));
      }
      // Quaternionic column vector (0, ..., 0, 1).
      model.base_point = coordinate_vector(4 * n, 4 * n - 4);
      break;
    }
    case SphereKind::G2: {
      require_parameter(kind, m, false);
      model.ambient_dim = 7;
      for (const InfTriple& t : g2_subalgebra()) {
        // Derivations kill the unit and preserve the imaginary part.
        model.lie_basis.push_back(t.b.block(1, 1, 7, 7));
      }
      const Vector e7 = paper_basis().unit(7).to_vector();
      model.base_point = e7.segment(1, 7);
      break;
    }
    case SphereKind::Spin7: {
      require_parameter(kind, m, false);
      model.ambient_dim = 8;
      for (const InfTriple& t : gen_spin7().triples) {
        model.lie_basis.push_back(t.b);
      }
      model.base_point = coordinate_vector(8, 0);
      break;
    }
    case SphereKind::Spin9: {
      require_parameter(kind, m, false);
      model.ambient_dim = 16;
      model.lie_basis = gen_spin9().blocks;
      model.base_point = coordinate_vector(16, 0);
      break;
    }
  }
  return model;
}

Vector killing_value(const SphereModel& model, const Matrix& X,
                     const Vector& p) {
  if (p.size() != model.ambient_dim) {
    throw std::invalid_argument("killing_value: point dimension");
  }
  if (std::abs(p.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("killing_value: point is not on the sphere");
  }
  return X * p;
}

double pullback_identity_check(const SphereModel& model, const Matrix& X,
                               const Matrix& g) {
  const Matrix gi = g.inverse();
  const Vector lhs = gi * (X * (g * model.base_point));
  const Vector rhs = (gi * X * g) * model.base_point;
  return (lhs - rhs).norm();
}

OrbitSample sample_orbit(const SphereModel& model, const Matrix& X, int n,
                         std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_orbit: need n >= 1");
  RngStream rng(seed);
  OrbitSample s;
  s.kind = model.kind;
  s.X = X;
  s.seed = seed;
  const int dim = model.algebra_dim();
  for (int i = 0; i < n; ++i) {
    Matrix g = Matrix::Identity(model.ambient_dim, model.ambient_dim);
    for (int f = 0; f < 4; ++f) {
      g *= mat_exp(model.lie_combination(rng.uniform_vector(dim, -kPi, kPi)));
    }
    const Vector point = (g * X * g.transpose()) * model.base_point;
    if (std::abs(point.dot(model.base_point)) > 1e-10) {
      throw std::runtime_error("sample_orbit: point left the tangent space");
    }
    s.points.push_back(point);
    s.conjugators.push_back(std::move(g));
  }
  return s;
}

ConjugationResult find_conjugation(const SphereModel& model, const Matrix& X,
                                   const Vector& target, double tol,
                                   std::int64_t budget, std::uint64_t seed) {
  if (tol <= 0.0) throw std::invalid_argument("find_conjugation: tol");
  if (target.size() != model.ambient_dim) {
    throw std::invalid_argument("find_conjugation: target dimension");
  }
  RngStream rng(seed);
  const int dim = model.algebra_dim();
  std::int64_t evals = 0;

  auto residual = [&](const Vector& theta) {
    ++evals;
    const Matrix g = mat_exp(model.lie_combination(theta));
    return Vector((g * X * g.transpose()) * model.base_point - target);
  };
  auto objective = [&](const Vector& theta) { return residual(theta).norm(); };

  // Coordinate descent with a shrinking step; moves crawl along their
  // coordinate while they keep paying off.
  auto descend = [&](Vector& theta, double& f) {
    double step = kPi / 4.0;
    for (int sweep = 0; sweep < 200 && f > tol && evals < budget; ++sweep) {
      bool improved = false;
      for (int a = 0; a < dim && f > tol && evals < budget; ++a) {
        for (const double delta : {step, -step}) {
          Vector trial = theta;
          trial(a) += delta;
          double ft = objective(trial);
          if (ft >= f) continue;
          do {
            theta = trial;
            f = ft;
            improved = true;
            trial(a) += delta;
            ft = objective(trial);
          } while (ft < f && f > tol && evals < budget);
          break;
        }
      }
      if (!improved) {
        step *= 0.5;
        if (step < 1e-12) break;
      }
    }
  };

  // Gauss-Newton polish with a forward-difference Jacobian and backtracking.
  // Coordinate descent alone crawls in curved valleys near some targets;
  // the polish converges from any point the descent gets close.
  auto polish = [&](Vector& theta, double& f) {
    const double h = 1e-6;
    for (int it = 0; it < 40 && f > 0.01 * tol && evals < budget; ++it) {
      const Vector r0 = residual(theta);
      Matrix jac(model.ambient_dim, dim);
      for (int a = 0; a < dim; ++a) {
        Vector shifted = theta;
        shifted(a) += h;
        jac.col(a) = (residual(shifted) - r0) / h;
      }
      const Vector delta =
          Eigen::CompleteOrthogonalDecomposition<Matrix>(jac).solve(-r0);
      double scale = 1.0;
      bool moved = false;
      while (scale > 1e-4 && evals < budget) {
        const double ft = objective(theta + scale * delta);
        if (ft < f) {
          theta += scale * delta;
          f = ft;
          moved = true;
          break;
        }
        scale *= 0.5;
      }
      if (!moved) break;
    }
  };

  Vector best_theta = Vector::Zero(dim);
  double best = objective(best_theta);

  constexpr int kRestarts = 32;
  for (int restart = 0; restart < kRestarts && best > tol && evals < budget;
       ++restart) {
    Vector theta = restart == 0 ? Vector::Zero(dim)
                                : rng.uniform_vector(dim, -kPi, kPi);
    double f = objective(theta);
    descend(theta, f);
    if (f <= 0.5) polish(theta, f);
    if (f < best) {
      best = f;
      best_theta = theta;
    }
  }

  ConjugationResult r;
  r.g = mat_exp(model.lie_combination(best_theta));
  r.achieved = (r.g * X * r.g.transpose()) * model.base_point;
  r.distance = best;
  r.success = best <= tol;
  r.evaluations = evals;
  return r;
}

}  // namespace kfcl
