#pragma once

#include "kfcl/numkit.hpp"

namespace kfcl::testutil {

inline Matrix random_skew(RngStream& rng, int n, double scale = 1.0) {
  Matrix m = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double v = scale * rng.normal();
      m(i, j) += v;
      m(j, i) -= v;
    }
  }
  return m;
}

inline double orthogonality_defect(const Matrix& e) {
  return (e.transpose() * e - Matrix::Identity(e.rows(), e.cols()))
      .cwiseAbs()
      .maxCoeff();
}

}  // namespace kfcl::testutil
