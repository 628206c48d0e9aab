#pragma once

#include <cmath>
#include <vector>

#include "stabsel/error.hpp"
#include "stabsel/matrix.hpp"

namespace stabsel {

/// Solve A x = b for symmetric positive-definite A via Cholesky.
/// A is consumed as the scratch buffer. Throws NumericError when a pivot
/// collapses (system not positive definite).
inline std::vector<double> solve_spd(Matrix a, std::vector<double> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw Error("solve_spd: shape mismatch");
  // In-place lower Cholesky factor.
  for (std::size_t k = 0; k < n; ++k) {
    double diag = a(k, k);
    for (std::size_t p = 0; p < k; ++p) diag -= a(k, p) * a(k, p);
    if (!(diag > 0.0)) throw NumericError("solve_spd: matrix not positive definite");
    diag = std::sqrt(diag);
    a(k, k) = diag;
    for (std::size_t i = k + 1; i < n; ++i) {
      double v = a(i, k);
      for (std::size_t p = 0; p < k; ++p) v -= a(i, p) * a(k, p);
      a(i, k) = v / diag;
    }
  }
  // Forward then back substitution.
  for (std::size_t i = 0; i < n; ++i) {
    double v = b[i];
    for (std::size_t p = 0; p < i; ++p) v -= a(i, p) * b[p];
    b[i] = v / a(i, i);
  }
  for (std::size_t ri = n; ri-- > 0;) {
    double v = b[ri];
    for (std::size_t p = ri + 1; p < n; ++p) v -= a(p, ri) * b[p];
    b[ri] = v / a(ri, ri);
  }
  return b;
}

/// Least-squares coefficients for X beta ~= y via normal equations, with a
/// tiny ridge term for rank-deficient X.
inline std::vector<double> least_squares(const Matrix& x, const std::vector<double>& y,
                                         double ridge = 1e-12) {
  const std::size_t n = x.rows();
  const std::size_t m = x.cols();
  if (y.size() != n) throw Error("least_squares: shape mismatch");
  Matrix gram(m, m);
  std::vector<double> rhs(m, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    auto xi = x.row(i);
    for (std::size_t a = 0; a < m; ++a) {
      rhs[a] += xi[a] * y[i];
      for (std::size_t b = a; b < m; ++b) gram(a, b) += xi[a] * xi[b];
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    gram(a, a) += ridge;
    for (std::size_t b = 0; b < a; ++b) gram(a, b) = gram(b, a);
  }
  return solve_spd(std::move(gram), std::move(rhs));
}

}  // namespace stabsel
