#pragma once

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "isospec/types.hpp"

namespace isospec {

// Matrix residuals are measured in the Frobenius norm throughout.
inline double frobenius(const ComplexMatrix& m) { return m.norm(); }

inline bool is_finite(const ComplexMatrix& m) { return m.allFinite(); }

inline ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

/// Conjugate transpose. adjoint(adjoint(M)) == M holds bitwise.
inline ComplexMatrix adjoint(const ComplexMatrix& m) { return m.adjoint(); }

inline double hermiticity_residual(const ComplexMatrix& m) {
  const double scale = frobenius(m);
  if (scale == 0.0) return 0.0;
  return frobenius(ComplexMatrix(m - m.adjoint())) / scale;
}

inline bool is_hermitian(const ComplexMatrix& m, const Tolerances& tol) {
  return m.rows() == m.cols() && hermiticity_residual(m) <= tol.hermiticity;
}

// Eigenvalues sorted descending; column k of `eigenvectors` pairs with
// eigenvalue k and the columns are orthonormal.
struct EigenDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;

  ComplexVector eigenvector(Eigen::Index k) const { return eigenvectors.col(k); }
  ComplexMatrix reconstruct() const {
    return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.adjoint();
  }
};

/// Hermitian eigendecomposition. Throws NotHermitian when the relative
/// asymmetry of `m` exceeds the hermiticity tolerance.
inline EigenDecomposition hermitian_eig(const ComplexMatrix& m, const Tolerances& tol = {}) {
  if (m.rows() != m.cols()) throw DimensionMismatch("hermitian_eig: matrix is not square");
  if (hermiticity_residual(m) > tol.hermiticity)
    throw NotHermitian("hermitian_eig: matrix is not Hermitian within tolerance");

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success)
    throw Error("hermitian_eig: eigensolver failed to converge");

  // Eigen reports ascending order; flip to descending.
  const Eigen::Index n = m.rows();
  EigenDecomposition dec;
  dec.eigenvalues = solver.eigenvalues().reverse();
  dec.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k)
    dec.eigenvectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  return dec;
}

/// Inverse of a Hermitian positive semi-definite matrix, gated on the
/// relative spread of its spectrum: a matrix whose smallest eigenvalue is
/// at most `invertibility * max eigenvalue` is rejected as NotInvertible.
inline ComplexMatrix strict_inverse(const ComplexMatrix& m, const Tolerances& tol = {}) {
  const EigenDecomposition dec = hermitian_eig(m, tol);
  const Eigen::Index n = m.rows();
  const double max_eig = n > 0 ? dec.eigenvalues(0) : 0.0;
  const double min_eig = n > 0 ? dec.eigenvalues(n - 1) : 0.0;
  if (max_eig <= 0.0 || min_eig <= tol.invertibility * max_eig)
    throw NotInvertible("strict_inverse: smallest eigenvalue below invertibility threshold");

  RealVector inv = dec.eigenvalues.cwiseInverse();
  ComplexMatrix result = dec.eigenvectors * inv.asDiagonal() * dec.eigenvectors.adjoint();
  // Symmetrize away the last rounding; the exact inverse is Hermitian.
  return ComplexMatrix(0.5 * (result + result.adjoint()));
}

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw DimensionMismatch("commutator: operands must be square and equally sized");
  return a * b - b * a;
}

inline double commutator_residual(const ComplexMatrix& a, const ComplexMatrix& b) {
  const double scale = frobenius(a) * frobenius(b);
  if (scale == 0.0) return 0.0;
  return frobenius(commutator(a, b)) / scale;
}

/// Singular values, descending.
inline RealVector singular_values(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues();
}

/// Greedy multiset match of two descending sequences within an absolute gap.
/// Returns, for each entry of `needles`, the index of the matched entry of
/// `haystack` or -1; each haystack entry is used at most once.
inline std::vector<Eigen::Index> match_descending(const RealVector& haystack,
                                                  const RealVector& needles,
                                                  double gap) {
  std::vector<bool> used(static_cast<size_t>(haystack.size()), false);
  std::vector<Eigen::Index> match(static_cast<size_t>(needles.size()), -1);
  for (Eigen::Index i = 0; i < needles.size(); ++i) {
    double best = gap;
    Eigen::Index best_j = -1;
    for (Eigen::Index j = 0; j < haystack.size(); ++j) {
      if (used[static_cast<size_t>(j)]) continue;
      const double d = std::abs(haystack(j) - needles(i));
      if (d <= best) {
        best = d;
        best_j = j;
      }
    }
    if (best_j >= 0) {
      used[static_cast<size_t>(best_j)] = true;
      match[static_cast<size_t>(i)] = best_j;
    }
  }
  return match;
}

}  // namespace isospec
