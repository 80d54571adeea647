#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "isospec/numerics.hpp"
#include "isospec/types.hpp"

namespace isospec {

// Inner product convention used everywhere in this library: <f, g> is
// conjugate-linear in the FIRST argument, i.e. <f, g> = f^dag g. This is
// Eigen's `f.dot(g)`.
inline Complex inner(const ComplexVector& f, const ComplexVector& g) { return f.dot(g); }

/// An ordered list of m vectors in C^dim. Fewer vectors than dim is accepted
/// at construction (such a list cannot span and is rejected by frame_bounds).
struct Frame {
  Eigen::Index dim = 0;
  std::vector<ComplexVector> vectors;

  Frame() = default;
  Frame(Eigen::Index dim_, std::vector<ComplexVector> vectors_)
      : dim(dim_), vectors(std::move(vectors_)) {
    if (dim <= 0) throw std::invalid_argument("Frame: dimension must be positive");
    if (vectors.empty()) throw std::invalid_argument("Frame: vector list is empty");
    bool any_nonzero = false;
    for (const auto& v : vectors) {
      if (v.size() != dim)
        throw DimensionMismatch("Frame: vector length does not match ambient dimension");
      if (!v.allFinite()) throw std::invalid_argument("Frame: non-finite vector entry");
      if (v.norm() > 0.0) any_nonzero = true;
    }
    if (!any_nonzero) throw std::invalid_argument("Frame: all vectors are zero");
  }

  Eigen::Index size() const { return static_cast<Eigen::Index>(vectors.size()); }
};

struct FrameBounds {
  double lower = 0.0;  // A
  double upper = 0.0;  // B
};

/// Analysis operator F (m x n): row j is the conjugate of vector j, so that
/// (F f)_j = <phi_j, f>.
inline ComplexMatrix analysis_operator(const Frame& frame) {
  ComplexMatrix f(frame.size(), frame.dim);
  for (Eigen::Index j = 0; j < frame.size(); ++j)
    f.row(j) = frame.vectors[static_cast<size_t>(j)].conjugate().transpose();
  return f;
}

/// Synthesis operator F^dag (n x m); applied to coefficients c it yields
/// the linear combination sum_i c_i phi_i.
inline ComplexMatrix synthesis_operator(const Frame& frame) {
  return adjoint(analysis_operator(frame));
}

/// Frame operator F^dag F (n x n), Hermitian positive semi-definite.
inline ComplexMatrix frame_operator(const Frame& frame) {
  const ComplexMatrix f = analysis_operator(frame);
  return f.adjoint() * f;
}

/// Gram matrix F F^dag (m x m); entry (j, k) = <phi_j, phi_k>.
inline ComplexMatrix cross_gram(const Frame& frame) {
  const ComplexMatrix f = analysis_operator(frame);
  return f * f.adjoint();
}

/// Optimal frame bounds (A, B) = extreme eigenvalues of the frame operator.
/// Throws NotAFrame when the vectors do not span C^dim.
inline FrameBounds frame_bounds(const Frame& frame, const Tolerances& tol = {}) {
  const EigenDecomposition dec = hermitian_eig(frame_operator(frame), tol);
  const double upper = dec.eigenvalues(0);
  const double lower = dec.eigenvalues(dec.eigenvalues.size() - 1);
  if (upper <= 0.0 || lower <= tol.invertibility * upper)
    throw NotAFrame("frame_bounds: vectors do not span the ambient space");
  return FrameBounds{lower, upper};
}

/// The tight-frame constant A when the bounds coincide up to relative spread
/// eigen_match, otherwise nullopt. Non-spanning lists are never tight.
inline std::optional<double> is_tight(const Frame& frame, const Tolerances& tol = {}) {
  FrameBounds b;
  try {
    b = frame_bounds(frame, tol);
  } catch (const NotAFrame&) {
    return std::nullopt;
  }
  if (b.upper - b.lower <= tol.eigen_match * b.upper) return 0.5 * (b.lower + b.upper);
  return std::nullopt;
}

/// Canonical dual frame, vector i = (F^dag F)^{-1} phi_i.
inline Frame dual_frame(const Frame& frame, const Tolerances& tol = {}) {
  frame_bounds(frame, tol);  // NotAFrame on failure
  const ComplexMatrix inv = strict_inverse(frame_operator(frame), tol);
  std::vector<ComplexVector> duals;
  duals.reserve(frame.vectors.size());
  for (const auto& v : frame.vectors) duals.push_back(inv * v);
  return Frame(frame.dim, std::move(duals));
}

/// The two reconstruction sums for f: via dual vectors,
/// sum_i <phi_i, f> phi~_i, and via dual coefficients, sum_i <phi~_i, f> phi_i.
inline std::pair<ComplexVector, ComplexVector> reconstruct(const Frame& frame,
                                                           const ComplexVector& f,
                                                           const Tolerances& tol = {}) {
  if (f.size() != frame.dim)
    throw DimensionMismatch("reconstruct: vector length does not match frame dimension");
  const Frame dual = dual_frame(frame, tol);
  ComplexVector via_dual_vectors = ComplexVector::Zero(frame.dim);
  ComplexVector via_dual_coeffs = ComplexVector::Zero(frame.dim);
  for (size_t i = 0; i < frame.vectors.size(); ++i) {
    via_dual_vectors += inner(frame.vectors[i], f) * dual.vectors[i];
    via_dual_coeffs += inner(dual.vectors[i], f) * frame.vectors[i];
  }
  return {via_dual_vectors, via_dual_coeffs};
}

}  // namespace isospec
