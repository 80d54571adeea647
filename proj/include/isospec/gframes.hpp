#pragma once

#include <utility>
#include <vector>

#include "isospec/intertwining.hpp"
#include "isospec/numerics.hpp"
#include "isospec/types.hpp"

namespace isospec {

/// A g-frame: an ordered list of J operators Lambda_j : C^dim_h -> C^dim_ht,
/// all of the same shape dim_ht x dim_h.
struct GFrame {
  Eigen::Index dim_h = 0;   // domain dimension (H)
  Eigen::Index dim_ht = 0;  // codomain dimension per member (H~)
  std::vector<ComplexMatrix> members;

  GFrame() = default;
  GFrame(Eigen::Index dim_h_, Eigen::Index dim_ht_, std::vector<ComplexMatrix> members_)
      : dim_h(dim_h_), dim_ht(dim_ht_), members(std::move(members_)) {
    if (dim_h <= 0 || dim_ht <= 0)
      throw std::invalid_argument("GFrame: dimensions must be positive");
    if (members.empty()) throw std::invalid_argument("GFrame: member list is empty");
    for (const auto& m : members) {
      if (m.rows() != dim_ht || m.cols() != dim_h)
        throw DimensionMismatch("GFrame: member shape does not match (dim_ht, dim_h)");
      if (!is_finite(m)) throw std::invalid_argument("GFrame: non-finite member entry");
    }
  }

  Eigen::Index size() const { return static_cast<Eigen::Index>(members.size()); }
};

/// An element of the block space H^: one C^dim_ht block per g-frame member,
/// with ||f||^2 = sum_j ||f_j||^2.
struct BlockVector {
  std::vector<ComplexVector> blocks;

  double squared_norm() const {
    double s = 0.0;
    for (const auto& b : blocks) s += b.squaredNorm();
    return s;
  }
  double norm() const { return std::sqrt(squared_norm()); }
};

/// Inner product on the block space, conjugate-linear in the first argument.
inline Complex block_inner(const BlockVector& f, const BlockVector& g) {
  if (f.blocks.size() != g.blocks.size())
    throw DimensionMismatch("block_inner: block counts differ");
  Complex s = 0.0;
  for (size_t j = 0; j < f.blocks.size(); ++j) s += f.blocks[j].dot(g.blocks[j]);
  return s;
}

/// g-analysis: block j of the result is Lambda_j f.
inline BlockVector g_analysis(const GFrame& g, const ComplexVector& f) {
  if (f.size() != g.dim_h)
    throw DimensionMismatch("g_analysis: vector length does not match dim_h");
  BlockVector out;
  out.blocks.reserve(g.members.size());
  for (const auto& m : g.members) out.blocks.push_back(m * f);
  return out;
}

/// g-synthesis: sum_j Lambda_j^dag f_j, the adjoint of g_analysis under the
/// block inner product.
inline ComplexVector g_synthesis(const GFrame& g, const BlockVector& bv) {
  if (static_cast<Eigen::Index>(bv.blocks.size()) != g.size())
    throw DimensionMismatch("g_synthesis: block count does not match member count");
  ComplexVector out = ComplexVector::Zero(g.dim_h);
  for (Eigen::Index j = 0; j < g.size(); ++j) {
    const auto& block = bv.blocks[static_cast<size_t>(j)];
    if (block.size() != g.dim_ht)
      throw DimensionMismatch("g_synthesis: block length does not match dim_ht");
    out += g.members[static_cast<size_t>(j)].adjoint() * block;
  }
  return out;
}

/// g-frame operator S_g = sum_j Lambda_j^dag Lambda_j, Hermitian PSD.
inline ComplexMatrix g_frame_operator(const GFrame& g) {
  ComplexMatrix s = ComplexMatrix::Zero(g.dim_h, g.dim_h);
  for (const auto& m : g.members) s += m.adjoint() * m;
  return s;
}

inline FrameBounds g_frame_bounds(const GFrame& g, const Tolerances& tol = {}) {
  const EigenDecomposition dec = hermitian_eig(g_frame_operator(g), tol);
  const double upper = dec.eigenvalues(0);
  const double lower = dec.eigenvalues(dec.eigenvalues.size() - 1);
  if (upper <= 0.0 || lower <= tol.invertibility * upper)
    throw NotAFrame("g_frame_bounds: S_g is not boundedly invertible");
  return FrameBounds{lower, upper};
}

inline std::optional<double> g_is_tight(const GFrame& g, const Tolerances& tol = {}) {
  FrameBounds b;
  try {
    b = g_frame_bounds(g, tol);
  } catch (const NotAFrame&) {
    return std::nullopt;
  }
  if (b.upper - b.lower <= tol.eigen_match * b.upper) return 0.5 * (b.lower + b.upper);
  return std::nullopt;
}

/// Canonical g-dual: member j = Lambda_j S_g^{-1}.
inline GFrame g_dual(const GFrame& g, const Tolerances& tol = {}) {
  g_frame_bounds(g, tol);  // NotAFrame on failure
  const ComplexMatrix inv = strict_inverse(g_frame_operator(g), tol);
  std::vector<ComplexMatrix> duals;
  duals.reserve(g.members.size());
  for (const auto& m : g.members) duals.push_back(m * inv);
  return GFrame(g.dim_h, g.dim_ht, std::move(duals));
}

/// The analysis operator F_g : C^dim_h -> C^(J*dim_ht) as one matrix: the
/// members stacked vertically in order. Feeding it to the partner
/// construction realizes the block space H^ as plain C^(J*dim_ht).
inline ComplexMatrix stacked_analysis_matrix(const GFrame& g) {
  ComplexMatrix stack(g.size() * g.dim_ht, g.dim_h);
  for (Eigen::Index j = 0; j < g.size(); ++j)
    stack.middleRows(j * g.dim_ht, g.dim_ht) = g.members[static_cast<size_t>(j)];
  return stack;
}

/// Parseval g-frame of orthogonal projections onto the coordinate cells of a
/// partition of {0, .., dim-1}. Cells must be disjoint and cover every index.
inline GFrame projection_gframe(Eigen::Index dim,
                                const std::vector<std::vector<Eigen::Index>>& partition) {
  if (dim <= 0) throw InvalidPartition("projection_gframe: dimension must be positive");
  std::vector<bool> seen(static_cast<size_t>(dim), false);
  std::vector<ComplexMatrix> members;
  members.reserve(partition.size());
  for (const auto& cell : partition) {
    ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index i : cell) {
      if (i < 0 || i >= dim) throw InvalidPartition("projection_gframe: index out of range");
      if (seen[static_cast<size_t>(i)])
        throw InvalidPartition("projection_gframe: cells are not disjoint");
      seen[static_cast<size_t>(i)] = true;
      p(i, i) = 1.0;
    }
    members.push_back(std::move(p));
  }
  for (bool s : seen)
    if (!s) throw InvalidPartition("projection_gframe: cells do not cover every index");
  return GFrame(dim, dim, std::move(members));
}

/// Members Lambda_j = V P_j for an operator V with V^dag V = A*1. The scalar
/// A is detected from trace(V^dag V)/dim; a V that is not isometry-like up to
/// scale is rejected.
inline GFrame composed_gframe(const ComplexMatrix& v, const GFrame& base,
                              const Tolerances& tol = {}) {
  if (v.cols() != base.dim_h)
    throw DimensionMismatch("composed_gframe: V must act on the base g-frame's domain");
  const ComplexMatrix vtv = v.adjoint() * v;
  const double a = vtv.trace().real() / static_cast<double>(base.dim_h);
  if (a <= 0.0 ||
      frobenius(ComplexMatrix(vtv - a * identity(base.dim_h))) > tol.eigen_match * a *
          std::sqrt(static_cast<double>(base.dim_h)))
    throw NotIsometryLike("composed_gframe: V^dag V is not a scalar multiple of the identity");
  std::vector<ComplexMatrix> members;
  members.reserve(base.members.size());
  for (const auto& p : base.members) members.push_back(v * p);
  return GFrame(base.dim_h, v.rows(), std::move(members));
}

/// Grid discretization of the characteristic-function g-frame: J cells of p
/// points each; member j is the 0/1 diagonal projection onto cell j. The
/// members act on the whole grid space (dim_ht = dim_h), and the family is
/// Parseval by construction.
inline GFrame grid_characteristic_gframe(Eigen::Index num_cells, Eigen::Index points_per_cell) {
  if (num_cells < 1 || points_per_cell < 1)
    throw InvalidPartition("grid_characteristic_gframe: cell counts must be >= 1");
  std::vector<std::vector<Eigen::Index>> partition;
  partition.reserve(static_cast<size_t>(num_cells));
  for (Eigen::Index j = 0; j < num_cells; ++j) {
    std::vector<Eigen::Index> cell;
    for (Eigen::Index i = 0; i < points_per_cell; ++i) cell.push_back(j * points_per_cell + i);
    partition.push_back(std::move(cell));
  }
  return projection_gframe(num_cells * points_per_cell, partition);
}

/// Assembles the block-diagonal operator on H^ from one dim_ht x dim_ht
/// block per member index.
inline ComplexMatrix block_diagonal_h1(const GFrame& g, const std::vector<ComplexMatrix>& blocks) {
  if (static_cast<Eigen::Index>(blocks.size()) != g.size())
    throw DimensionMismatch("block_diagonal_h1: need one block per g-frame member");
  ComplexMatrix h1 = ComplexMatrix::Zero(g.size() * g.dim_ht, g.size() * g.dim_ht);
  for (Eigen::Index j = 0; j < g.size(); ++j) {
    const auto& b = blocks[static_cast<size_t>(j)];
    if (b.rows() != g.dim_ht || b.cols() != g.dim_ht)
      throw DimensionMismatch("block_diagonal_h1: block shape must be dim_ht x dim_ht");
    h1.block(j * g.dim_ht, j * g.dim_ht, g.dim_ht, g.dim_ht) = b;
  }
  return h1;
}

/// Partner construction on the block space: X = F_g (stacked members), so
/// N1 = F_g F_g^dag acts on H^, N2 = S_g = A*1 is invertible for any tight
/// g-frame, and h2 = S_g^{-1} F_g^dag h1 F_g acts on H.
inline PartnerResult gframe_partner(const GFrame& g, const std::vector<ComplexMatrix>& h1_blocks,
                                    const Tolerances& tol = {}) {
  if (!g_is_tight(g, tol)) throw NotTight("gframe_partner: the g-frame is not tight");
  const ComplexMatrix h1 = block_diagonal_h1(g, h1_blocks);
  return build_partner(PartnerInput(h1, stacked_analysis_matrix(g)), tol);
}

}  // namespace isospec
