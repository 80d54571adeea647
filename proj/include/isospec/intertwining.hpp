#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "isospec/frames.hpp"
#include "isospec/numerics.hpp"
#include "isospec/types.hpp"

namespace isospec {

// The construction: given a self-adjoint h1 on H1 and X: H2 -> H1 with
// N1 = X X^dag, N2 = X^dag X, N2 invertible and [N1, h1] = 0, the partner
// h2 = N2^{-1} X^dag h1 X is self-adjoint, commutes with N2, satisfies the
// weak intertwining relation X^dag (X h2 - h1 X) = 0, and every nonzero
// image X^dag phi of an eigenvector of h1 is an eigenvector of h2 with the
// same eigenvalue. Hence sigma(h2) is a sub-multiset of sigma(h1).

struct PartnerInput {
  ComplexMatrix h1;  // d1 x d1, Hermitian
  ComplexMatrix x;   // d1 x d2, maps H2 -> H1

  PartnerInput(ComplexMatrix h1_, ComplexMatrix x_) : h1(std::move(h1_)), x(std::move(x_)) {
    if (h1.rows() != h1.cols()) throw DimensionMismatch("PartnerInput: h1 must be square");
    if (x.rows() != h1.rows())
      throw DimensionMismatch("PartnerInput: row count of X must equal the dimension of h1");
    if (!is_finite(h1) || !is_finite(x))
      throw std::invalid_argument("PartnerInput: non-finite entry");
  }

  Eigen::Index dim_h1() const { return h1.rows(); }
  Eigen::Index dim_h2() const { return x.cols(); }
};

struct PartnerResult {
  ComplexMatrix h2;  // d2 x d2
  ComplexMatrix n1;  // X X^dag
  ComplexMatrix n2;  // X^dag X

  // Relative residuals, Frobenius norm. residual_beta_strong is reported for
  // information; it is only guaranteed small when N1 is invertible as well.
  double residual_alpha = 0.0;        // ||h2 - h2^dag|| / ||h2||
  double residual_beta = 0.0;         // ||X^dag (X h2 - h1 X)|| / (||X||^2 ||h1||)
  double residual_beta_strong = 0.0;  // ||X h2 - h1 X|| / (||X|| ||h1||)
  double residual_h2n2 = 0.0;         // ||[h2, N2]|| / (||h2|| ||N2||)

  bool passes(const Tolerances& tol) const {
    return residual_alpha <= tol.hermiticity && residual_beta <= tol.commutator &&
           residual_h2n2 <= tol.commutator;
  }
};

struct MatchedCluster {
  double eigenvalue = 0.0;  // representative value from sigma(h1)
  int multiplicity_h1 = 0;
  int multiplicity_h2 = 0;
};

struct KeptImage {
  double eigenvalue = 0.0;
  Eigen::Index index = 0;  // position in the descending spectrum of h1
  double image_norm = 0.0;  // ||X^dag phi_n||
};

struct DroppedImage {
  double eigenvalue = 0.0;
  Eigen::Index index = 0;
};

struct SpectralReport {
  RealVector spectrum_h1;  // descending
  RealVector spectrum_h2;  // descending
  std::vector<MatchedCluster> matched;
  std::vector<double> unmatched_h2;  // eigenvalues of h2 without a partner in h1
  std::vector<KeptImage> kept_eigenvectors;
  std::vector<DroppedImage> dropped_eigenvectors;

  bool included() const { return unmatched_h2.empty(); }
};

namespace detail {

// Fills matched/unmatched from the two descending spectra already present in
// the report. Clusters of h1 closer than the matching gap count as one
// degenerate eigenvalue.
inline void fill_spectrum_matching(SpectralReport& report, const Tolerances& tol) {
  const auto match = match_descending(report.spectrum_h1, report.spectrum_h2, tol.eigen_match);
  std::vector<int> hits(static_cast<size_t>(report.spectrum_h1.size()), 0);
  for (Eigen::Index i = 0; i < report.spectrum_h2.size(); ++i) {
    const Eigen::Index j = match[static_cast<size_t>(i)];
    if (j < 0)
      report.unmatched_h2.push_back(report.spectrum_h2(i));
    else
      ++hits[static_cast<size_t>(j)];
  }
  Eigen::Index begin = 0;
  while (begin < report.spectrum_h1.size()) {
    Eigen::Index end = begin + 1;
    while (end < report.spectrum_h1.size() &&
           report.spectrum_h1(end - 1) - report.spectrum_h1(end) <= tol.eigen_match)
      ++end;
    MatchedCluster cluster;
    cluster.eigenvalue = report.spectrum_h1(begin);
    cluster.multiplicity_h1 = static_cast<int>(end - begin);
    for (Eigen::Index j = begin; j < end; ++j)
      cluster.multiplicity_h2 += hits[static_cast<size_t>(j)];
    report.matched.push_back(cluster);
    begin = end;
  }
}

}  // namespace detail

/// Checks the hypotheses of the construction and returns (N1, N2).
/// Throws NotHermitian, CommutatorViolation or NotInvertible.
inline std::pair<ComplexMatrix, ComplexMatrix> validate_compatibility(const PartnerInput& input,
                                                                      const Tolerances& tol = {}) {
  if (hermiticity_residual(input.h1) > tol.hermiticity)
    throw NotHermitian("validate_compatibility: h1 is not Hermitian within tolerance");
  ComplexMatrix n1 = input.x * input.x.adjoint();
  ComplexMatrix n2 = input.x.adjoint() * input.x;
  if (commutator_residual(n1, input.h1) > tol.commutator)
    throw CommutatorViolation("validate_compatibility: [N1, h1] exceeds tolerance");
  strict_inverse(n2, tol);  // NotInvertible on failure
  return {std::move(n1), std::move(n2)};
}

/// Builds h2 = N2^{-1} X^dag h1 X and reports the residuals of the
/// self-adjointness, weak intertwining and [h2, N2] identities.
inline PartnerResult build_partner(const PartnerInput& input, const Tolerances& tol = {}) {
  auto [n1, n2] = validate_compatibility(input, tol);

  PartnerResult result;
  result.n1 = std::move(n1);
  result.n2 = std::move(n2);
  result.h2 = strict_inverse(result.n2, tol) * (input.x.adjoint() * input.h1 * input.x);

  const double x_norm = frobenius(input.x);
  const double h1_norm = frobenius(input.h1);
  const ComplexMatrix strong = input.x * result.h2 - input.h1 * input.x;
  const double beta_scale = x_norm * x_norm * h1_norm;
  const double strong_scale = x_norm * h1_norm;

  result.residual_alpha = hermiticity_residual(result.h2);
  result.residual_beta =
      beta_scale > 0.0 ? frobenius(ComplexMatrix(input.x.adjoint() * strong)) / beta_scale : 0.0;
  result.residual_beta_strong = strong_scale > 0.0 ? frobenius(strong) / strong_scale : 0.0;
  result.residual_h2n2 = commutator_residual(result.h2, result.n2);
  return result;
}

/// Maps every eigenpair (eps_n, phi_n) of h1 through X^dag. Nonzero images
/// are verified to satisfy the h2 eigen-equation at eps_n and recorded as
/// kept; images with ||X^dag phi|| <= zero_vector * ||X|| * ||phi|| are
/// recorded as dropped. Also fills the matched/unmatched spectra bookkeeping.
inline SpectralReport map_eigenpairs(const PartnerInput& input, const PartnerResult& result,
                                     const Tolerances& tol = {}) {
  SpectralReport report;
  const EigenDecomposition eig1 = hermitian_eig(input.h1, tol);
  const EigenDecomposition eig2 = hermitian_eig(result.h2, tol);
  report.spectrum_h1 = eig1.eigenvalues;
  report.spectrum_h2 = eig2.eigenvalues;

  const double x_norm = frobenius(input.x);
  for (Eigen::Index n = 0; n < eig1.eigenvalues.size(); ++n) {
    const double eps = eig1.eigenvalues(n);
    const ComplexVector phi1 = eig1.eigenvector(n);
    const ComplexVector phi2 = input.x.adjoint() * phi1;
    const double image_norm = phi2.norm();
    if (image_norm <= tol.zero_vector * x_norm * phi1.norm()) {
      report.dropped_eigenvectors.push_back({eps, n});
      continue;
    }
    const double residual = (result.h2 * phi2 - eps * phi2).norm();
    if (residual > tol.eigen_match * image_norm)
      throw EigenResidualViolation("map_eigenpairs: kept image fails its eigen-equation");
    report.kept_eigenvectors.push_back({eps, n, image_norm});
  }

  detail::fill_spectrum_matching(report, tol);
  return report;
}

/// Multiset inclusion check of sigma(h2) in sigma(h1) for two Hermitian
/// matrices; the verdict is carried by the report, no error is raised.
inline SpectralReport spectral_inclusion(const ComplexMatrix& h1, const ComplexMatrix& h2,
                                         const Tolerances& tol = {}) {
  SpectralReport report;
  report.spectrum_h1 = hermitian_eig(h1, tol).eigenvalues;
  report.spectrum_h2 = hermitian_eig(h2, tol).eigenvalues;
  detail::fill_spectrum_matching(report, tol);
  return report;
}

/// The reverse construction h1 = N1^{-1} X h2 X^dag, available when N1 is
/// invertible and h2 commutes with N2.
inline ComplexMatrix build_reverse_partner(const ComplexMatrix& h2, const ComplexMatrix& x,
                                           const Tolerances& tol = {}) {
  if (h2.rows() != h2.cols() || h2.rows() != x.cols())
    throw DimensionMismatch("build_reverse_partner: h2 must be square with dim = cols of X");
  if (hermiticity_residual(h2) > tol.hermiticity)
    throw NotHermitian("build_reverse_partner: h2 is not Hermitian within tolerance");
  const ComplexMatrix n2 = x.adjoint() * x;
  if (commutator_residual(h2, n2) > tol.commutator)
    throw CommutatorViolation("build_reverse_partner: [h2, N2] exceeds tolerance");
  const ComplexMatrix n1 = x * x.adjoint();
  return strict_inverse(n1, tol) * (x * h2 * x.adjoint());
}

enum class Option { I, II };

// Role assignment for a tight frame: Option I takes X = F^dag (so H1 is the
// ambient space and H2 the coefficient space) and needs N2 = F F^dag
// invertible; Option II takes X = F, where N2 = F^dag F = A*1 always is.
struct OptionChoice {
  Option option = Option::II;
  ComplexMatrix x;    // dim(H1) x dim(H2)
  Eigen::Index dim_h1 = 0;
  Eigen::Index dim_h2 = 0;
  double tight_bound = 0.0;  // A

  const char* name() const { return option == Option::I ? "I" : "II"; }
};

inline OptionChoice option_select(const Frame& frame, const Tolerances& tol = {}) {
  const std::optional<double> bound = is_tight(frame, tol);
  if (!bound) throw NotTight("option_select: the frame is not tight");
  OptionChoice choice;
  choice.tight_bound = *bound;
  try {
    strict_inverse(cross_gram(frame), tol);
    choice.option = Option::I;
    choice.x = synthesis_operator(frame);
    choice.dim_h1 = frame.dim;
    choice.dim_h2 = frame.size();
  } catch (const NotInvertible&) {
    choice.option = Option::II;
    choice.x = analysis_operator(frame);
    choice.dim_h1 = frame.size();
    choice.dim_h2 = frame.dim;
  }
  return choice;
}

}  // namespace isospec
