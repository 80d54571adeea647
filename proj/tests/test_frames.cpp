#include <catch2/catch_amalgamated.hpp>

#include "isospec/isospec.hpp"
#include "test_support.hpp"

using namespace isospec;
using isospec::testing::Rng;

namespace {

Frame canonical_basis_frame(Eigen::Index n) {
  std::vector<ComplexVector> vecs;
  for (Eigen::Index k = 0; k < n; ++k) {
    ComplexVector v = ComplexVector::Zero(n);
    v(k) = 1.0;
    vecs.push_back(v);
  }
  return Frame(n, std::move(vecs));
}

}  // namespace

TEST_CASE("frame construction") {
  REQUIRE_THROWS_AS(Frame(2, {ComplexVector::Zero(3)}), DimensionMismatch);
  REQUIRE_THROWS_AS(Frame(2, {ComplexVector::Zero(2)}), std::invalid_argument);
  // fewer vectors than the dimension is fine at construction time
  ComplexVector e1 = ComplexVector::Zero(3);
  e1(0) = 1.0;
  const Frame thin(3, {e1});
  REQUIRE_THROWS_AS(frame_bounds(thin), NotAFrame);
}

TEST_CASE("analysis and synthesis operators") {
  const Tolerances tol;

  SECTION("canonical basis gives the identity") {
    const Frame frame = canonical_basis_frame(2);
    REQUIRE((analysis_operator(frame) - identity(2)).norm() == 0.0);
    REQUIRE((synthesis_operator(frame) - identity(2)).norm() == 0.0);
  }

  SECTION("coefficients are inner products against the frame vectors") {
    Rng rng(21);
    const Frame frame = testing::random_spanning_frame(4, 7, rng);
    const ComplexVector f = testing::random_vector(4, rng);
    const ComplexVector coeffs = analysis_operator(frame) * f;
    for (Eigen::Index j = 0; j < frame.size(); ++j) {
      Complex expected = 0.0;
      for (Eigen::Index i = 0; i < 4; ++i)
        expected += std::conj(frame.vectors[static_cast<size_t>(j)](i)) * f(i);
      REQUIRE(std::abs(coeffs(j) - expected) < 1e-14);
    }
  }

  SECTION("synthesis sums the weighted frame vectors") {
    Rng rng(22);
    const Frame frame = testing::random_spanning_frame(3, 6, rng);
    const ComplexVector c = testing::random_vector(6, rng);
    ComplexVector expected = ComplexVector::Zero(3);
    for (Eigen::Index i = 0; i < 6; ++i)
      expected += c(i) * frame.vectors[static_cast<size_t>(i)];
    REQUIRE((synthesis_operator(frame) * c - expected).norm() < 1e-14);
  }
}

TEST_CASE("frame operator and bounds") {
  const Tolerances tol;

  SECTION("the C^3 tight frame has frame operator (5/3)*1 and bounds (5/3, 5/3)") {
    const Frame frame = *example_c3_tight().frame;
    REQUIRE((frame_operator(frame) - (5.0 / 3.0) * identity(3)).cwiseAbs().maxCoeff() < 1e-15);
    const FrameBounds b = frame_bounds(frame, tol);
    REQUIRE(b.lower == Catch::Approx(5.0 / 3.0).margin(1e-14));
    REQUIRE(b.upper == Catch::Approx(5.0 / 3.0).margin(1e-14));
  }

  SECTION("orthonormal basis satisfies the Parseval equality") {
    const Frame frame = canonical_basis_frame(4);
    REQUIRE((frame_operator(frame) - identity(4)).norm() == 0.0);
    const FrameBounds b = frame_bounds(frame, tol);
    REQUIRE(b.lower == 1.0);
    REQUIRE(b.upper == 1.0);
  }

  SECTION("frame operator equals the outer-product sum") {
    Rng rng(23);
    const Frame frame = testing::random_spanning_frame(5, 9, rng);
    ComplexMatrix oracle = ComplexMatrix::Zero(5, 5);
    for (const auto& v : frame.vectors) oracle += v * v.adjoint();
    REQUIRE((frame_operator(frame) - oracle).norm() < 1e-12);
  }

  SECTION("Rayleigh-quotient sampling stays inside the bounds") {
    Rng rng(24);
    const Frame frame = testing::random_spanning_frame(4, 6, rng);
    const ComplexMatrix f = analysis_operator(frame);
    const FrameBounds b = frame_bounds(frame, tol);
    for (int trial = 0; trial < 1000; ++trial) {
      const ComplexVector v = testing::random_vector(4, rng);
      const double quad = (f * v).squaredNorm();
      const double nn = v.squaredNorm();
      REQUIRE(quad >= b.lower * nn * (1.0 - 1e-12));
      REQUIRE(quad <= b.upper * nn * (1.0 + 1e-12));
    }
    // near-equality at the extremal eigenvectors of the frame operator
    const EigenDecomposition dec = hermitian_eig(frame_operator(frame), tol);
    const ComplexVector top = dec.eigenvector(0);
    const ComplexVector bottom = dec.eigenvector(dec.eigenvalues.size() - 1);
    REQUIRE((f * top).squaredNorm() == Catch::Approx(b.upper).margin(1e-9));
    REQUIRE((f * bottom).squaredNorm() == Catch::Approx(b.lower).margin(1e-9));
  }
}

TEST_CASE("tightness") {
  const Tolerances tol;

  SECTION("the C^3 frame is tight with A = 5/3") {
    const auto a = is_tight(*example_c3_tight().frame, tol);
    REQUIRE(a.has_value());
    REQUIRE(*a == Catch::Approx(5.0 / 3.0).margin(1e-14));
  }

  SECTION("a repeated-vector list with bounds (1, 2) is not tight") {
    ComplexVector e1 = ComplexVector::Zero(2), e2 = ComplexVector::Zero(2);
    e1(0) = 1.0;
    e2(1) = 1.0;
    const Frame frame(2, {e1, e1, e2});
    REQUIRE_FALSE(is_tight(frame, tol).has_value());
    const FrameBounds b = frame_bounds(frame, tol);
    REQUIRE(b.lower == Catch::Approx(1.0));
    REQUIRE(b.upper == Catch::Approx(2.0));
  }

  SECTION("a Parseval frame of unit vectors is an orthonormal basis") {
    // columns of a random unitary: Parseval, unit norm, not canonical
    Rng rng(30);
    const ComplexMatrix u = testing::random_unitary(4, rng);
    std::vector<ComplexVector> vecs;
    for (Eigen::Index k = 0; k < 4; ++k) vecs.push_back(u.col(k));
    const Frame frame(4, std::move(vecs));
    const auto a = is_tight(frame, tol);
    REQUIRE(a.has_value());
    REQUIRE(*a == Catch::Approx(1.0).margin(1e-12));
    for (const auto& v : frame.vectors) REQUIRE(v.norm() == Catch::Approx(1.0).margin(1e-12));
    REQUIRE((cross_gram(frame) - identity(4)).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("dual frames") {
  const Tolerances tol;

  SECTION("the dual of a tight frame rescales by 1/A") {
    const Frame frame = *example_c3_tight().frame;
    const Frame dual = dual_frame(frame, tol);
    for (size_t i = 0; i < frame.vectors.size(); ++i)
      REQUIRE((dual.vectors[i] - 0.6 * frame.vectors[i]).norm() < 1e-14);
  }

  SECTION("an orthonormal basis is self-dual") {
    const Frame frame = canonical_basis_frame(3);
    const Frame dual = dual_frame(frame, tol);
    for (size_t i = 0; i < frame.vectors.size(); ++i)
      REQUIRE((dual.vectors[i] - frame.vectors[i]).norm() < 1e-14);
  }

  SECTION("dual of the dual returns the original vectors") {
    Rng rng(25);
    for (int trial = 0; trial < 10; ++trial) {
      const Frame frame = testing::random_spanning_frame(4, 7, rng);
      const Frame twice = dual_frame(dual_frame(frame, tol), tol);
      for (size_t i = 0; i < frame.vectors.size(); ++i)
        REQUIRE((twice.vectors[i] - frame.vectors[i]).norm() <
                1e-10 * std::max(1.0, frame.vectors[i].norm()));
    }
  }

  SECTION("dual bounds are the reciprocals (1/B, 1/A)") {
    Rng rng(26);
    const Frame frame = testing::random_spanning_frame(5, 8, rng);
    const FrameBounds b = frame_bounds(frame, tol);
    const FrameBounds db = frame_bounds(dual_frame(frame, tol), tol);
    REQUIRE(db.lower == Catch::Approx(1.0 / b.upper).margin(tol.eigen_match));
    REQUIRE(db.upper == Catch::Approx(1.0 / b.lower).margin(tol.eigen_match));
  }
}

TEST_CASE("reconstruction") {
  const Tolerances tol;

  SECTION("orthonormal basis reconstructs exactly") {
    Rng rng(27);
    const Frame frame = canonical_basis_frame(4);
    const ComplexVector f = testing::random_vector(4, rng);
    const auto [r1, r2] = reconstruct(frame, f, tol);
    REQUIRE((r1 - f).norm() == 0.0);
    REQUIRE((r2 - f).norm() == 0.0);
  }

  SECTION("the C^3 tight frame reconstructs e1, matching the 1/A formula") {
    const Frame frame = *example_c3_tight().frame;
    ComplexVector f = ComplexVector::Zero(3);
    f(0) = 1.0;
    const auto [r1, r2] = reconstruct(frame, f, tol);
    REQUIRE((r1 - f).norm() < 1e-12);
    REQUIRE((r2 - f).norm() < 1e-12);
    // independent tight-frame oracle: f = (1/A) sum <phi_i, f> phi_i
    ComplexVector oracle = ComplexVector::Zero(3);
    for (const auto& v : frame.vectors) oracle += v.dot(f) * v;
    oracle *= 3.0 / 5.0;
    REQUIRE((r1 - oracle).norm() < 1e-12);
  }

  SECTION("random frames reconstruct random vectors both ways") {
    Rng rng(28);
    for (int trial = 0; trial < 10; ++trial) {
      const Frame frame = testing::random_spanning_frame(4, 6, rng);
      const ComplexVector f = testing::random_vector(4, rng);
      const auto [r1, r2] = reconstruct(frame, f, tol);
      REQUIRE((r1 - f).norm() < 1e-10 * std::max(1.0, f.norm()));
      REQUIRE((r2 - f).norm() < 1e-10 * std::max(1.0, f.norm()));
    }
  }

  SECTION("length mismatches are rejected") {
    const Frame frame = canonical_basis_frame(3);
    REQUIRE_THROWS_AS(reconstruct(frame, ComplexVector::Zero(2), tol), DimensionMismatch);
  }
}

TEST_CASE("cross gram") {
  const Tolerances tol;

  SECTION("the C^3 tight frame reproduces its printed Gram matrix") {
    const CatalogEntry entry = example_c3_tight();
    REQUIRE((cross_gram(*entry.frame) - *entry.expected_cross_gram).cwiseAbs().maxCoeff() <
            1e-15);
  }

  SECTION("orthonormal basis has Gram matrix 1") {
    REQUIRE((cross_gram(canonical_basis_frame(4)) - identity(4)).norm() == 0.0);
  }

  SECTION("the duplicated-basis kernel vector d = (1, -1, 0, ...)") {
    const CatalogEntry entry = example_duplicated_basis(8);
    const ComplexMatrix gram = cross_gram(*entry.frame);
    ComplexVector d = ComplexVector::Zero(16);
    d(0) = 1.0;
    d(1) = -1.0;
    REQUIRE((gram * d).norm() < 1e-15);
    REQUIRE((synthesis_operator(*entry.frame) * d).norm() < 1e-15);
  }

  SECTION("nonzero spectra of F^dag F and F F^dag coincide") {
    Rng rng(29);
    const Frame frame = testing::random_spanning_frame(4, 7, rng);
    const RealVector small = hermitian_eig(frame_operator(frame), tol).eigenvalues;
    const RealVector large = hermitian_eig(cross_gram(frame), tol).eigenvalues;
    for (Eigen::Index i = 0; i < small.size(); ++i)
      REQUIRE(std::abs(small(i) - large(i)) < tol.eigen_match);
    for (Eigen::Index i = small.size(); i < large.size(); ++i)
      REQUIRE(std::abs(large(i)) < tol.eigen_match);
  }
}
