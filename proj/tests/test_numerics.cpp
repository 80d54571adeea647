#include <catch2/catch_amalgamated.hpp>

#include "isospec/isospec.hpp"
#include "test_support.hpp"

using namespace isospec;
using isospec::testing::Rng;

namespace {

// Inner-product oracle, written out entrywise so it does not share a code
// path with the adjoint under test.
Complex inner_oracle(const ComplexVector& f, const ComplexVector& g) {
  Complex s = 0.0;
  for (Eigen::Index i = 0; i < f.size(); ++i) s += std::conj(f(i)) * g(i);
  return s;
}

}  // namespace

TEST_CASE("adjoint") {
  SECTION("real diagonal matrices are self-adjoint") {
    ComplexMatrix d = ComplexMatrix::Zero(3, 3);
    d(0, 0) = 2.0;
    d(1, 1) = -1.0;
    d(2, 2) = 0.5;
    REQUIRE(adjoint(d) == d);
  }

  SECTION("analysis and synthesis operators of the C^3 tight frame") {
    const Frame frame = *example_c3_tight().frame;
    const double s3 = std::sqrt(3.0), s23 = std::sqrt(2.0 / 3.0), s56 = std::sqrt(5.0 / 6.0),
                 s6 = std::sqrt(6.0);
    ComplexMatrix f_expected(5, 3);
    f_expected << 0, 1 / s3, s23,
        0, -1 / s3, s23,
        0, 1, 0,
        s56, 0, 1 / s6,
        -s56, 0, 1 / s6;
    REQUIRE((analysis_operator(frame) - f_expected).cwiseAbs().maxCoeff() < 1e-15);
    REQUIRE((adjoint(f_expected) - synthesis_operator(frame)).cwiseAbs().maxCoeff() < 1e-15);
  }

  SECTION("adjoint is the adjoint for the inner product") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexMatrix m = testing::random_matrix(5, 4, rng);
      const ComplexVector f = testing::random_vector(4, rng);
      const ComplexVector g = testing::random_vector(5, rng);
      const Complex lhs = inner_oracle(m * f, g);
      const Complex rhs = inner_oracle(f, adjoint(m) * g);
      REQUIRE(std::abs(lhs - rhs) < 1e-12);
    }
  }

  SECTION("involution holds bitwise") {
    Rng rng(12);
    const ComplexMatrix m = testing::random_matrix(6, 3, rng);
    REQUIRE(adjoint(adjoint(m)) == m);
  }
}

TEST_CASE("hermitian_eig") {
  const Tolerances tol;

  SECTION("diagonal case") {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = 2.0;
    const EigenDecomposition dec = hermitian_eig(m, tol);
    REQUIRE(dec.eigenvalues(0) == Catch::Approx(2.0));
    REQUIRE(dec.eigenvalues(1) == Catch::Approx(1.0));
  }

  SECTION("spectrum of F F^dag for the C^3 tight frame") {
    const ComplexMatrix gram = cross_gram(*example_c3_tight().frame);
    const EigenDecomposition dec = hermitian_eig(gram, tol);
    RealVector expected(5);
    expected << 5.0 / 3, 5.0 / 3, 5.0 / 3, 0, 0;
    REQUIRE((dec.eigenvalues - expected).cwiseAbs().maxCoeff() < 1e-10);
  }

  SECTION("reconstruction and orthonormality") {
    Rng rng(13);
    for (Eigen::Index n : {2, 8, 33, 64}) {
      const ComplexMatrix m = testing::random_hermitian(n, rng);
      const EigenDecomposition dec = hermitian_eig(m, tol);
      REQUIRE((dec.reconstruct() - m).norm() <= 1e-12 * m.norm());
      REQUIRE((dec.eigenvectors.adjoint() * dec.eigenvectors - identity(n)).norm() < 1e-12);
      for (Eigen::Index k = 0; k + 1 < n; ++k)
        REQUIRE(dec.eigenvalues(k) >= dec.eigenvalues(k + 1));
    }
  }

  SECTION("rejects non-Hermitian input") {
    Rng rng(14);
    const ComplexMatrix m = testing::random_matrix(4, 4, rng);
    REQUIRE_THROWS_AS(hermitian_eig(m, tol), NotHermitian);
    REQUIRE_THROWS_AS(hermitian_eig(testing::random_matrix(3, 4, rng), tol), DimensionMismatch);
  }
}

TEST_CASE("strict_inverse") {
  const Tolerances tol;

  SECTION("identity") {
    REQUIRE((strict_inverse(identity(4), tol) - identity(4)).norm() < 1e-14);
  }

  SECTION("scalar operator (5/3)*1") {
    const ComplexMatrix m = (5.0 / 3.0) * identity(3);
    const ComplexMatrix inv = strict_inverse(m, tol);
    REQUIRE((inv - 0.6 * identity(3)).cwiseAbs().maxCoeff() < 1e-15);
  }

  SECTION("the singular Gram matrix of the C^3 tight frame is rejected") {
    REQUIRE_THROWS_AS(strict_inverse(cross_gram(*example_c3_tight().frame), tol), NotInvertible);
  }

  SECTION("two-sided inverse, Hermitian result") {
    Rng rng(15);
    for (int trial = 0; trial < 10; ++trial) {
      const ComplexMatrix x = testing::random_matrix(6, 6, rng);
      const ComplexMatrix m = x * x.adjoint() + 0.1 * identity(6);
      const ComplexMatrix inv = strict_inverse(m, tol);
      REQUIRE((m * inv - identity(6)).norm() < 1e-10);
      REQUIRE((inv * m - identity(6)).norm() < 1e-10);
      REQUIRE(hermiticity_residual(inv) < 1e-14);
    }
  }
}

TEST_CASE("commutator") {
  SECTION("self-commutator vanishes") {
    Rng rng(16);
    const ComplexMatrix a = testing::random_matrix(5, 5, rng);
    REQUIRE(commutator(a, a).norm() == 0.0);
  }

  SECTION("h1 of the C^3 scenario commutes with F F^dag") {
    const CatalogEntry entry = example_c3_tight();
    const ComplexMatrix gram = cross_gram(*entry.frame);
    REQUIRE(commutator(entry.h1, gram).norm() < 1e-10);
  }

  SECTION("antisymmetry is bitwise") {
    Rng rng(17);
    const ComplexMatrix a = testing::random_matrix(5, 5, rng);
    const ComplexMatrix b = testing::random_matrix(5, 5, rng);
    REQUIRE(commutator(a, b) == ComplexMatrix(-commutator(b, a)));
  }

  SECTION("rejects shape mismatches") {
    REQUIRE_THROWS_AS(commutator(identity(2), identity(3)), DimensionMismatch);
  }
}

TEST_CASE("singular_values") {
  SECTION("identity") {
    const RealVector sv = singular_values(identity(4));
    REQUIRE(sv.size() == 4);
    REQUIRE((sv - RealVector::Ones(4)).cwiseAbs().maxCoeff() < 1e-15);
  }

  SECTION("the C^3 tight frame's analysis operator") {
    const RealVector sv = singular_values(analysis_operator(*example_c3_tight().frame));
    REQUIRE(sv.size() == 3);
    for (Eigen::Index i = 0; i < 3; ++i)
      REQUIRE(sv(i) == Catch::Approx(std::sqrt(5.0 / 3.0)).margin(1e-12));
  }

  SECTION("squares equal the eigenvalues of M^dag M") {
    Rng rng(18);
    const ComplexMatrix m = testing::random_matrix(7, 4, rng);
    const RealVector sv = singular_values(m);
    const RealVector eigs = hermitian_eig(ComplexMatrix(m.adjoint() * m)).eigenvalues;
    for (Eigen::Index i = 0; i < 4; ++i)
      REQUIRE(std::abs(sv(i) * sv(i) - eigs(i)) < 1e-10);
  }

  SECTION("nonzero singular values of M and adjoint(M) coincide") {
    Rng rng(19);
    const ComplexMatrix m = testing::random_matrix(6, 3, rng);
    const RealVector a = singular_values(m);
    const RealVector b = singular_values(adjoint(m));
    // adjoint(M) has extra exact-zero singular values
    for (Eigen::Index i = 0; i < a.size(); ++i) REQUIRE(std::abs(a(i) - b(i)) < 1e-10);
    for (Eigen::Index i = a.size(); i < b.size(); ++i) REQUIRE(std::abs(b(i)) < 1e-10);
  }

  SECTION("eigenvalues of M^dag M and M M^dag agree on their nonzero parts") {
    Rng rng(20);
    const ComplexMatrix m = testing::random_matrix(8, 5, rng);
    const RealVector small = hermitian_eig(ComplexMatrix(m.adjoint() * m)).eigenvalues;
    const RealVector large = hermitian_eig(ComplexMatrix(m * m.adjoint())).eigenvalues;
    const Tolerances tol;
    for (Eigen::Index i = 0; i < small.size(); ++i)
      REQUIRE(std::abs(small(i) - large(i)) < tol.eigen_match);
    for (Eigen::Index i = small.size(); i < large.size(); ++i)
      REQUIRE(std::abs(large(i)) < tol.eigen_match);
  }
}

TEST_CASE("tolerances validation") {
  Tolerances tol;
  REQUIRE_NOTHROW(tol.validate());
  tol.eigen_match = 0.0;
  REQUIRE_THROWS_AS(tol.validate(), std::invalid_argument);
  tol.eigen_match = 1.5;
  REQUIRE_THROWS_AS(tol.validate(), std::invalid_argument);
}
