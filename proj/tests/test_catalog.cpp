#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "isospec/isospec.hpp"
#include "test_support.hpp"

using namespace isospec;
using isospec::testing::Rng;

TEST_CASE("every catalog entry runs green end to end") {
  const Tolerances tol;
  for (const auto& name : catalog_names()) {
    const ReportDocument doc = run_entry(catalog_entry(name), tol);
    INFO(name << "\n" << doc.to_text());
    REQUIRE(doc.pass());
  }
}

TEST_CASE("catalog registry") {
  REQUIRE(catalog_names().size() == 6);
  REQUIRE_THROWS_AS(catalog_entry("no-such-entry"), std::invalid_argument);
}

TEST_CASE("c3-tight entry details") {
  const Tolerances tol;
  const CatalogEntry entry = example_c3_tight();

  SECTION("the sigma(h1) audit flags the reference list") {
    const ReportDocument doc = run_entry(entry, tol);
    // the recomputed spectrum departs from the reference list in its last
    // entry (2 - sqrt(5), not 2 - sqrt(2)); the inclusion verdict still holds
    bool note_found = false;
    for (const auto& n : doc.notes) note_found = note_found || n.find("departs") != std::string::npos;
    REQUIRE(note_found);
    const RealVector spec1 = hermitian_eig(entry.h1, tol).eigenvalues;
    REQUIRE(spec1(4) == Catch::Approx(2.0 - std::sqrt(5.0)).margin(1e-9));
  }

  SECTION("trace pins the recomputed spectrum, not the reference list") {
    REQUIRE(entry.h1.trace().real() == Catch::Approx(14.0).margin(1e-12));
    double reference_sum = 0.0;
    for (Eigen::Index i = 0; i < entry.reference_spectrum_h1->size(); ++i)
      reference_sum += (*entry.reference_spectrum_h1)(i);
    REQUIRE(reference_sum != Catch::Approx(14.0).margin(1e-6));
  }
}

TEST_CASE("dup-basis entry for random coefficients") {
  const Tolerances tol;
  Rng rng(61);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int trial = 0; trial < 10; ++trial) {
    const double alpha = dist(rng), beta = dist(rng);
    const CatalogEntry entry = example_duplicated_basis(8, alpha, beta);
    const ReportDocument doc = run_entry(entry, tol);
    INFO(doc.to_text());
    REQUIRE(doc.pass());
    const PartnerResult result =
        build_partner(PartnerInput(entry.h1, analysis_operator(*entry.frame)), tol);
    REQUIRE((result.h2 - (alpha + beta) * identity(8)).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("multiplicity entry with random coefficients") {
  const Tolerances tol;
  Rng rng(62);
  std::uniform_real_distribution<double> dist(0.5, 3.0);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> alphas, betas;
    for (int j = 0; j < 6; ++j) {
      alphas.push_back(dist(rng) + 4.0 * j);  // spaced so levels do not collide
      betas.push_back(0.25 * dist(rng));
    }
    const CatalogEntry entry = example_multiplicity(6, alphas, betas);
    const OptionChoice choice = option_select(*entry.frame, tol);
    REQUIRE(choice.option == Option::II);

    const PartnerResult diag = build_partner(PartnerInput(entry.h1, choice.x), tol);
    for (Eigen::Index j = 0; j < 6; ++j)
      REQUIRE(std::abs(diag.h2(j, j) - alphas[static_cast<size_t>(j)]) < 1e-12);
    REQUIRE((diag.h2 - *entry.expected_h2).cwiseAbs().maxCoeff() < 1e-12);

    const PartnerResult block = build_partner(PartnerInput(*entry.h1_alt, choice.x), tol);
    const RealVector collapsed = hermitian_eig(block.h2, tol).eigenvalues;
    RealVector expected(6);
    for (Eigen::Index j = 0; j < 6; ++j)
      expected(j) = alphas[static_cast<size_t>(j)] +
                    static_cast<double>(j) * betas[static_cast<size_t>(j)];
    std::sort(expected.data(), expected.data() + 6, std::greater<double>());
    REQUIRE((collapsed - expected).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("multiplicity eigenvalue collapse is non-degenerate in h2") {
  const Tolerances tol;
  const CatalogEntry entry = example_multiplicity(6);

  SECTION("diagonal h1: eigenvalue alpha_j of multiplicity j keeps one copy") {
    const PartnerInput input(entry.h1, analysis_operator(*entry.frame));
    const PartnerResult result = build_partner(input, tol);
    const SpectralReport report = map_eigenpairs(input, result, tol);
    REQUIRE(report.spectrum_h1.size() == 21);
    REQUIRE(report.spectrum_h2.size() == 6);
    REQUIRE(report.included());
    for (const auto& cluster : report.matched) REQUIRE(cluster.multiplicity_h2 == 1);
  }

  SECTION("block h1': the zero-sum subspace of each level lies in ker(F^dag)") {
    const PartnerInput input(*entry.h1_alt, analysis_operator(*entry.frame));
    const PartnerResult result = build_partner(input, tol);
    const SpectralReport report = map_eigenpairs(input, result, tol);
    REQUIRE(report.included());
    // one kept eigenvector per level (the all-ones direction), j - 1 dropped
    REQUIRE(report.kept_eigenvectors.size() == 6);
    REQUIRE(report.dropped_eigenvectors.size() == 15);
  }
}

TEST_CASE("orthonormal entry round trip") {
  const Tolerances tol;
  const CatalogEntry entry = example_orthonormal(6);
  const Frame& frame = *entry.frame;
  const ComplexMatrix f = analysis_operator(frame);

  // F is unitary both ways
  REQUIRE((f.adjoint() * f - identity(6)).norm() < 1e-12);
  REQUIRE((f * f.adjoint() - identity(6)).norm() < 1e-12);

  // Option I partner acts coordinate-wise
  const OptionChoice choice = option_select(frame, tol);
  REQUIRE(choice.option == Option::I);
  const PartnerResult result = build_partner(PartnerInput(entry.h1, choice.x), tol);
  Rng rng(63);
  const ComplexVector c = testing::random_vector(6, rng);
  const ComplexVector hc = result.h2 * c;
  for (Eigen::Index j = 0; j < 6; ++j)
    REQUIRE(std::abs(hc(j) - entry.h1(j, j) * c(j)) < 1e-12);

  // Option II round-trip: h1 = F h2 F^dag
  const ComplexMatrix back = build_reverse_partner(result.h2, f.adjoint(), tol);
  REQUIRE((back - entry.h1).norm() < 1e-10);
}

TEST_CASE("proj-partition and composed entries agree") {
  const Tolerances tol;
  const std::vector<std::vector<Eigen::Index>> partition = {{0}, {1, 2}, {3, 4, 5}};
  const CatalogEntry plain = example_projection_partition(6, partition);
  const CatalogEntry composed = example_composed(6, partition);
  REQUIRE((*plain.expected_h2 - *composed.expected_h2).cwiseAbs().maxCoeff() < 1e-14);
  const PartnerResult r1 = gframe_partner(*plain.gframe, plain.h1_blocks, tol);
  const PartnerResult r2 = gframe_partner(*composed.gframe, composed.h1_blocks, tol);
  REQUIRE((r1.h2 - r2.h2).cwiseAbs().maxCoeff() < 1e-10);
}
