#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "isospec/catalog.hpp"
#include "isospec/serialize.hpp"

namespace isospec {

struct Verdict {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Everything one CLI invocation reports: the inputs echo, the numeric
/// artifacts, and pass/fail verdicts that are derivable from the recorded
/// numbers and the tolerances alone.
struct ReportDocument {
  std::string scenario;
  Tolerances tol;
  json inputs = json::object();
  json results = json::object();
  std::vector<Verdict> verdicts;
  std::vector<std::string> notes;

  bool pass() const {
    for (const auto& v : verdicts)
      if (!v.pass) return false;
    return true;
  }

  void add_verdict(std::string name, bool ok, std::string detail) {
    verdicts.push_back({std::move(name), ok, std::move(detail)});
  }

  json to_json() const {
    json jverdicts = json::array();
    for (const auto& v : verdicts)
      jverdicts.push_back(json{{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
    return json{{"scenario", scenario}, {"tolerances", isospec::to_json(tol)},
                {"inputs", inputs},     {"results", results},
                {"verdicts", jverdicts}, {"notes", notes},
                {"pass", pass()}};
  }

  std::string to_text() const {
    std::ostringstream out;
    out.precision(17);
    out << "scenario: " << scenario << "\n";
    out << "tolerances: hermiticity=" << tol.hermiticity << " commutator=" << tol.commutator
        << " invertibility=" << tol.invertibility << " eigen_match=" << tol.eigen_match
        << " zero_vector=" << tol.zero_vector << "\n";
    if (!inputs.empty()) out << "inputs: " << inputs.dump() << "\n";
    if (!results.empty()) out << "results: " << results.dump() << "\n";
    for (const auto& n : notes) out << "note: " << n << "\n";
    for (const auto& v : verdicts)
      out << (v.pass ? "PASS " : "FAIL ") << v.name << (v.detail.empty() ? "" : " — " + v.detail)
          << "\n";
    out << "result: " << (pass() ? "PASS" : "FAIL") << "\n";
    return out.str();
  }
};

inline json to_json(const FrameBounds& b) {
  return json{{"lower", b.lower}, {"upper", b.upper}};
}

inline json to_json(const PartnerResult& r) {
  return json{{"h2", to_json(r.h2)},
              {"residual_alpha", r.residual_alpha},
              {"residual_beta", r.residual_beta},
              {"residual_beta_strong", r.residual_beta_strong},
              {"residual_h2n2", r.residual_h2n2}};
}

inline json to_json(const SpectralReport& r) {
  json matched = json::array();
  for (const auto& c : r.matched)
    matched.push_back(json{{"eigenvalue", c.eigenvalue},
                           {"multiplicity_h1", c.multiplicity_h1},
                           {"multiplicity_h2", c.multiplicity_h2}});
  json kept = json::array();
  for (const auto& k : r.kept_eigenvectors)
    kept.push_back(
        json{{"eigenvalue", k.eigenvalue}, {"index", k.index}, {"image_norm", k.image_norm}});
  json dropped = json::array();
  for (const auto& d : r.dropped_eigenvectors)
    dropped.push_back(json{{"eigenvalue", d.eigenvalue}, {"index", d.index}});
  return json{{"spectrum_h1", to_json(r.spectrum_h1)},
              {"spectrum_h2", to_json(r.spectrum_h2)},
              {"matched", matched},
              {"unmatched_h2", r.unmatched_h2},
              {"kept_eigenvectors", kept},
              {"dropped_eigenvectors", dropped},
              {"included", r.included()}};
}

namespace detail {

inline double max_abs_deviation(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("max_abs_deviation: shapes differ");
  return (a - b).cwiseAbs().maxCoeff();
}

inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// Distance of `v` from the complex line spanned by `direction`, relative to
// ||v||. Zero when the two are parallel up to a complex scalar.
inline double direction_mismatch(const ComplexVector& v, const ComplexVector& direction) {
  const double vn = v.norm(), dn = direction.norm();
  if (vn == 0.0 || dn == 0.0) return vn == 0.0 && dn == 0.0 ? 0.0 : 1.0;
  const Complex coeff = direction.dot(v) / Complex(dn * dn, 0.0);
  return (v - coeff * direction).norm() / vn;
}

inline void check_partner_artifacts(ReportDocument& doc, const CatalogEntry& entry,
                                    const PartnerInput& input, const PartnerResult& partner,
                                    const Tolerances& tol) {
  const ArtifactTolerances& at = entry.artifact_tol;
  doc.add_verdict("partner_residuals", partner.passes(tol),
                  "alpha=" + fmt(partner.residual_alpha) + " beta=" + fmt(partner.residual_beta) +
                      " h2n2=" + fmt(partner.residual_h2n2));
  if (entry.expected_h2) {
    const double dev = max_abs_deviation(partner.h2, *entry.expected_h2);
    doc.add_verdict("h2_matches_expected", dev <= at.h2,
                    "max deviation " + fmt(dev) + " (tol " + fmt(at.h2) + ")");
  }

  const SpectralReport sr = map_eigenpairs(input, partner, tol);
  doc.results["spectral"] = to_json(sr);
  doc.add_verdict("spectral_inclusion", sr.included(),
                  sr.included() ? "every eigenvalue of h2 matched into sigma(h1)"
                                : std::to_string(sr.unmatched_h2.size()) + " unmatched");

  if (entry.expected_spectrum_h2) {
    bool ok = sr.spectrum_h2.size() == entry.expected_spectrum_h2->size();
    double dev = 0.0;
    if (ok) dev = (sr.spectrum_h2 - *entry.expected_spectrum_h2).cwiseAbs().maxCoeff();
    ok = ok && dev <= at.spectrum;
    doc.add_verdict("spectrum_h2_matches_expected", ok,
                    "max deviation " + fmt(dev) + " (tol " + fmt(at.spectrum) + ")");
  }

  if (!entry.expected_zero_image_indices.empty() || !entry.expected_image_directions.empty()) {
    const EigenDecomposition eig1 = hermitian_eig(input.h1, tol);
    bool zeros_ok = true;
    for (Eigen::Index idx : entry.expected_zero_image_indices) {
      bool found = false;
      for (const auto& d : sr.dropped_eigenvectors) found = found || d.index == idx;
      zeros_ok = zeros_ok && found;
    }
    if (!entry.expected_zero_image_indices.empty())
      doc.add_verdict("kernel_images_dropped", zeros_ok,
                      std::to_string(entry.expected_zero_image_indices.size()) +
                          " eigenvectors expected in ker(X^dag)");
    for (const auto& [idx, direction] : entry.expected_image_directions) {
      const ComplexVector image = input.x.adjoint() * eig1.eigenvector(idx);
      const double mismatch = direction_mismatch(image, direction);
      doc.add_verdict("image_direction_" + std::to_string(idx), mismatch <= at.image,
                      "relative off-span component " + fmt(mismatch));
    }
  }

  if (entry.reference_spectrum_h1) {
    const RealVector recomputed = sr.spectrum_h1;
    const RealVector& reference = *entry.reference_spectrum_h1;
    doc.results["spectrum_h1_recomputed"] = to_json(recomputed);
    doc.results["spectrum_h1_reference"] = to_json(reference);
    if (recomputed.size() == reference.size()) {
      for (Eigen::Index i = 0; i < recomputed.size(); ++i)
        if (std::abs(recomputed(i) - reference(i)) > tol.eigen_match)
          doc.notes.push_back("recomputed sigma(h1)[" + std::to_string(i) + "] = " +
                              fmt(recomputed(i)) + " departs from the reference value " +
                              fmt(reference(i)));
    }
    // The audited requirement is inclusion, not the reference list itself.
    const auto match = match_descending(recomputed, sr.spectrum_h2, at.spectrum);
    bool contained = true;
    for (Eigen::Index j : match) contained = contained && j >= 0;
    doc.add_verdict("spectrum_h1_contains_spectrum_h2", contained,
                    "greedy multiset matching at tol " + fmt(at.spectrum));
  }
}

inline void check_eigenpairs(ReportDocument& doc, const CatalogEntry& entry,
                             const ComplexMatrix& x) {
  const ArtifactTolerances& at = entry.artifact_tol;
  const double x_norm = frobenius(x);
  int i = 0;
  for (const auto& check : entry.eigenpair_checks) {
    const ComplexMatrix& h = check.against_alt_h1 ? *entry.h1_alt : entry.h1;
    const double eig_res = (h * check.phi1 - check.eigenvalue * check.phi1).norm();
    bool ok = eig_res <= at.eigenpair * check.phi1.norm();
    const ComplexVector image = x.adjoint() * check.phi1;
    std::string detail = check.note;
    if (check.image_is_zero) {
      ok = ok && image.norm() <= at.image * x_norm * check.phi1.norm();
      detail += "; image norm " + fmt(image.norm());
    } else {
      const double dev = (image - check.expected_image).cwiseAbs().maxCoeff();
      ok = ok && dev <= at.eigenpair * std::max(1.0, check.expected_image.norm());
      detail += "; image deviation " + fmt(dev);
    }
    doc.add_verdict("eigenpair_" + std::to_string(i++), ok, detail);
  }
}

}  // namespace detail

/// Runs a catalog entry end to end and fills a report with every artifact
/// comparison the entry carries.
inline ReportDocument run_entry(const CatalogEntry& entry, const Tolerances& tol = {}) {
  ReportDocument doc;
  doc.scenario = entry.name;
  doc.tol = tol;
  doc.inputs["title"] = entry.title;
  doc.notes = entry.notes;

  const ArtifactTolerances& at = entry.artifact_tol;
  if (entry.frame) {
    const Frame& frame = *entry.frame;
    doc.inputs["frame"] = json{{"dim", frame.dim}, {"vector_count", frame.size()}};

    const FrameBounds bounds = frame_bounds(frame, tol);
    doc.results["frame_bounds"] = to_json(bounds);
    const auto tight = is_tight(frame, tol);
    if (tight) doc.results["tight_bound"] = *tight;
    if (entry.expected_tight_bound) {
      const bool ok = tight && std::abs(*tight - *entry.expected_tight_bound) <= at.bounds &&
                      std::abs(bounds.lower - *entry.expected_tight_bound) <= at.bounds &&
                      std::abs(bounds.upper - *entry.expected_tight_bound) <= at.bounds;
      doc.add_verdict("tight_bound", ok,
                      tight ? "A = " + detail::fmt(*tight) : "frame is not tight");
    }
    if (entry.expected_cross_gram) {
      const double dev = detail::max_abs_deviation(cross_gram(frame), *entry.expected_cross_gram);
      doc.add_verdict("cross_gram_matches_expected", dev <= at.cross_gram,
                      "max deviation " + detail::fmt(dev) + " (tol " + detail::fmt(at.cross_gram) +
                          ")");
    }

    const OptionChoice choice = option_select(frame, tol);
    doc.results["option"] = choice.name();
    if (entry.expected_option)
      doc.add_verdict("option_selected", choice.option == *entry.expected_option,
                      std::string("selected Option ") + choice.name());

    const PartnerInput input(entry.h1, choice.x);
    const PartnerResult partner = build_partner(input, tol);
    doc.results["partner"] = to_json(partner);
    detail::check_partner_artifacts(doc, entry, input, partner, tol);
    detail::check_eigenpairs(doc, entry, choice.x);

    if (entry.h1_alt && entry.expected_h2_alt) {
      const PartnerInput input_alt(*entry.h1_alt, choice.x);
      const PartnerResult partner_alt = build_partner(input_alt, tol);
      doc.results["partner_alt"] = to_json(partner_alt);
      const double dev = detail::max_abs_deviation(partner_alt.h2, *entry.expected_h2_alt);
      doc.add_verdict("h2_alt_matches_expected", dev <= at.h2_alt,
                      "max deviation " + detail::fmt(dev) + " (tol " + detail::fmt(at.h2_alt) +
                          ")");
      const SpectralReport sr_alt = map_eigenpairs(input_alt, partner_alt, tol);
      doc.add_verdict("spectral_inclusion_alt", sr_alt.included(), "");
    }
  } else if (entry.gframe) {
    const GFrame& g = *entry.gframe;
    doc.inputs["gframe"] =
        json{{"dim_h", g.dim_h}, {"dim_ht", g.dim_ht}, {"member_count", g.size()}};

    const FrameBounds bounds = g_frame_bounds(g, tol);
    doc.results["gframe_bounds"] = to_json(bounds);
    if (entry.expected_tight_bound) {
      const auto tight = g_is_tight(g, tol);
      const bool ok = tight && std::abs(*tight - *entry.expected_tight_bound) <= at.bounds;
      doc.add_verdict("tight_bound", ok,
                      tight ? "A = " + detail::fmt(*tight) : "g-frame is not tight");
    }

    const PartnerResult partner = gframe_partner(g, entry.h1_blocks, tol);
    doc.results["partner"] = to_json(partner);
    const PartnerInput input(entry.h1, stacked_analysis_matrix(g));
    detail::check_partner_artifacts(doc, entry, input, partner, tol);
    detail::check_eigenpairs(doc, entry, stacked_analysis_matrix(g));
  }
  return doc;
}

}  // namespace isospec
