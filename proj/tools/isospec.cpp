// Command-line front end: loads frames / operators from JSON files, runs the
// partner constructions and verification suites, and emits text or JSON
// reports. Exit codes: 0 all verdicts pass, 1 a mathematical verdict failed,
// 2 I/O, parse or usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "isospec/isospec.hpp"

namespace {

using namespace isospec;

struct Output {
  std::string format = "text";
  std::string out_path;

  void emit(const json& doc, const std::string& text) const {
    const std::string payload = format == "json" ? dump17(doc) : text;
    if (out_path.empty()) {
      std::cout << payload;
    } else {
      std::ofstream out(out_path);
      if (!out) throw IoError("cannot open output file: " + out_path);
      out << payload;
    }
  }

  void emit_report(const ReportDocument& doc) const { emit(doc.to_json(), doc.to_text()); }

  void emit_error(const std::string& kind, const std::string& message) const {
    json doc{{"error", {{"kind", kind}, {"message", message}}}};
    emit(doc, "error: " + kind + ": " + message + "\n");
  }
};

int exit_code_for(const Error& err) {
  const std::string kind = err.kind();
  return (kind == "IoError" || kind == "ParseError" || kind == "ShapeError") ? 2 : 1;
}

ReportDocument make_doc(const std::string& scenario, const Tolerances& tol) {
  ReportDocument doc;
  doc.scenario = scenario;
  doc.tol = tol;
  return doc;
}

void add_residual_verdicts(ReportDocument& doc, const PartnerResult& partner) {
  doc.add_verdict("h2_self_adjoint", partner.residual_alpha <= doc.tol.hermiticity,
                  "residual_alpha = " + detail::fmt(partner.residual_alpha));
  doc.add_verdict("weak_intertwining", partner.residual_beta <= doc.tol.commutator,
                  "residual_beta = " + detail::fmt(partner.residual_beta));
  doc.add_verdict("h2_commutes_with_n2", partner.residual_h2n2 <= doc.tol.commutator,
                  "residual_h2n2 = " + detail::fmt(partner.residual_h2n2));
}

ReportDocument run_frame_bounds(const std::string& path, const Tolerances& tol) {
  ReportDocument doc = make_doc("frame bounds", tol);
  const Frame frame = parse_frame_file(path);
  doc.inputs = json{{"frame", path}, {"dim", frame.dim}, {"vector_count", frame.size()}};
  const FrameBounds bounds = frame_bounds(frame, tol);
  doc.results["frame_bounds"] = to_json(bounds);
  doc.add_verdict("is_frame", true,
                  "A = " + detail::fmt(bounds.lower) + ", B = " + detail::fmt(bounds.upper));
  return doc;
}

ReportDocument run_frame_tight(const std::string& path, const Tolerances& tol) {
  ReportDocument doc = make_doc("frame tight", tol);
  const Frame frame = parse_frame_file(path);
  doc.inputs = json{{"frame", path}, {"dim", frame.dim}, {"vector_count", frame.size()}};
  doc.results["frame_bounds"] = to_json(frame_bounds(frame, tol));
  const auto tight = is_tight(frame, tol);
  if (tight) doc.results["tight_bound"] = *tight;
  doc.add_verdict("tight", tight.has_value(),
                  tight ? "A = " + detail::fmt(*tight) : "frame bounds differ");
  return doc;
}

ReportDocument run_frame_dual(const std::string& path, const Tolerances& tol) {
  ReportDocument doc = make_doc("frame dual", tol);
  const Frame frame = parse_frame_file(path);
  doc.inputs = json{{"frame", path}, {"dim", frame.dim}, {"vector_count", frame.size()}};
  const FrameBounds bounds = frame_bounds(frame, tol);
  doc.results["frame_bounds"] = to_json(bounds);
  const Frame dual = dual_frame(frame, tol);
  doc.results["dual"] = to_json(dual);
  const FrameBounds dual_bounds = frame_bounds(dual, tol);
  doc.results["dual_bounds"] = to_json(dual_bounds);
  const bool reciprocal = std::abs(dual_bounds.lower - 1.0 / bounds.upper) <=
                              tol.eigen_match * dual_bounds.upper &&
                          std::abs(dual_bounds.upper - 1.0 / bounds.lower) <=
                              tol.eigen_match * dual_bounds.upper;
  doc.add_verdict("dual_bounds_reciprocal", reciprocal,
                  "dual is a (1/B, 1/A)-frame within eigen_match");
  return doc;
}

ReportDocument run_partner_build(const std::string& h1_path, const std::string& x_path,
                                 const Tolerances& tol, bool verify) {
  ReportDocument doc = make_doc(verify ? "partner verify" : "partner build", tol);
  const PartnerInput input(parse_matrix_file(h1_path), parse_matrix_file(x_path));
  doc.inputs = json{{"h1", h1_path},
                    {"x", x_path},
                    {"dim_h1", input.dim_h1()},
                    {"dim_h2", input.dim_h2()}};
  const PartnerResult partner = build_partner(input, tol);
  doc.results["partner"] = to_json(partner);
  add_residual_verdicts(doc, partner);
  if (verify) {
    const SpectralReport sr = map_eigenpairs(input, partner, tol);
    doc.results["spectral"] = to_json(sr);
    doc.add_verdict("spectral_inclusion", sr.included(),
                    sr.included() ? "sigma(h2) is contained in sigma(h1)"
                                  : std::to_string(sr.unmatched_h2.size()) + " unmatched");
    doc.add_verdict("kept_images_satisfy_eigen_equation", true,
                    std::to_string(sr.kept_eigenvectors.size()) + " kept, " +
                        std::to_string(sr.dropped_eigenvectors.size()) + " dropped");
  }
  return doc;
}

ReportDocument run_partner_reverse(const std::string& h2_path, const std::string& x_path,
                                   const Tolerances& tol) {
  ReportDocument doc = make_doc("partner reverse", tol);
  const ComplexMatrix h2 = parse_matrix_file(h2_path);
  const ComplexMatrix x = parse_matrix_file(x_path);
  doc.inputs = json{{"h2", h2_path}, {"x", x_path}};
  const ComplexMatrix h1 = build_reverse_partner(h2, x, tol);
  doc.results["h1"] = to_json(h1);

  doc.add_verdict("h1_self_adjoint", hermiticity_residual(h1) <= tol.hermiticity,
                  "residual = " + detail::fmt(hermiticity_residual(h1)));
  const double scale = frobenius(x) * frobenius(x) * std::max(frobenius(h1), frobenius(h2));
  const double reverse_residual =
      scale > 0.0
          ? frobenius(ComplexMatrix(x * (x.adjoint() * h1 - h2 * x.adjoint()))) / scale
          : 0.0;
  doc.add_verdict("reverse_weak_intertwining", reverse_residual <= tol.commutator,
                  "residual = " + detail::fmt(reverse_residual));
  const double comm = commutator_residual(h1, ComplexMatrix(x * x.adjoint()));
  doc.add_verdict("h1_commutes_with_n1", comm <= tol.commutator,
                  "residual = " + detail::fmt(comm));
  return doc;
}

ReportDocument run_gframe_bounds(const std::string& path, const Tolerances& tol) {
  ReportDocument doc = make_doc("gframe bounds", tol);
  const GFrame g = parse_gframe_file(path);
  doc.inputs =
      json{{"gframe", path}, {"dim_h", g.dim_h}, {"dim_ht", g.dim_ht}, {"member_count", g.size()}};
  const FrameBounds bounds = g_frame_bounds(g, tol);
  doc.results["gframe_bounds"] = to_json(bounds);
  doc.add_verdict("is_gframe", true,
                  "A = " + detail::fmt(bounds.lower) + ", B = " + detail::fmt(bounds.upper));
  return doc;
}

ReportDocument run_gframe_dual(const std::string& path, const Tolerances& tol) {
  ReportDocument doc = make_doc("gframe dual", tol);
  const GFrame g = parse_gframe_file(path);
  doc.inputs =
      json{{"gframe", path}, {"dim_h", g.dim_h}, {"dim_ht", g.dim_ht}, {"member_count", g.size()}};
  const FrameBounds bounds = g_frame_bounds(g, tol);
  doc.results["gframe_bounds"] = to_json(bounds);
  const GFrame dual = g_dual(g, tol);
  doc.results["dual"] = to_json(dual);
  const FrameBounds dual_bounds = g_frame_bounds(dual, tol);
  doc.results["dual_bounds"] = to_json(dual_bounds);
  const bool reciprocal = std::abs(dual_bounds.lower - 1.0 / bounds.upper) <=
                              tol.eigen_match * dual_bounds.upper &&
                          std::abs(dual_bounds.upper - 1.0 / bounds.lower) <=
                              tol.eigen_match * dual_bounds.upper;
  doc.add_verdict("dual_bounds_reciprocal", reciprocal,
                  "dual is a (1/B, 1/A) g-frame within eigen_match");
  return doc;
}

ReportDocument run_gframe_partner(const std::string& gframe_path, const std::string& blocks_path,
                                  const Tolerances& tol) {
  ReportDocument doc = make_doc("gframe partner", tol);
  const GFrame g = parse_gframe_file(gframe_path);
  const auto blocks = parse_blocks_file(blocks_path);
  doc.inputs = json{{"gframe", gframe_path},
                    {"blocks", blocks_path},
                    {"dim_h", g.dim_h},
                    {"dim_ht", g.dim_ht},
                    {"member_count", g.size()}};
  const PartnerResult partner = gframe_partner(g, blocks, tol);
  doc.results["partner"] = to_json(partner);
  add_residual_verdicts(doc, partner);
  const PartnerInput input(block_diagonal_h1(g, blocks), stacked_analysis_matrix(g));
  const SpectralReport sr = map_eigenpairs(input, partner, tol);
  doc.results["spectral"] = to_json(sr);
  doc.add_verdict("spectral_inclusion", sr.included(), "");
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"almost-isospectral partner construction from frames and g-frames"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Tolerances tol;
  Output output;
  app.add_option("--tol-eigen", tol.eigen_match, "eigenvalue matching tolerance")
      ->envname("ISOSPEC_TOL_EIGEN");
  app.add_option("--tol-comm", tol.commutator, "commutator residual tolerance")
      ->envname("ISOSPEC_TOL_COMM");
  app.add_option("--tol-inv", tol.invertibility, "relative invertibility threshold")
      ->envname("ISOSPEC_TOL_INV");
  app.add_option("--tol-zero", tol.zero_vector, "zero-image norm threshold")
      ->envname("ISOSPEC_TOL_ZERO");
  app.add_option("--format", output.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--out", output.out_path, "write the report to a file instead of stdout");

  std::string frame_path, gframe_path, h1_path, h2_path, x_path, blocks_path, entry_name;

  CLI::App* frame = app.add_subcommand("frame", "classical frame operations");
  frame->require_subcommand(1);
  frame->add_subcommand("bounds", "optimal frame bounds")
      ->add_option("frame", frame_path, "frame JSON file")->required();
  frame->add_subcommand("dual", "canonical dual frame")
      ->add_option("frame", frame_path, "frame JSON file")->required();
  frame->add_subcommand("tight", "tightness test")
      ->add_option("frame", frame_path, "frame JSON file")->required();

  CLI::App* partner = app.add_subcommand("partner", "partner operator construction");
  partner->require_subcommand(1);
  CLI::App* pbuild = partner->add_subcommand("build", "construct h2 from h1 and X");
  pbuild->add_option("--h1", h1_path, "h1 matrix JSON file")->required();
  pbuild->add_option("--x", x_path, "X matrix JSON file")->required();
  CLI::App* pverify = partner->add_subcommand("verify", "construct h2 and verify eigenpair maps");
  pverify->add_option("--h1", h1_path, "h1 matrix JSON file")->required();
  pverify->add_option("--x", x_path, "X matrix JSON file")->required();
  CLI::App* preverse = partner->add_subcommand("reverse", "recover h1 from h2 and X");
  preverse->add_option("--h2", h2_path, "h2 matrix JSON file")->required();
  preverse->add_option("--x", x_path, "X matrix JSON file")->required();

  CLI::App* gframe = app.add_subcommand("gframe", "operator-valued frame operations");
  gframe->require_subcommand(1);
  gframe->add_subcommand("bounds", "g-frame bounds")
      ->add_option("gframe", gframe_path, "g-frame JSON file")->required();
  gframe->add_subcommand("dual", "canonical dual g-frame")
      ->add_option("gframe", gframe_path, "g-frame JSON file")->required();
  CLI::App* gpartner = gframe->add_subcommand("partner", "partner of a block-diagonal h1");
  gpartner->add_option("--gframe", gframe_path, "g-frame JSON file")->required();
  gpartner->add_option("--blocks", blocks_path, "h1 blocks JSON file")->required();

  CLI::App* catalog = app.add_subcommand("catalog", "built-in worked scenarios");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "list scenario names");
  catalog->add_subcommand("run", "run a named scenario")
      ->add_option("name", entry_name, "scenario name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    tol.validate();

    if (catalog->get_subcommand("list")->parsed()) {
      json names = json::array();
      std::string text;
      for (const auto& name : catalog_names()) {
        names.push_back(name);
        text += name + "\n";
      }
      output.emit(json{{"entries", names}}, text);
      return 0;
    }

    ReportDocument doc;
    if (frame->parsed()) {
      if (frame->get_subcommand("bounds")->parsed()) doc = run_frame_bounds(frame_path, tol);
      else if (frame->get_subcommand("dual")->parsed()) doc = run_frame_dual(frame_path, tol);
      else doc = run_frame_tight(frame_path, tol);
    } else if (partner->parsed()) {
      if (pbuild->parsed()) doc = run_partner_build(h1_path, x_path, tol, false);
      else if (pverify->parsed()) doc = run_partner_build(h1_path, x_path, tol, true);
      else doc = run_partner_reverse(h2_path, x_path, tol);
    } else if (gframe->parsed()) {
      if (gframe->get_subcommand("bounds")->parsed()) doc = run_gframe_bounds(gframe_path, tol);
      else if (gframe->get_subcommand("dual")->parsed()) doc = run_gframe_dual(gframe_path, tol);
      else doc = run_gframe_partner(gframe_path, blocks_path, tol);
    } else {
      doc = run_entry(catalog_entry(entry_name), tol);
      doc.scenario = "catalog " + entry_name;
    }
    output.emit_report(doc);
    return doc.pass() ? 0 : 1;
  } catch (const Error& err) {
    output.emit_error(err.kind(), err.what());
    return exit_code_for(err);
  } catch (const std::invalid_argument& err) {
    output.emit_error("InvalidArgument", err.what());
    return 2;
  } catch (const std::exception& err) {
    output.emit_error("Error", err.what());
    return 1;
  }
}
