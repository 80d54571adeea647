#pragma once

#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "isospec/frames.hpp"
#include "isospec/gframes.hpp"
#include "isospec/types.hpp"

namespace isospec {

using nlohmann::json;

// File formats:
//   matrix   {"rows": r, "cols": c, "entries": [[re, im], ...]}  (row-major)
//   frame    {"dim": n, "vectors": [[[re, im], ...], ...]}
//   g-frame  {"dim_h": n, "dim_ht": m, "members": [matrix, ...]}
//   blocks   {"blocks": [matrix, ...]}

inline json to_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      entries.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline json to_json(const ComplexVector& v) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    entries.push_back(json::array({v(i).real(), v(i).imag()}));
  return entries;
}

inline json to_json(const RealVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

inline json to_json(const Frame& f) {
  json vectors = json::array();
  for (const auto& v : f.vectors) vectors.push_back(to_json(v));
  return json{{"dim", f.dim}, {"vectors", std::move(vectors)}};
}

inline json to_json(const GFrame& g) {
  json members = json::array();
  for (const auto& m : g.members) members.push_back(to_json(m));
  return json{{"dim_h", g.dim_h}, {"dim_ht", g.dim_ht}, {"members", std::move(members)}};
}

inline json to_json(const Tolerances& tol) {
  return json{{"hermiticity", tol.hermiticity},
              {"commutator", tol.commutator},
              {"invertibility", tol.invertibility},
              {"eigen_match", tol.eigen_match},
              {"zero_vector", tol.zero_vector}};
}

namespace detail {

inline Complex parse_complex_entry(const json& entry, const char* what) {
  if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number())
    throw ShapeError(std::string(what) + ": each entry must be a [re, im] pair of numbers");
  const Complex z(entry[0].get<double>(), entry[1].get<double>());
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw ShapeError(std::string(what) + ": non-finite entry");
  return z;
}

inline Eigen::Index parse_positive_index(const json& doc, const char* key, const char* what) {
  if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long long>() <= 0)
    throw ShapeError(std::string(what) + ": missing or non-positive \"" + key + "\"");
  return static_cast<Eigen::Index>(doc[key].get<long long>());
}

}  // namespace detail

inline ComplexMatrix matrix_from_json(const json& doc) {
  if (!doc.is_object()) throw ShapeError("matrix: expected a JSON object");
  const Eigen::Index rows = detail::parse_positive_index(doc, "rows", "matrix");
  const Eigen::Index cols = detail::parse_positive_index(doc, "cols", "matrix");
  if (!doc.contains("entries") || !doc["entries"].is_array())
    throw ShapeError("matrix: missing \"entries\" array");
  const json& entries = doc["entries"];
  if (static_cast<Eigen::Index>(entries.size()) != rows * cols)
    throw ShapeError("matrix: entry count does not equal rows * cols");
  ComplexMatrix m(rows, cols);
  Eigen::Index k = 0;
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = detail::parse_complex_entry(entries[static_cast<size_t>(k++)], "matrix");
  return m;
}

inline Frame frame_from_json(const json& doc) {
  if (!doc.is_object()) throw ShapeError("frame: expected a JSON object");
  const Eigen::Index dim = detail::parse_positive_index(doc, "dim", "frame");
  if (!doc.contains("vectors") || !doc["vectors"].is_array() || doc["vectors"].empty())
    throw ShapeError("frame: missing \"vectors\" array");
  std::vector<ComplexVector> vectors;
  for (const json& jv : doc["vectors"]) {
    if (!jv.is_array() || static_cast<Eigen::Index>(jv.size()) != dim)
      throw ShapeError("frame: vector length does not match \"dim\"");
    ComplexVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i)
      v(i) = detail::parse_complex_entry(jv[static_cast<size_t>(i)], "frame");
    vectors.push_back(std::move(v));
  }
  try {
    return Frame(dim, std::move(vectors));
  } catch (const std::invalid_argument& err) {
    throw ShapeError(std::string("frame: ") + err.what());
  }
}

inline GFrame gframe_from_json(const json& doc) {
  if (!doc.is_object()) throw ShapeError("g-frame: expected a JSON object");
  const Eigen::Index dim_h = detail::parse_positive_index(doc, "dim_h", "g-frame");
  const Eigen::Index dim_ht = detail::parse_positive_index(doc, "dim_ht", "g-frame");
  if (!doc.contains("members") || !doc["members"].is_array() || doc["members"].empty())
    throw ShapeError("g-frame: missing \"members\" array");
  std::vector<ComplexMatrix> members;
  for (const json& jm : doc["members"]) members.push_back(matrix_from_json(jm));
  try {
    return GFrame(dim_h, dim_ht, std::move(members));
  } catch (const std::invalid_argument& err) {
    throw ShapeError(std::string("g-frame: ") + err.what());
  } catch (const DimensionMismatch& err) {
    throw ShapeError(std::string("g-frame: ") + err.what());
  }
}

inline std::vector<ComplexMatrix> blocks_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("blocks") || !doc["blocks"].is_array() ||
      doc["blocks"].empty())
    throw ShapeError("blocks: expected an object with a non-empty \"blocks\" array");
  std::vector<ComplexMatrix> blocks;
  for (const json& jm : doc["blocks"]) blocks.push_back(matrix_from_json(jm));
  return blocks;
}

inline json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& err) {
    // the message carries byte/line position information
    throw ParseError(path + ": " + err.what());
  } catch (const json::exception& err) {
    // e.g. number overflow: the document cannot be represented
    throw ParseError(path + ": " + err.what());
  }
}

inline ComplexMatrix parse_matrix_file(const std::string& path) {
  return matrix_from_json(parse_json_file(path));
}

inline Frame parse_frame_file(const std::string& path) {
  return frame_from_json(parse_json_file(path));
}

inline GFrame parse_gframe_file(const std::string& path) {
  return gframe_from_json(parse_json_file(path));
}

inline std::vector<ComplexMatrix> parse_blocks_file(const std::string& path) {
  return blocks_from_json(parse_json_file(path));
}

namespace detail {

// Shortest representation would round-trip too, but the output contract is
// 17 significant digits for every number.
inline void append_double17(std::string& out, double v) {
  if (!std::isfinite(v)) {
    out += "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
  // keep a float marker so integral values (and -0.0) re-parse as doubles
  if (out.find_first_of(".eE", out.size() - std::strlen(buf)) == std::string::npos) out += ".0";
}

inline void append_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

inline void dump17_impl(std::string& out, const json& j, int indent, int depth) {
  const std::string pad(static_cast<size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<size_t>(indent * depth), ' ');
  switch (j.type()) {
    case json::value_t::null: out += "null"; break;
    case json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
    case json::value_t::number_integer: out += std::to_string(j.get<long long>()); break;
    case json::value_t::number_unsigned: out += std::to_string(j.get<unsigned long long>()); break;
    case json::value_t::number_float: append_double17(out, j.get<double>()); break;
    case json::value_t::string: append_escaped(out, j.get<std::string>()); break;
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        break;
      }
      out += "[\n";
      for (size_t i = 0; i < j.size(); ++i) {
        out += pad;
        dump17_impl(out, j[i], indent, depth + 1);
        if (i + 1 < j.size()) out += ',';
        out += '\n';
      }
      out += close_pad + "]";
      break;
    }
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        break;
      }
      out += "{\n";
      size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        out += pad;
        append_escaped(out, it.key());
        out += ": ";
        dump17_impl(out, it.value(), indent, depth + 1);
        if (i + 1 < j.size()) out += ',';
        out += '\n';
      }
      out += close_pad + "}";
      break;
    }
    default: out += "null"; break;
  }
}

}  // namespace detail

/// JSON text with every floating-point number printed at 17 significant
/// digits, so that emit -> parse round-trips bit-exactly.
inline std::string dump17(const json& j, int indent = 2) {
  std::string out;
  detail::dump17_impl(out, j, indent, 0);
  out += '\n';
  return out;
}

}  // namespace isospec
