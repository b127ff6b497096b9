#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "phc/certificate.hpp"
#include "phc/constructive.hpp"
#include "phc/errors.hpp"
#include "phc/graph.hpp"
#include "phc/harness.hpp"
#include "phc/outcome.hpp"

namespace phc {

/// Malformed or invalid input document, located by 1-based line and column.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Reads {"n": N, "c": C, "edges": [[u, v, k], ...]}. Colors are 1..c; a
/// repeated (pair, color), a loop or an out-of-range id is a ParseError
/// pointing at the offending edge.
ColoredMultigraph parse_graph_json(std::string_view text);

/// Canonical form: no whitespace, edges sorted by (min, max, color) with
/// u < v, trailing newline. parse(serialize(g)) == g.
std::string serialize_graph_json(const ColoredMultigraph& g);

using Certificate = std::variant<CycleCertificate, PathCertificate>;

/// {"kind": "cycle"|"path", "vertices": [...], "colors": [...]}
Certificate parse_certificate_json(std::string_view text);
std::string serialize_certificate_json(const Certificate& cert);

/// Colors 1..6 are red, blue, green, orange, purple, brown; higher colors are
/// drawn black with a numeric label.
std::string dot_color(Color k);

/// Undirected DOT, one line per colored edge. Certificate edges are drawn
/// with penwidth=3.
std::string export_dot(const ColoredMultigraph& g,
                       const std::optional<Certificate>& cert = std::nullopt);

std::string outcome_json(const SolveOutcome& out);
std::string hypothesis_json(const HypothesisReport& report);
std::string report_json(const SweepReport& report);
std::string report_table(const SweepReport& report);
std::string coverage_json(const CoverageTable& table);
std::string coverage_table(const CoverageTable& table);

}  // namespace phc
