#include "phc/io.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace phc {

using nlohmann::json;

namespace {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

Position locate(std::string_view text, std::size_t offset) {
  Position p;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

[[noreturn]] void fail_at(std::string_view text, std::size_t offset,
                          const std::string& what) {
  const Position p = locate(text, offset);
  throw ParseError(what, p.line, p.column);
}

// Offset of the index-th element of the top-level "edges" array, found by a
// bracket scan that skips string literals.
std::size_t edge_offset(std::string_view text, std::size_t index) {
  const std::size_t key = text.find("\"edges\"");
  if (key == std::string_view::npos) return 0;
  std::size_t i = text.find('[', key);
  if (i == std::string_view::npos) return key;
  int depth = 0;
  std::size_t seen = 0;
  bool in_string = false;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (in_string) {
      if (ch == '\\') {
        ++i;
      } else if (ch == '"') {
        in_string = false;
      }
      continue;
    }
    if (ch == '"') {
      in_string = true;
    } else if (ch == '[') {
      ++depth;
      if (depth == 2) {
        if (seen == index) return i;
        ++seen;
      }
    } else if (ch == ']') {
      if (--depth == 0) break;
    } else if (depth == 1 && ch != ',' && ch != ' ' && ch != '\n' &&
               ch != '\t' && ch != '\r') {
      // A scalar element; count it where it starts.
      if (seen == index) return i;
      ++seen;
      while (i + 1 < text.size() && text[i + 1] != ',' && text[i + 1] != ']') ++i;
    }
  }
  return key;
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    fail_at(text, offset, std::string("malformed JSON: ") + e.what());
  }
}

long long integer_field(std::string_view text, const json& doc,
                        const char* key) {
  if (!doc.contains(key)) fail_at(text, 0, std::string("missing \"") + key + "\"");
  const json& v = doc.at(key);
  if (!v.is_number_integer()) {
    fail_at(text, text.find(std::string("\"") + key + "\""),
            std::string("\"") + key + "\" must be an integer");
  }
  return v.get<long long>();
}

json certificate_to_json(const Certificate& cert) {
  return std::visit(
      [](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        json j;
        j["kind"] = std::is_same_v<T, CycleCertificate> ? "cycle" : "path";
        j["vertices"] = c.vertices;
        j["colors"] = c.colors;
        return j;
      },
      cert);
}

json violation_json(const Violation& v) {
  json j;
  j["hypothesis"] = v.hypothesis;
  j["actual"] = v.actual;
  j["required"] = v.required;
  j["vertex"] = v.vertex ? json(*v.vertex) : json(nullptr);
  return j;
}

json violations_json(const std::vector<Violation>& vs) {
  json arr = json::array();
  for (const Violation& v : vs) arr.push_back(violation_json(v));
  return arr;
}

json status_or_null(const std::optional<Status>& s) {
  return s ? json(to_string(*s)) : json(nullptr);
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t line,
                       std::size_t column)
    : InputError("line " + std::to_string(line) + ", column " +
                 std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

ColoredMultigraph parse_graph_json(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) fail_at(text, 0, "graph document must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "n" && key != "c" && key != "edges") {
      fail_at(text, text.find("\"" + key + "\""), "unknown key \"" + key + "\"");
    }
  }
  const long long n = integer_field(text, doc, "n");
  const long long c = integer_field(text, doc, "c");
  if (n < 0 || n > kMaxVertices) {
    fail_at(text, text.find("\"n\""),
            "n must be in 0.." + std::to_string(kMaxVertices));
  }
  if (c < 1 || c > kMaxColors) {
    fail_at(text, text.find("\"c\""),
            "c must be in 1.." + std::to_string(kMaxColors));
  }
  if (!doc.contains("edges") || !doc.at("edges").is_array()) {
    fail_at(text, text.find("\"edges\""), "\"edges\" must be an array");
  }
  std::vector<Edge> edges;
  std::set<std::tuple<int, int, int>> seen;
  const json& list = doc.at("edges");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& e = list[i];
    auto bad = [&](const std::string& what) {
      fail_at(text, edge_offset(text, i),
              "edge " + std::to_string(i) + ": " + what);
    };
    if (!e.is_array() || e.size() != 3 ||
        !std::all_of(e.begin(), e.end(),
                     [](const json& x) { return x.is_number_integer(); })) {
      bad("expected [u, v, color] with integer entries");
    }
    const long long u = e[0].get<long long>();
    const long long v = e[1].get<long long>();
    const long long k = e[2].get<long long>();
    if (u < 0 || u >= n || v < 0 || v >= n) bad("endpoint out of range");
    if (u == v) bad("loop");
    if (k < 1 || k > c) bad("color must be in 1.." + std::to_string(c));
    const auto lo = static_cast<int>(std::min(u, v));
    const auto hi = static_cast<int>(std::max(u, v));
    if (!seen.emplace(lo, hi, static_cast<int>(k)).second) {
      bad("duplicate edge " + std::to_string(lo) + "-" + std::to_string(hi) +
          " in color " + std::to_string(k));
    }
    edges.push_back(Edge{lo, hi, static_cast<Color>(k)});
  }
  return ColoredMultigraph(static_cast<int>(n), static_cast<int>(c), edges);
}

std::string serialize_graph_json(const ColoredMultigraph& g) {
  std::string out = "{\"n\":" + std::to_string(g.vertex_count()) +
                    ",\"c\":" + std::to_string(g.color_count()) + ",\"edges\":[";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) out += ',';
    first = false;
    out += '[' + std::to_string(e.u) + ',' + std::to_string(e.v) + ',' +
           std::to_string(e.color) + ']';
  }
  out += "]}\n";
  return out;
}

Certificate parse_certificate_json(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("kind") || !doc.at("kind").is_string()) {
    fail_at(text, 0, "certificate needs a \"kind\" of \"cycle\" or \"path\"");
  }
  auto ints = [&](const char* key) {
    if (!doc.contains(key) || !doc.at(key).is_array()) {
      fail_at(text, 0, std::string("certificate needs an array \"") + key + "\"");
    }
    std::vector<int> out;
    for (const json& x : doc.at(key)) {
      if (!x.is_number_integer()) {
        fail_at(text, text.find(std::string("\"") + key + "\""),
                std::string("\"") + key + "\" must hold integers");
      }
      out.push_back(x.get<int>());
    }
    return out;
  };
  const std::string kind = doc.at("kind").get<std::string>();
  if (kind == "cycle") return CycleCertificate{ints("vertices"), ints("colors")};
  if (kind == "path") return PathCertificate{ints("vertices"), ints("colors")};
  fail_at(text, text.find("\"kind\""), "unknown certificate kind \"" + kind + "\"");
}

std::string serialize_certificate_json(const Certificate& cert) {
  return certificate_to_json(cert).dump() + "\n";
}

std::string dot_color(Color k) {
  static constexpr const char* kPalette[] = {"red",    "blue",   "green",
                                             "orange", "purple", "brown"};
  if (k >= 1 && k <= 6) return kPalette[k - 1];
  return "black";
}

std::string export_dot(const ColoredMultigraph& g,
                       const std::optional<Certificate>& cert) {
  std::set<std::tuple<int, int, int>> bold;
  if (cert) {
    std::visit(
        [&](const auto& c) {
          using T = std::decay_t<decltype(c)>;
          const std::size_t len = c.vertices.size();
          const std::size_t edges =
              std::is_same_v<T, CycleCertificate> ? len : (len == 0 ? 0 : len - 1);
          for (std::size_t i = 0; i < edges && i < c.colors.size(); ++i) {
            const int u = c.vertices[i];
            const int v = c.vertices[(i + 1) % len];
            bold.emplace(std::min(u, v), std::max(u, v), c.colors[i]);
          }
        },
        *cert);
  }
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex x = 0; x < g.vertex_count(); ++x) out << "  " << x << ";\n";
  for (const Edge& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v << " [color=" << dot_color(e.color);
    if (e.color > 6) out << ", label=\"" << e.color << "\"";
    if (bold.contains({e.u, e.v, e.color})) out << ", penwidth=3";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string outcome_json(const SolveOutcome& out) {
  json j;
  j["status"] = to_string(out.status);
  j["cycle"] = out.cycle ? certificate_to_json(*out.cycle) : json(nullptr);
  j["path"] = out.path ? certificate_to_json(*out.path) : json(nullptr);
  j["violations"] = violations_json(out.violations);
  j["trace"] = out.trace.steps;
  j["nodes"] = out.nodes;
  return j.dump() + "\n";
}

std::string hypothesis_json(const HypothesisReport& report) {
  json j;
  j["theorem"] = std::string(theorem_id(report.theorem));
  j["satisfied"] = report.satisfied;
  j["violations"] = violations_json(report.violations);
  return j.dump() + "\n";
}

std::string report_json(const SweepReport& report) {
  json records = json::array();
  for (const SweepRecord& r : report.records) {
    json j;
    j["index"] = r.index;
    j["label"] = r.label;
    j["n"] = r.n;
    j["c"] = r.c;
    j["edges"] = r.edges;
    j["threshold"] = r.threshold;
    j["hypotheses_satisfied"] = r.hypotheses_satisfied;
    j["violations"] = violations_json(r.violations);
    j["constructive"] = status_or_null(r.constructive);
    j["exact"] = status_or_null(r.exact);
    j["certificate_ok"] = r.certificate_ok;
    j["agreement"] = r.agreement;
    j["tags"] = r.tags;
    j["notes"] = r.notes;
    j["constructive_ms"] = r.constructive_ms;
    j["exact_ms"] = r.exact_ms;
    records.push_back(std::move(j));
  }
  const SweepSummary& s = report.summary;
  json agg;
  agg["total"] = s.total;
  agg["hypotheses_satisfied"] = s.hypotheses_satisfied;
  agg["constructive_found"] = s.constructive_found;
  agg["exact_found"] = s.exact_found;
  agg["exact_infeasible"] = s.exact_infeasible;
  agg["timeouts"] = s.timeouts;
  agg["agreements"] = s.agreements;
  agg["disagreements"] = s.disagreements;
  json j;
  j["kind"] = report.kind;
  j["records"] = std::move(records);
  j["aggregate"] = std::move(agg);
  return j.dump() + "\n";
}

std::string report_table(const SweepReport& report) {
  std::ostringstream out;
  out << pad("idx", 6) << pad("label", 22) << pad("n", 4) << pad("c", 4)
      << pad("m", 6) << pad("thr", 6) << pad("hyp", 5) << pad("constr", 22)
      << pad("exact", 22) << pad("ok", 4) << "notes\n";
  for (const SweepRecord& r : report.records) {
    std::string notes;
    for (const std::string& note : r.notes) {
      if (!notes.empty()) notes += "; ";
      notes += note;
    }
    out << pad(std::to_string(r.index), 6) << pad(r.label, 22)
        << pad(std::to_string(r.n), 4) << pad(std::to_string(r.c), 4)
        << pad(std::to_string(r.edges), 6) << pad(std::to_string(r.threshold), 6)
        << pad(r.hypotheses_satisfied ? "yes" : "no", 5)
        << pad(r.constructive ? to_string(*r.constructive) : "-", 22)
        << pad(r.exact ? to_string(*r.exact) : "-", 22)
        << pad(r.agreement ? "yes" : "NO", 4) << notes << '\n';
  }
  const SweepSummary& s = report.summary;
  out << report.kind << ": " << s.total << " records, " << s.agreements
      << " agree, " << s.disagreements << " disagree, " << s.timeouts
      << " timeouts\n";
  return out.str();
}

std::string coverage_json(const CoverageTable& table) {
  json hits = json::object();
  for (const auto& [tag, n] : table.hits) hits[tag] = n;
  json j;
  j["theorem"] = std::string(theorem_id(table.theorem));
  j["instances"] = table.instances;
  j["failures"] = table.failures;
  j["hits"] = std::move(hits);
  j["unhit"] = table.unhit;
  j["other_tags"] = table.other_tags;
  return j.dump() + "\n";
}

std::string coverage_table(const CoverageTable& table) {
  std::ostringstream out;
  out << "coverage for " << theorem_id(table.theorem) << " over "
      << table.instances << " instances (" << table.failures << " failures)\n";
  for (const auto& [tag, n] : table.hits) {
    out << "  " << pad(tag, 32) << n << (n == 0 ? "  UNHIT" : "") << '\n';
  }
  for (const std::string& tag : table.other_tags) {
    out << "  " << pad(tag, 32)
        << (tag.find('/') != std::string::npos ? "(delegated)\n" : "(outside vocabulary)\n");
  }
  return out.str();
}

}  // namespace phc
