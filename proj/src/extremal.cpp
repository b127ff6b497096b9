#include "phc/extremal.hpp"

#include <string>

#include "phc/errors.hpp"

namespace phc {

namespace {

class Builder {
 public:
  Builder(int n, int c) : n_(n), c_(c) {}

  void join(Vertex u, Vertex v, Color k) { edges_.push_back(Edge{u, v, k}); }
  void join_all_colors(Vertex u, Vertex v) {
    for (Color k = 1; k <= c_; ++k) join(u, v, k);
  }
  void rainbow_clique(Vertex first, Vertex last) {
    for (Vertex u = first; u <= last; ++u) {
      for (Vertex v = u + 1; v <= last; ++v) join_all_colors(u, v);
    }
  }
  ColoredMultigraph build() const { return ColoredMultigraph(n_, c_, edges_); }

 private:
  int n_;
  int c_;
  std::vector<Edge> edges_;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

ExtremalInstance finish(const Builder& b, ExtremalSpec spec) {
  ExtremalInstance out{b.build(), std::move(spec)};
  if (static_cast<long long>(out.graph.edge_count()) != out.spec.claimed_edges) {
    throw InternalError(out.spec.family + ": generated " +
                        std::to_string(out.graph.edge_count()) +
                        " edges, claimed " +
                        std::to_string(out.spec.claimed_edges));
  }
  return out;
}

}  // namespace

ColoredMultigraph rainbow_complete(int n, int c) {
  require(n >= 1 && n <= kMaxVertices, "rainbow_complete: n out of range");
  require(c >= 1 && c <= kMaxColors, "rainbow_complete: c out of range");
  Builder b(n, c);
  b.rainbow_clique(0, n - 1);
  return b.build();
}

ExtremalInstance extremal_2col_edges(int n) {
  require(n >= 4 && n % 2 == 0 && n <= kMaxVertices,
          "s1-extremal needs an even n >= 4");
  Builder b(n, 2);
  const Vertex x = n - 1;
  b.rainbow_clique(0, n - 2);
  for (Vertex v = 0; v < x; ++v) b.join(v, x, 1);
  ExtremalSpec spec{"s1-extremal", Theorem::two_color_edges, n, 2,
                    2 * choose2(n - 1) + n - 1, {}};
  spec.claims.vertex_rainbow = std::pair{x, 1};
  return finish(b, std::move(spec));
}

ExtremalInstance extremal_2col_rainbow(int n) {
  require(n >= 10 && n % 2 == 0 && n <= kMaxVertices,
          "2colrd2-extremal needs an even n >= 10");
  Builder b(n, 2);
  const Vertex v = n - 3;
  for (Vertex p = 0; p < n - 2; ++p) {
    for (Vertex q = p + 1; q < n - 2; ++q) b.join(p, q, 2);
  }
  b.join(v, n - 2, 2);
  b.join(v, n - 1, 2);
  for (Vertex p = 0; p < n; ++p) {
    for (Vertex q = p + 1; q < n; ++q) b.join(p, q, 1);
  }
  ExtremalSpec spec{"2colrd2-extremal", Theorem::two_color_rainbow, n, 2,
                    choose2(n) + choose2(n - 2) + 2, {}};
  spec.claims.rainbow_degree = 2;
  spec.claims.no_perfect_matching_in = 2;
  return finish(b, std::move(spec));
}

ExtremalInstance extremal_ccol_edges(int n, int c) {
  require(c >= 3 && c < n && n <= kMaxVertices && c <= kMaxColors,
          "3colgen-extremal needs 3 <= c < n");
  Builder b(n, c);
  const Vertex x = n - 1;
  b.rainbow_clique(0, n - 2);
  for (Vertex v = 0; v < x; ++v) b.join(v, x, 1);
  ExtremalSpec spec{"3colgen-extremal", Theorem::multi_color_edges, n, c,
                    c * choose2(n - 1) + n - 1, {}};
  spec.claims.vertex_rainbow = std::pair{x, 1};
  return finish(b, std::move(spec));
}

ExtremalInstance extremal_ccol_rainbow(int n, int c) {
  require(n >= 4 && c >= 3 && n <= kMaxVertices && c <= kMaxColors,
          "3colrd3-extremal needs n >= 4 and c >= 3");
  Builder b(n, c);
  b.rainbow_clique(0, n - 2);
  b.join_all_colors(n - 2, n - 1);
  ExtremalSpec spec{"3colrd3-extremal", Theorem::multi_color_rainbow, n, c,
                    c * choose2(n - 1) + c, {}};
  spec.claims.rainbow_degree = c;
  spec.claims.two_connected = false;
  return finish(b, std::move(spec));
}

ExtremalInstance extremal_conjecture(int n, int c) {
  require(n >= 10 && c >= 3 && n <= kMaxVertices && c <= kMaxColors,
          "conjecture-extremal needs n >= 10 and c >= 3");
  Builder b(n, c);
  b.rainbow_clique(0, n - 3);
  for (Vertex x : {n - 2, n - 1}) {
    for (Vertex y : {n - 4, n - 3}) b.join_all_colors(y, x);
  }
  ExtremalSpec spec{"conjecture-extremal", Theorem::conjecture, n, c,
                    c * choose2(n - 2) + 4LL * c, {}};
  spec.claims.rainbow_degree = c;
  spec.claims.two_connected = true;
  return finish(b, std::move(spec));
}

std::vector<std::string_view> family_ids() {
  return {"rainbow-complete", "s1-extremal",      "2colrd2-extremal",
          "3colgen-extremal", "3colrd3-extremal", "conjecture-extremal"};
}

ExtremalInstance generate_family(std::string_view family, int n, int c) {
  if (family == "rainbow-complete") {
    ExtremalInstance out{rainbow_complete(n, c), {}};
    out.spec = ExtremalSpec{"rainbow-complete", Theorem::conjecture, n, c,
                            c * choose2(n), {}};
    out.spec.claims.no_proper_ham_cycle = false;
    return out;
  }
  if (family == "s1-extremal") return extremal_2col_edges(n);
  if (family == "2colrd2-extremal") return extremal_2col_rainbow(n);
  if (family == "3colgen-extremal") return extremal_ccol_edges(n, c);
  if (family == "3colrd3-extremal") return extremal_ccol_rainbow(n, c);
  if (family == "conjecture-extremal") return extremal_conjecture(n, c);
  throw InputError("unknown family '" + std::string(family) + "'");
}

}  // namespace phc
