#include <optional>
#include <string>

#include "constructive_detail.hpp"
#include "phc/errors.hpp"

namespace phc {

namespace detail {

namespace {

int target_length(int n) { return n % 2 == 0 ? n : n - 1; }

// ceil((n + 1) / 2): both colored degrees at least this much admits a proper
// Hamiltonian cycle (even n) or a proper (n-1)-cycle (odd n).
int degree_bound(int n) { return (n + 2) / 2; }

struct Deficient {
  Vertex x;
  Color k;
};

std::optional<Deficient> deficient_vertex(const ColoredMultigraph& g) {
  const int bound = degree_bound(g.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    for (Color k = 1; k <= 2; ++k) {
      if (count(g.neighbors(x, k)) <= bound - 1) return Deficient{x, k};
    }
  }
  return std::nullopt;
}

// Two-color contraction rule: the neighbor reached by color k donates the
// other color, the neighbor reached by the other color donates k.
ContractionRule alternating(Color k_from_a_side) {
  ContractionRule rule = ContractionRule::uniform(2, Inherit::none);
  rule.set(3 - k_from_a_side, Inherit::from_a);
  rule.set(k_from_a_side, Inherit::from_b);
  return rule;
}

// Vertices y (joined to x by color k) and z (joined by the other color),
// y != z, lexicographically first.
std::optional<std::pair<Vertex, Vertex>> alternating_neighbors(
    const ColoredMultigraph& g, Vertex x, Color k) {
  const VertexSet ys = g.neighbors(x, k);
  const VertexSet zs = g.neighbors(x, 3 - k);
  for (Vertex y = 0; y < g.vertex_count(); ++y) {
    if (!((ys >> y) & 1U)) continue;
    const VertexSet rest = zs & ~bit(y);
    if (rest != 0) return std::pair{y, lowest(rest)};
  }
  return std::nullopt;
}

CycleCertificate lift_or_throw(const Contraction& ct,
                               const ColoredMultigraph& g,
                               const CycleCertificate& sub,
                               std::string_view where) {
  std::optional<CycleCertificate> lifted = lift_through(ct, g, sub);
  if (!lifted) {
    throw InternalError(std::string(where) +
                        ": contracted vertex cannot be expanded");
  }
  return *lifted;
}

bool on_cycle(const CycleCertificate& c, Vertex v) {
  for (Vertex x : c.vertices) {
    if (x == v) return true;
  }
  return false;
}

}  // namespace

CycleCertificate two_color_edges(const ColoredMultigraph& g, Context& ctx) {
  const int n = g.vertex_count();
  const int target = target_length(n);
  if (n <= 5) {
    ctx.tag("base-case-exact");
    return ctx.guaranteed_cycle(g, target, "the small case");
  }
  const std::optional<Deficient> low = deficient_vertex(g);
  if (!low) {
    ctx.tag("abou-degree-condition");
    return ctx.guaranteed_cycle(g, target, "the colored degree condition");
  }
  const auto [x, k] = *low;
  const auto pair = alternating_neighbors(g, x, k);
  if (!pair) {
    throw InternalError("s1: deficient vertex lacks neighbors in both colors");
  }
  const auto [y, z] = *pair;
  const Contraction ct = contract(g, x, y, z, alternating(k));
  ctx.tag("contract-s1");
  require_hypotheses(ct.graph, Theorem::two_color_edges, "s1 contraction");
  const CycleCertificate sub = two_color_edges(ct.graph, ctx);
  if (on_cycle(sub, ct.merged)) {
    ctx.tag("lift-contracted");
    return lift_or_throw(ct, g, sub, "s1");
  }
  // Odd n: the cycle avoided the new vertex, so grow it back by two.
  const CycleCertificate base = *lift_through(ct, g, sub);
  ctx.tag("lemma-s0-insert");
  if (auto r = lemma_cycle_insertion(g, base, x, y, k); r.cycle) return *r.cycle;
  if (auto r = lemma_cycle_insertion(g, base, x, z, 3 - k); r.cycle) {
    return *r.cycle;
  }
  throw InternalError("s1: neither xy nor xz can be inserted");
}

namespace {

CycleCertificate two_low_vertices(const ColoredMultigraph& g, Vertex p,
                                  Vertex q, Context& ctx) {
  ctx.tag("two-low-vertices");
  const int target = target_length(g.vertex_count());
  if ((g.neighbors(p) >> q) & 1U) {
    if (auto c = close_chain(g, {q, p}, target, ctx)) return *c;
  }
  // Not adjacent, or no closing path: go through a common neighbor.
  std::optional<CycleCertificate> found;
  for_each_bit(g.neighbors(p) & g.neighbors(q), [&](int w) {
    if (!found) found = close_chain(g, {q, w, p}, target, ctx);
  });
  if (found) return *found;
  throw InternalError("2colrd2: no cycle through the low-degree pair " +
                      std::to_string(p) + ", " + std::to_string(q));
}

bool has_low_color(const ColoredMultigraph& g, Vertex x) {
  return count(g.neighbors(x, 1)) <= 2 || count(g.neighbors(x, 2)) <= 2;
}

CycleCertificate rd2_contraction(const ColoredMultigraph& g, Vertex center,
                                 Vertex via_k, Vertex via_other, Color k,
                                 bool may_recontract, Context& ctx) {
  // via_k is joined to center by k and donates the other color; via_other
  // donates k.
  const Contraction ct = contract(g, center, via_k, via_other, alternating(k));
  if (graph_rainbow_degree(ct.graph) == 2) {
    ctx.tag("contract-rd-preserved");
    require_hypotheses(ct.graph, Theorem::two_color_rainbow, "2colrd2 contraction");
    const CycleCertificate sub = two_color_rainbow(ct.graph, ctx);
    if (on_cycle(sub, ct.merged)) {
      ctx.tag("lift-contracted");
      return lift_or_throw(ct, g, sub, "2colrd2");
    }
    ctx.tag("odd-cycle-splice");
    const CycleCertificate base = *lift_through(ct, g, sub);
    const Vertex trio[3] = {center, via_k, via_other};
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        const Vertex a = trio[i];
        const Vertex b = trio[j];
        for (Color e = 1; e <= 2; ++e) {
          if (!g.has_edge(a, b, e)) continue;
          if (auto c = splice_edge(g, base, a, b, e)) return *c;
        }
      }
    }
    throw InternalError("2colrd2: no contracted edge splices into the cycle");
  }

  ctx.tag("rd-drop");
  Vertex dropped = -1;
  for (Vertex v = 0; v < ct.graph.vertex_count(); ++v) {
    if (rainbow_degree(ct.graph, v) < 2) {
      dropped = v;
      break;
    }
  }
  Vertex x = -1;
  if (dropped == ct.merged) {
    if (ct.graph.neighbors(dropped, k) == 0) {
      ctx.tag("case-a");
      x = via_other;
    } else {
      ctx.tag("case-b");
      x = via_k;
    }
  } else {
    ctx.tag("case-c");
    x = ct.original[static_cast<std::size_t>(dropped)];
  }
  // After one recontraction both vertices have lost a color somewhere; pair
  // them directly.
  if (has_low_color(g, center) || !may_recontract) {
    return two_low_vertices(g, center, x, ctx);
  }
  // x has a colored degree of at most two in g; contract around it instead,
  // with center as one of the two neighbors when they are adjacent.
  ctx.tag("recontract");
  for (Color alpha = 1; alpha <= 2; ++alpha) {
    if (!g.has_edge(x, center, alpha)) continue;
    const VertexSet others = g.neighbors(x, 3 - alpha) & ~bit(center);
    if (others != 0) {
      return rd2_contraction(g, x, center, lowest(others), alpha, false, ctx);
    }
  }
  for (Color alpha = 1; alpha <= 2; ++alpha) {
    if (auto pair = alternating_neighbors(g, x, alpha)) {
      return rd2_contraction(g, x, pair->first, pair->second, alpha, false, ctx);
    }
  }
  throw InternalError("2colrd2: low vertex lacks neighbors in both colors");
}

}  // namespace

CycleCertificate two_color_rainbow(const ColoredMultigraph& g, Context& ctx) {
  const int n = g.vertex_count();
  const int target = target_length(n);
  if (n <= 10) {
    ctx.tag("base-case-exact");
    return ctx.guaranteed_cycle(g, target, "the small case");
  }
  const std::optional<Deficient> low = deficient_vertex(g);
  if (!low) {
    ctx.tag("abou-degree-condition");
    return ctx.guaranteed_cycle(g, target, "the colored degree condition");
  }
  const auto [v, k] = *low;
  // w joined to v by k, u by the other color.
  const auto pair = alternating_neighbors(g, v, k);
  if (!pair) {
    throw InternalError("2colrd2: deficient vertex lacks neighbors in both colors");
  }
  const auto [w, u] = *pair;
  return rd2_contraction(g, v, w, u, k, true, ctx);
}

}  // namespace detail

SolveOutcome solve_2col_edges(const ColoredMultigraph& g, const Budget& budget) {
  return detail::run_solver(g, Theorem::two_color_edges, budget,
                            [](const ColoredMultigraph& h, detail::Context& ctx) {
                              return detail::two_color_edges(h, ctx);
                            });
}

SolveOutcome solve_2col_rainbow(const ColoredMultigraph& g,
                                const Budget& budget) {
  return detail::run_solver(g, Theorem::two_color_rainbow, budget,
                            [](const ColoredMultigraph& h, detail::Context& ctx) {
                              return detail::two_color_rainbow(h, ctx);
                            });
}

}  // namespace phc
