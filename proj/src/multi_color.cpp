#include <algorithm>
#include <array>
#include <optional>
#include <string>

#include "constructive_detail.hpp"
#include "phc/errors.hpp"

namespace phc {

namespace detail {

namespace {

bool on_cycle(const CycleCertificate& c, Vertex v) {
  return std::find(c.vertices.begin(), c.vertices.end(), v) != c.vertices.end();
}

CycleCertificate lift_or_throw(const Contraction& ct,
                               const ColoredMultigraph& g,
                               const CycleCertificate& sub,
                               std::string_view where) {
  std::optional<CycleCertificate> lifted = lift_through(ct, g, sub);
  if (!lifted || !on_cycle(sub, ct.merged)) {
    throw InternalError(std::string(where) +
                        ": contracted vertex cannot be expanded");
  }
  return *lifted;
}

// Role assignments for a three-colored pair contraction, lexicographic:
// color order[0] comes from a, order[1] from b, order[2] is the intersection.
constexpr std::array<std::array<Color, 3>, 6> kRoleOrders{{
    {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};

ContractionRule roles(const std::array<Color, 3>& order) {
  ContractionRule rule = ContractionRule::uniform(3, Inherit::none);
  rule.set(order[0], Inherit::from_a);
  rule.set(order[1], Inherit::from_b);
  rule.set(order[2], Inherit::intersection);
  return rule;
}

// Triple contraction with center joined to a by x and to b by y: a donates y,
// b donates x, the third color is the intersection.
ContractionRule crossed(Color x, Color y) {
  return roles({y, x, static_cast<Color>(6 - x - y)});
}

std::optional<Vertex> vertex_with_degree_at_least(const ColoredMultigraph& g,
                                                  int d) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) >= d) return v;
  }
  return std::nullopt;
}

CycleCertificate alternate_on_simple_cycle(const ColoredMultigraph& g,
                                           const CycleCertificate& ham,
                                           Color j, Color l) {
  const int n = g.vertex_count();
  const std::size_t len = ham.length();
  if (n % 2 == 0) {
    CycleCertificate out{ham.vertices, {}};
    for (std::size_t i = 0; i < len; ++i) out.colors.push_back(i % 2 == 0 ? j : l);
    return out;
  }
  // Odd n: close the alternating path with an edge of a third color.
  for (Color k = 1; k <= g.color_count(); ++k) {
    if (k == j || k == l) continue;
    for (std::size_t i = 0; i < len; ++i) {
      const Vertex p = ham.vertices[i];
      const Vertex q = ham.vertices[(i + 1) % len];
      if (!g.has_edge(p, q, k)) continue;
      CycleCertificate out;
      for (std::size_t s = 1; s <= len; ++s) {
        out.vertices.push_back(ham.vertices[(i + s) % len]);
      }
      for (std::size_t s = 0; s + 1 < len; ++s) {
        out.colors.push_back(s % 2 == 0 ? j : l);
      }
      out.colors.push_back(k);
      return out;
    }
  }
  throw InternalError("3colgen: no third-color edge on the Hamiltonian cycle");
}

CycleCertificate pendant_cycle(const ColoredMultigraph& g,
                               const ColoredMultigraph& both, Color j,
                               Color l) {
  const int n = g.vertex_count();
  Vertex pendant = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (count(both.neighbors(v)) <= 1) {
      pendant = v;
      break;
    }
  }
  if (pendant < 0) {
    throw InternalError("3colgen: separable intersection graph has no pendant");
  }
  const VertexSet rest = g.all_vertices() & ~bit(pendant);
  std::vector<Vertex> inner;
  for_each_bit(rest, [&](int v) { inner.push_back(v); });
  const int path_edges = n - 2;
  for (Vertex x : inner) {
    for (Vertex y : inner) {
      if (x == y) continue;
      const ColorSet at_x = g.colors_between(pendant, x);
      const ColorSet at_y = g.colors_between(pendant, y);
      for (Color s : {j, l}) {
        const Color other = s == j ? l : j;
        const Color last = path_edges % 2 == 1 ? s : other;
        const ColorSet into = at_x & ~bit(s);
        const ColorSet outof = at_y & ~bit(last);
        Color a = 0;
        Color b = 0;
        for_each_bit(into, [&](int ca) {
          if (a) return;
          const ColorSet ok = outof & ~bit(ca);
          if (ok) {
            a = ca;
            b = lowest(ok);
          }
        });
        if (!a) continue;
        CycleCertificate out;
        out.vertices.push_back(pendant);
        out.vertices.push_back(x);
        for (Vertex v : inner) {
          if (v != x && v != y) out.vertices.push_back(v);
        }
        out.vertices.push_back(y);
        out.colors.push_back(a);
        for (int e = 0; e < path_edges; ++e) {
          out.colors.push_back(e % 2 == 0 ? s : other);
        }
        out.colors.push_back(b);
        if (verify_proper_cycle(g, out)) return out;
      }
    }
  }
  throw InternalError("3colgen: cannot route a cycle through the pendant vertex");
}

}  // namespace

CycleCertificate multi_color_edges(const ColoredMultigraph& g, Context& ctx) {
  const int n = g.vertex_count();
  const int c = g.color_count();
  if (c >= 4) {
    for (Color j = 1; j <= c; ++j) {
      for (Color t = 1; t <= c; ++t) {
        if (j == t) continue;
        auto [merged, record] = merge_colors(g, j, t);
        if (!check_hypotheses(merged, Theorem::multi_color_edges).satisfied) {
          continue;
        }
        ctx.tag("merge-color");
        const CycleCertificate sub = multi_color_edges(merged, ctx);
        return lift_cycle(record, g, sub);
      }
    }
    ctx.tag("intersection-graph");
    const Color j = 1;
    const Color l = 2;
    const ColoredMultigraph both = parallel_intersection(g, j, l);
    if (!is_2connected(both)) {
      ctx.tag("not-2connected-branch");
      return pendant_cycle(g, both, j, l);
    }
    ctx.tag("2connected-branch");
    std::optional<CycleCertificate> ham = ctx.simple_cycle(both);
    if (!ham) {
      // Happens for n = 5, where a 2-connected graph with C(4, 2) + 1 edges
      // need not be Hamiltonian.
      ctx.tag("exact-fallback");
      return ctx.guaranteed_cycle(g, n, "the edge count");
    }
    return alternate_on_simple_cycle(g, *ham, j, l);
  }

  if (n <= 4) {
    ctx.tag("base-case-exact");
    return ctx.guaranteed_cycle(g, n, "the small case");
  }
  std::optional<std::pair<Vertex, Vertex>> triple;
  for (Vertex v = 0; v < n && !triple; ++v) {
    for (Vertex w = v + 1; w < n; ++w) {
      if (g.multiplicity(v, w) == 3) {
        triple.emplace(v, w);
        break;
      }
    }
  }
  if (!triple) throw InternalError("3colgen: no pair carries all three colors");
  const auto [v, w] = *triple;
  const int high = 3 * n - 4;
  if (g.degree(v) >= high || g.degree(w) >= high) {
    ctx.tag("high-degree-vertex");
    return join_through_vertex(g, g.degree(v) >= high ? v : w, ctx);
  }
  for (const auto& order : kRoleOrders) {
    const Contraction ct = contract(g, v, v, w, roles(order));
    if (!check_hypotheses(ct.graph, Theorem::multi_color_edges).satisfied) {
      continue;
    }
    ctx.tag("contract-pair");
    const CycleCertificate sub = multi_color_edges(ct.graph, ctx);
    ctx.tag("lift-contracted");
    return lift_or_throw(ct, g, sub, "3colgen");
  }
  throw InternalError("3colgen: no role assignment keeps the edge bound");
}

CycleCertificate degree_one(const ColoredMultigraph& g, Vertex x, Color i,
                            Context& ctx) {
  ctx.tag("degree-one-lemma");
  const int n = g.vertex_count();
  if (n <= 5) {
    ctx.tag("base-case-exact");
    return ctx.guaranteed_cycle(g, n, "the small case");
  }
  const Vertex z = lowest(g.neighbors(x, i));
  Context sub_ctx = ctx.delegate("3colgen");
  for (Vertex y = 0; y < n; ++y) {
    if (y == z || !((g.neighbors(x) >> y) & 1U)) continue;
    const ColorSet js = g.colors_between(x, y) & ~bit(i);
    for (Color j = 1; j <= 3; ++j) {
      if (!((js >> j) & 1U)) continue;
      const Contraction ct = contract(g, x, z, y, crossed(i, j));
      if (!check_hypotheses(ct.graph, Theorem::multi_color_edges).satisfied) {
        continue;
      }
      ctx.tag("degree-one-contract");
      const CycleCertificate sub = multi_color_edges(ct.graph, sub_ctx);
      ctx.tag("lift-contracted");
      return lift_or_throw(ct, g, sub, "degree-one");
    }
  }
  ctx.tag("degree-one-direct");
  for (const auto& chain : {std::vector<Vertex>{x, z}, std::vector<Vertex>{z, x}}) {
    if (auto c = close_chain(g, chain, n, ctx)) return *c;
  }
  throw InternalError("degree-one: no cycle through the forced edge");
}

CycleCertificate multi_color_rainbow(const ColoredMultigraph& g, Context& ctx) {
  const int n = g.vertex_count();
  const int c = g.color_count();
  if (c >= 4) {
    ctx.tag("merge-color");
    auto [merged, record] = reduce_color_count(g, choose2(n - 1) + 1);
    require_hypotheses(merged, Theorem::multi_color_rainbow, "3colrd3 merge");
    const CycleCertificate sub = multi_color_rainbow(merged, ctx);
    return lift_cycle(record, g, sub);
  }
  if (n <= 5) {
    ctx.tag("base-case-exact");
    return ctx.guaranteed_cycle(g, n, "the small case");
  }
  std::optional<Vertex> v;
  for (Vertex x = 0; x < n; ++x) {
    if (g.degree(x) <= 3 * n - 7) {
      v = x;
      break;
    }
  }
  if (!v) {
    ctx.tag("all-degrees-large");
    require_hypotheses(g, Theorem::multi_color_edges, "3colrd3 large degrees");
    Context sub_ctx = ctx.delegate("3colgen");
    return multi_color_edges(g, sub_ctx);
  }
  if (auto w = vertex_with_degree_at_least(g, 3 * n - 4)) {
    ctx.tag("high-degree-vertex");
    return join_through_vertex(g, *w, ctx);
  }
  std::optional<Vertex> t;
  for (Vertex y = 0; y < n; ++y) {
    if (y != *v && g.multiplicity(*v, y) == 3) {
      t = y;
      break;
    }
  }
  if (t) {
    const long long need = edge_threshold(Theorem::multi_color_rainbow, n - 1, 3);
    for (const auto& order : kRoleOrders) {
      const Contraction ct = contract(g, *v, *v, *t, roles(order));
      if (static_cast<long long>(ct.graph.edge_count()) < need) continue;
      ctx.tag("contract-pair");
      Vertex dropped = -1;
      for (Vertex y = 0; y < ct.graph.vertex_count(); ++y) {
        if (rainbow_degree(ct.graph, y) < 3) {
          dropped = y;
          break;
        }
      }
      if (dropped < 0) {
        require_hypotheses(ct.graph, Theorem::multi_color_rainbow, "3colrd3 pair");
        const CycleCertificate sub = multi_color_rainbow(ct.graph, ctx);
        ctx.tag("lift-contracted");
        return lift_or_throw(ct, g, sub, "3colrd3");
      }
      if (dropped != ct.merged) {
        const Vertex x = ct.original[static_cast<std::size_t>(dropped)];
        for (Color i = 1; i <= 3; ++i) {
          if (count(g.neighbors(x, i)) == 1) return degree_one(g, x, i, ctx);
        }
        throw InternalError("3colrd3: vertex lost a color without degree one");
      }
      // The new vertex lost a color; find whose.
      Color missing = 0;
      for (Color k = 1; k <= 3; ++k) {
        if (ct.graph.neighbors(ct.merged, k) == 0) {
          missing = k;
          break;
        }
      }
      const Inherit from = ct.rule(missing);
      if (from == Inherit::from_a) return degree_one(g, *v, missing, ctx);
      if (from == Inherit::from_b) return degree_one(g, *t, missing, ctx);
      ctx.tag("remove-pair-path");
      if (auto cyc = close_chain(g, {*t, *v}, n, ctx)) return *cyc;
      throw InternalError("3colrd3: no path closes through the removed pair");
    }
    throw InternalError("3colrd3: no role assignment keeps the edge bound");
  }

  // No triple edge at v: contract v with two neighbors, or a neighbor of v
  // with v and another of its neighbors.
  const long long removed_cap = 5LL * n - 9;
  auto attempt = [&](Vertex center, Vertex a, Vertex b) -> std::optional<CycleCertificate> {
    const ColorSet xs = g.colors_between(center, a);
    const ColorSet ys = g.colors_between(center, b);
    for (Color x = 1; x <= 3; ++x) {
      if (!((xs >> x) & 1U)) continue;
      for (Color y = 1; y <= 3; ++y) {
        if (y == x || !((ys >> y) & 1U)) continue;
        const Contraction ct = contract(g, center, a, b, crossed(x, y));
        if (static_cast<long long>(ct.removed_edges) > removed_cap) continue;
        if (!check_hypotheses(ct.graph, Theorem::multi_color_edges).satisfied) {
          continue;
        }
        ctx.tag("contract-triple");
        Context sub_ctx = ctx.delegate("3colgen");
        const CycleCertificate sub = multi_color_edges(ct.graph, sub_ctx);
        ctx.tag("lift-contracted");
        return lift_or_throw(ct, g, sub, "3colrd3");
      }
    }
    return std::nullopt;
  };
  const VertexSet nv = g.neighbors(*v);
  for (Vertex a = 0; a < n; ++a) {
    if (!((nv >> a) & 1U)) continue;
    for (Vertex b = a + 1; b < n; ++b) {
      if (!((nv >> b) & 1U)) continue;
      if (auto cyc = attempt(*v, a, b)) return *cyc;
    }
  }
  for (Vertex center = 0; center < n; ++center) {
    if (!((nv >> center) & 1U)) continue;
    for (Vertex b = 0; b < n; ++b) {
      if (b == *v || b == center || !((g.neighbors(center) >> b) & 1U)) continue;
      if (auto cyc = attempt(center, *v, b)) return *cyc;
    }
  }
  throw InternalError("3colrd3: no triple contraction keeps the edge bound");
}

}  // namespace detail

SolveOutcome solve_ccol_edges(const ColoredMultigraph& g, const Budget& budget) {
  return detail::run_solver(g, Theorem::multi_color_edges, budget,
                            [](const ColoredMultigraph& h, detail::Context& ctx) {
                              return detail::multi_color_edges(h, ctx);
                            });
}

SolveOutcome solve_ccol_rainbow(const ColoredMultigraph& g,
                                const Budget& budget) {
  return detail::run_solver(g, Theorem::multi_color_rainbow, budget,
                            [](const ColoredMultigraph& h, detail::Context& ctx) {
                              return detail::multi_color_rainbow(h, ctx);
                            });
}

SolveOutcome solve_degree_one(const ColoredMultigraph& g, Vertex x, Color i,
                              const Budget& budget) {
  if (g.color_count() != 3) throw InputError("degree-one lemma needs three colors");
  if (!g.has_vertex(x) || !g.has_color(i)) {
    throw InputError("degree-one lemma: vertex or color out of range");
  }
  if (count(g.neighbors(x, i)) != 1) {
    throw InputError("degree-one lemma: the vertex must have exactly one edge of the color");
  }
  return detail::run_solver(g, Theorem::multi_color_rainbow, budget,
                            [x, i](const ColoredMultigraph& h, detail::Context& ctx) {
                              return detail::degree_one(h, x, i, ctx);
                            });
}

}  // namespace phc
