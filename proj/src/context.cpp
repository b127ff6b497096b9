#include <algorithm>
#include <functional>
#include <string>

#include "constructive_detail.hpp"
#include "phc/errors.hpp"

namespace phc::detail {

namespace {

// Cycle made of `head` followed by `tail` with the given edge colors.
CycleCertificate joined(std::vector<Vertex> vertices, std::vector<Color> colors) {
  return CycleCertificate{std::move(vertices), std::move(colors)};
}

}  // namespace

Budget Context::remaining() const {
  const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
      deadline_ - std::chrono::steady_clock::now());
  // The node budget is shared by every oracle call of one solve.
  if (left.count() <= 0 || *nodes_ >= budget_.max_nodes) throw SearchTimeout{};
  return Budget{budget_.max_nodes - *nodes_, left};
}

void Context::account(const SolveOutcome& out) {
  *nodes_ += out.nodes;
  if (out.status == Status::timeout) throw SearchTimeout{};
}

CycleCertificate Context::guaranteed_cycle(const ColoredMultigraph& g,
                                           int length, std::string_view why) {
  std::optional<CycleCertificate> c = cycle(g, length);
  if (!c) {
    throw InternalError("exact search found no proper " +
                        std::to_string(length) + "-cycle where " +
                        std::string(why) + " guarantees one");
  }
  return *c;
}

std::optional<PathCertificate> Context::path(const ColoredMultigraph& g,
                                             const SearchConstraints& sc) {
  SolveOutcome out = find_proper_path(g, sc, remaining());
  account(out);
  return out.path;
}

std::optional<CycleCertificate> Context::cycle(const ColoredMultigraph& g,
                                               int length) {
  SolveOutcome out = find_proper_cycle_of_length(g, length, remaining());
  account(out);
  return out.cycle;
}

std::optional<CycleCertificate> Context::simple_cycle(
    const ColoredMultigraph& g) {
  SolveOutcome out = find_ham_cycle_simple(g, remaining());
  account(out);
  return out.cycle;
}

std::optional<CycleCertificate> close_chain(const ColoredMultigraph& g,
                                            const std::vector<Vertex>& chain,
                                            int length, Context& ctx) {
  const int k = static_cast<int>(chain.size());
  const int cover = length - k;
  if (k < 1 || cover < 2) {
    throw InputError("close_chain: chain leaves fewer than two vertices");
  }
  VertexSet used = 0;
  for (Vertex x : chain) used |= bit(x);
  const VertexSet rest = g.all_vertices() & ~used;
  const InducedSubgraph sub = induced_subgraph(g, rest);
  std::vector<int> to_sub(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < sub.original.size(); ++i) {
    to_sub[static_cast<std::size_t>(sub.original[i])] = static_cast<int>(i);
  }
  const ColorSet all = g.all_colors();
  const Vertex head = chain.back();
  const Vertex tail = chain.front();

  std::vector<Color> chain_colors(static_cast<std::size_t>(k - 1));
  std::optional<CycleCertificate> found;

  auto try_close = [&]() {
    const ColorSet beta_forbid = k >= 2 ? bit(chain_colors.back()) : 0;
    const ColorSet gamma_forbid = k >= 2 ? bit(chain_colors.front()) : 0;
    for_each_bit(g.neighbors(head) & rest, [&](int p) {
      if (found) return;
      const ColorSet betas = g.colors_between(head, p) & ~beta_forbid;
      for_each_bit(betas, [&](int beta) {
        if (found) return;
        for_each_bit(g.neighbors(tail) & rest & ~bit(p), [&](int q) {
          if (found) return;
          ColorSet gammas = g.colors_between(q, tail) & ~gamma_forbid;
          if (k == 1) gammas &= ~bit(beta);
          if (gammas == 0) return;
          ColorSet last_in = 0;
          for_each_bit(gammas, [&](int gamma) { last_in |= all & ~bit(gamma); });
          const ColorSet first_in = all & ~bit(beta);
          if (first_in == 0 || last_in == 0) return;
          SearchConstraints sc;
          sc.required_start = to_sub[static_cast<std::size_t>(p)];
          sc.required_end = to_sub[static_cast<std::size_t>(q)];
          sc.first_color_in = first_in;
          sc.last_color_in = last_in;
          sc.target_length = cover;
          std::optional<PathCertificate> path = ctx.path(sub.graph, sc);
          if (!path) return;
          const PathCertificate mapped = to_original(sub, *path);
          const Color last = mapped.colors.back();
          const Color gamma = lowest(gammas & ~bit(last));
          std::vector<Vertex> vs = chain;
          vs.insert(vs.end(), mapped.vertices.begin(), mapped.vertices.end());
          std::vector<Color> cs = chain_colors;
          cs.push_back(beta);
          cs.insert(cs.end(), mapped.colors.begin(), mapped.colors.end());
          cs.push_back(gamma);
          found = joined(std::move(vs), std::move(cs));
        });
      });
    });
  };

  std::function<void(int)> color_chain = [&](int i) {
    if (found) return;
    if (i == k - 1) {
      try_close();
      return;
    }
    ColorSet options =
        g.colors_between(chain[static_cast<std::size_t>(i)],
                         chain[static_cast<std::size_t>(i) + 1]);
    if (i > 0) options &= ~bit(chain_colors[static_cast<std::size_t>(i) - 1]);
    for_each_bit(options, [&](int col) {
      if (found) return;
      chain_colors[static_cast<std::size_t>(i)] = col;
      color_chain(i + 1);
    });
  };
  color_chain(0);

  if (found && !verify_proper_cycle(g, *found)) {
    throw InternalError("close_chain built an improper cycle");
  }
  return found;
}

std::optional<CycleCertificate> splice_edge(const ColoredMultigraph& g,
                                            const CycleCertificate& cycle,
                                            Vertex a, Vertex b, Color e) {
  const Color o = 3 - e;
  const std::size_t len = cycle.length();
  for (std::size_t i = 0; i < len; ++i) {
    if (cycle.colors[i] != o) continue;
    const Vertex p = cycle.vertices[i];
    const Vertex q = cycle.vertices[(i + 1) % len];
    Vertex first = -1;
    Vertex second = -1;
    if (g.has_edge(p, a, o) && g.has_edge(b, q, o)) {
      first = a;
      second = b;
    } else if (g.has_edge(p, b, o) && g.has_edge(a, q, o)) {
      first = b;
      second = a;
    } else {
      continue;
    }
    CycleCertificate out;
    out.vertices.assign(cycle.vertices.begin(),
                        cycle.vertices.begin() + static_cast<long>(i) + 1);
    out.vertices.push_back(first);
    out.vertices.push_back(second);
    out.vertices.insert(out.vertices.end(),
                        cycle.vertices.begin() + static_cast<long>(i) + 1,
                        cycle.vertices.end());
    out.colors.assign(cycle.colors.begin(),
                      cycle.colors.begin() + static_cast<long>(i));
    out.colors.insert(out.colors.end(), {o, e, o});
    out.colors.insert(out.colors.end(),
                      cycle.colors.begin() + static_cast<long>(i) + 1,
                      cycle.colors.end());
    if (!verify_proper_cycle(g, out)) {
      throw InternalError("splice produced an improper cycle");
    }
    return out;
  }
  return std::nullopt;
}

CycleCertificate join_through_vertex(const ColoredMultigraph& g, Vertex h,
                                     Context& ctx) {
  const InducedSubgraph sub = induced_subgraph(g, g.all_vertices() & ~bit(h));
  std::optional<PathCertificate> path = ctx.path(sub.graph, SearchConstraints{});
  if (!path) {
    throw InternalError("no proper Hamiltonian path after removing vertex " +
                        std::to_string(h));
  }
  const PathCertificate p = to_original(sub, *path);
  const Vertex front = p.vertices.front();
  const Vertex back = p.vertices.back();
  const ColorSet into = g.colors_between(h, front) & ~bit(p.colors.front());
  const ColorSet outof = g.colors_between(back, h) & ~bit(p.colors.back());
  std::optional<std::pair<Color, Color>> pick;
  for_each_bit(into, [&](int a) {
    for_each_bit(outof & ~bit(a), [&](int b) {
      if (!pick) pick.emplace(a, b);
    });
  });
  if (!pick) {
    throw InternalError("cannot close the path through vertex " +
                        std::to_string(h));
  }
  CycleCertificate out;
  out.vertices.push_back(h);
  out.vertices.insert(out.vertices.end(), p.vertices.begin(), p.vertices.end());
  out.colors.push_back(pick->first);
  out.colors.insert(out.colors.end(), p.colors.begin(), p.colors.end());
  out.colors.push_back(pick->second);
  return out;
}

}  // namespace phc::detail
