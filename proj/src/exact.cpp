#include "phc/exact.hpp"

#include <algorithm>
#include <chrono>
#include <string>
#include <unordered_set>

#include "phc/errors.hpp"

namespace phc {

const char* to_string(Status s) {
  switch (s) {
    case Status::found: return "found";
    case Status::infeasible: return "infeasible";
    case Status::hypothesis_violation: return "hypothesis-violation";
    case Status::timeout: return "timeout";
  }
  return "unknown";
}

bool TheoremTrace::contains(const std::string& tag) const {
  return std::find(steps.begin(), steps.end(), tag) != steps.end();
}

namespace {

struct BudgetExceeded {};

// Failed-state memo keyed by (visited set, current vertex, last color, first
// color). Dense bitset for small instances, hash set otherwise.
class DeadStates {
 public:
  DeadStates(int n, int c) : n_(n), stride_(c + 1) {
    const double bits = static_cast<double>(std::uint64_t{1} << std::min(n, 40)) *
                        n * stride_ * stride_;
    if (n <= 24 && bits <= static_cast<double>(std::uint64_t{1} << 28)) {
      dense_.assign(static_cast<std::size_t>(bits) / 64 + 1, 0);
    }
  }

  bool contains(VertexSet mask, Vertex v, Color last, Color first) const {
    if (!dense_.empty()) {
      std::size_t i = index(mask, v, last, first);
      return (dense_[i / 64] >> (i % 64)) & 1U;
    }
    return sparse_.count(key(mask, v, last, first)) != 0;
  }

  void insert(VertexSet mask, Vertex v, Color last, Color first) {
    if (!dense_.empty()) {
      std::size_t i = index(mask, v, last, first);
      dense_[i / 64] |= std::uint64_t{1} << (i % 64);
      return;
    }
    sparse_.insert(key(mask, v, last, first));
  }

  void clear() {
    std::fill(dense_.begin(), dense_.end(), 0);
    sparse_.clear();
  }

 private:
  struct Key {
    VertexSet mask;
    std::uint32_t rest;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::uint64_t h = k.mask * 0x9E3779B97F4A7C15ULL;
      h ^= (h >> 29) + k.rest * 0xBF58476D1CE4E5B9ULL;
      return static_cast<std::size_t>(h ^ (h >> 31));
    }
  };

  std::size_t index(VertexSet mask, Vertex v, Color last, Color first) const {
    return ((static_cast<std::size_t>(mask) * n_ + v) * stride_ + last) *
               stride_ +
           first;
  }
  Key key(VertexSet mask, Vertex v, Color last, Color first) const {
    return {mask, static_cast<std::uint32_t>((v * stride_ + last) * stride_ +
                                             first)};
  }

  int n_;
  int stride_;
  std::vector<std::uint64_t> dense_;
  std::unordered_set<Key, KeyHash> sparse_;
};

// One search run: a fixed start, an allowed vertex set and a target length.
struct RunSpec {
  bool closed = true;
  Vertex start = 0;
  VertexSet allowed = 0;
  int length = 0;
  std::optional<Vertex> end;
  ColorSet first_in = 0;
  ColorSet last_in = 0;
  bool first_equals_last = false;
};

class Searcher {
 public:
  Searcher(const ColoredMultigraph& g, bool proper, const Budget& budget)
      : g_(g),
        proper_(proper),
        budget_(budget),
        began_(std::chrono::steady_clock::now()),
        dead_(g.vertex_count(), g.color_count()) {}

  std::uint64_t nodes() const { return nodes_; }

  // Returns true and fills path_/colors_ when the run succeeds.
  bool run(const RunSpec& spec) {
    spec_ = spec;
    full_cover_ = spec.length == count(spec.allowed);
    path_.assign(1, spec.start);
    colors_.clear();
    return extend(spec.start, 0, 0, bit(spec.start));
  }

  void reset_memo() { dead_.clear(); }

  const std::vector<Vertex>& path() const { return path_; }
  const std::vector<Color>& colors() const { return colors_; }

 private:
  ColorSet usable_colors(Vertex v, Vertex u, Color last) const {
    ColorSet cs = g_.colors_between(v, u);
    if (proper_ && last != 0) cs &= ~(ColorSet{1} << last);
    return cs;
  }

  void tick() {
    ++nodes_;
    if (nodes_ > budget_.max_nodes) throw BudgetExceeded{};
    if ((nodes_ & 1023U) == 1 &&
        std::chrono::steady_clock::now() - began_ > budget_.max_time) {
      throw BudgetExceeded{};
    }
  }

  // Colors used toward the members of `within` from u.
  int colors_toward(Vertex u, VertexSet within) const {
    int k_count = 0;
    for (Color k = 1; k <= g_.color_count(); ++k) {
      if (g_.neighbors(u, k) & within) ++k_count;
    }
    return k_count;
  }

  // Feasibility filters for runs that must cover every allowed vertex.
  bool hopeless(Vertex v, Color first, VertexSet mask) const {
    const VertexSet rest = spec_.allowed & ~mask;
    if (rest == 0) return false;
    const VertexSet open_end = spec_.closed ? bit(spec_.start) : 0;
    const VertexSet reach = rest | bit(v) | open_end;
    int weak = 0;
    bool bad = false;
    for_each_bit(rest, [&](int u) {
      if (bad) return;
      const VertexSet around = g_.neighbors(u) & reach & ~bit(u);
      const bool terminal = !spec_.closed && (!spec_.end || *spec_.end == u);
      const int need = terminal ? 1 : 2;
      if (count(around) < need) {
        bad = true;
        return;
      }
      if (count(around) < 2 || (proper_ && colors_toward(u, reach) < 2)) {
        if (!terminal) {
          bad = true;
          return;
        }
        ++weak;
      }
    });
    if (bad || weak > 1) return true;
    if (spec_.closed) {
      ColorSet back = 0;
      for (Color k = 1; k <= g_.color_count(); ++k) {
        if (g_.neighbors(spec_.start, k) & rest) back |= ColorSet{1} << k;
      }
      if (proper_ && first != 0) back &= ~(ColorSet{1} << first);
      if (back == 0) return true;
    }
    return (reachable(g_, v, rest | bit(v)) & rest) != rest;
  }

  bool closes(Vertex v, Color last, Color first) {
    if (spec_.closed) {
      ColorSet cs = g_.colors_between(v, spec_.start);
      if (proper_) cs &= ~((ColorSet{1} << last) | (ColorSet{1} << first));
      if (cs == 0) return false;
      colors_.push_back(lowest(cs));
      return true;
    }
    if (spec_.end && v != *spec_.end) return false;
    if (spec_.length >= 2) {
      if (spec_.last_in != 0 && !((spec_.last_in >> last) & 1U)) return false;
      if (spec_.first_equals_last && first != last) return false;
    }
    return true;
  }

  bool extend(Vertex v, Color last, Color first, VertexSet mask) {
    tick();
    const int depth = static_cast<int>(path_.size());
    if (depth == spec_.length) return closes(v, last, first);

    const Color last_key = proper_ ? last : 0;
    const Color first_key = proper_ ? first : 0;
    if (dead_.contains(mask, v, last_key, first_key)) return false;
    if (full_cover_ && hopeless(v, first, mask)) {
      dead_.insert(mask, v, last_key, first_key);
      return false;
    }

    const VertexSet rest = spec_.allowed & ~mask;
    VertexSet candidates = g_.neighbors(v) & rest;
    if (!spec_.closed && spec_.end && depth + 1 < spec_.length) {
      candidates &= ~bit(*spec_.end);
    }

    struct Step {
      int weight;
      Vertex u;
      Color k;
    };
    std::vector<Step> steps;
    for_each_bit(candidates, [&](int u) {
      ColorSet cs = usable_colors(v, u, last);
      if (depth == 1 && spec_.first_in != 0) cs &= spec_.first_in;
      if (cs == 0) return;
      int weight = 0;
      for (Color k = 1; k <= g_.color_count(); ++k) {
        weight += count(g_.neighbors(u, k) & rest);
      }
      if (!proper_) {
        steps.push_back({weight, u, lowest(cs)});
        return;
      }
      for_each_bit(cs, [&](int k) { steps.push_back({weight, u, k}); });
    });
    std::stable_sort(steps.begin(), steps.end(),
                     [](const Step& x, const Step& y) {
                       return x.weight < y.weight;
                     });

    for (const Step& s : steps) {
      path_.push_back(s.u);
      colors_.push_back(s.k);
      const Color next_first = depth == 1 ? s.k : first;
      if (extend(s.u, s.k, next_first, mask | bit(s.u))) return true;
      path_.pop_back();
      colors_.pop_back();
    }
    dead_.insert(mask, v, last_key, first_key);
    return false;
  }

  const ColoredMultigraph& g_;
  bool proper_;
  Budget budget_;
  std::chrono::steady_clock::time_point began_;
  DeadStates dead_;
  RunSpec spec_;
  bool full_cover_ = false;
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> path_;
  std::vector<Color> colors_;
};

// Vertices of `allowed`, most constrained first.
std::vector<Vertex> start_order(const ColoredMultigraph& g, VertexSet allowed,
                                bool proper) {
  std::vector<Vertex> order;
  for_each_bit(allowed, [&](int x) { order.push_back(x); });
  auto weight = [&](Vertex x) {
    int rd = 0;
    int d = 0;
    for (Color k = 1; k <= g.color_count(); ++k) {
      VertexSet s = g.neighbors(x, k) & allowed;
      rd += s != 0;
      d += count(s);
    }
    return std::make_pair(proper ? rd : 0, d);
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return weight(a) < weight(b); });
  return order;
}

SolveOutcome cycle_search(const ColoredMultigraph& g, int length, bool proper,
                          const Budget& budget) {
  SolveOutcome out;
  Searcher searcher(g, proper, budget);
  try {
    VertexSet allowed = g.all_vertices();
    for (Vertex s : start_order(g, allowed, proper)) {
      if (count(allowed) < length) break;
      RunSpec spec;
      spec.closed = true;
      spec.start = s;
      spec.allowed = allowed;
      spec.length = length;
      searcher.reset_memo();
      if (searcher.run(spec)) {
        out.status = Status::found;
        out.cycle = CycleCertificate{searcher.path(), searcher.colors()};
        break;
      }
      allowed &= ~bit(s);
    }
  } catch (const BudgetExceeded&) {
    out.status = Status::timeout;
  }
  out.nodes = searcher.nodes();
  if (out.cycle) {
    Verdict v = proper ? verify_proper_cycle(g, *out.cycle)
                       : verify_cycle_edges(g, *out.cycle);
    if (!v || out.cycle->length() != static_cast<std::size_t>(length)) {
      throw InternalError("exact search produced an invalid cycle: " +
                          v.reason());
    }
  }
  return out;
}

}  // namespace

SolveOutcome find_proper_cycle_of_length(const ColoredMultigraph& g,
                                         int length, const Budget& budget) {
  const int n = g.vertex_count();
  if (length < 3 || length > n) {
    throw InputError("cycle length " + std::to_string(length) +
                     " outside 3.." + std::to_string(n));
  }
  // Two colors force alternation, hence even length; one color admits none.
  if (g.color_count() == 1 || (g.color_count() == 2 && length % 2 == 1)) {
    return SolveOutcome{};
  }
  if (length == n && !is_connected(g)) return SolveOutcome{};
  return cycle_search(g, length, true, budget);
}

SolveOutcome find_proper_ham_cycle(const ColoredMultigraph& g,
                                   const Budget& budget) {
  if (g.vertex_count() < 3) return SolveOutcome{};
  return find_proper_cycle_of_length(g, g.vertex_count(), budget);
}

SolveOutcome find_ham_cycle_simple(const ColoredMultigraph& g,
                                   const Budget& budget) {
  const int n = g.vertex_count();
  if (n < 3 || !is_connected(g)) return SolveOutcome{};
  return cycle_search(g, n, false, budget);
}

SolveOutcome find_proper_path(const ColoredMultigraph& g,
                              const SearchConstraints& sc,
                              const Budget& budget) {
  const int n = g.vertex_count();
  const int length = sc.target_length == 0 ? n : sc.target_length;
  if (length < 2 || length > n) {
    throw InputError("path length " + std::to_string(length) + " outside 2.." +
                     std::to_string(n));
  }
  for (const auto& end : {sc.required_start, sc.required_end}) {
    if (end && !g.has_vertex(*end)) {
      throw InputError("path endpoint out of range");
    }
  }
  if (sc.required_start && sc.required_end &&
      *sc.required_start == *sc.required_end) {
    throw InputError("path endpoints must differ");
  }
  const ColorSet valid = g.all_colors();
  if ((sc.first_color_in & ~valid) != 0 || (sc.last_color_in & ~valid) != 0) {
    throw InputError("endpoint color constraint names an unknown color");
  }
  if (sc.first_equals_last_color && sc.first_color_in != 0 &&
      sc.last_color_in != 0 && (sc.first_color_in & sc.last_color_in) == 0) {
    throw InputError("first and last colors must agree but share no option");
  }

  SolveOutcome out;
  if (length == n && !is_connected(g)) return out;

  ColorSet last_in = sc.last_color_in;
  if (length == 2 && sc.first_color_in != 0) {
    // A single edge is both first and last.
    last_in = last_in == 0 ? sc.first_color_in : (last_in & sc.first_color_in);
    if (last_in == 0) return out;
  }

  Searcher searcher(g, true, budget);
  try {
    std::vector<Vertex> starts;
    if (sc.required_start) {
      starts.push_back(*sc.required_start);
    } else {
      starts = start_order(g, g.all_vertices(), true);
      if (sc.required_end) std::erase(starts, *sc.required_end);
    }
    for (Vertex s : starts) {
      RunSpec spec;
      spec.closed = false;
      spec.start = s;
      spec.allowed = g.all_vertices();
      spec.length = length;
      spec.end = sc.required_end;
      spec.first_in = sc.first_color_in;
      spec.last_in = last_in;
      spec.first_equals_last = sc.first_equals_last_color;
      if (searcher.run(spec)) {
        out.status = Status::found;
        out.path = PathCertificate{searcher.path(), searcher.colors()};
        break;
      }
    }
  } catch (const BudgetExceeded&) {
    out.status = Status::timeout;
  }
  out.nodes = searcher.nodes();
  if (out.path) {
    Verdict v = verify_proper_path(g, *out.path);
    if (!v) {
      throw InternalError("exact search produced an invalid path: " +
                          v.reason());
    }
  }
  return out;
}

namespace {

bool match_rest(const ColoredMultigraph& g, Color i, VertexSet unmatched,
                std::unordered_set<VertexSet>& failed) {
  if (unmatched == 0) return true;
  if (failed.count(unmatched) != 0) return false;
  const Vertex x = lowest(unmatched);
  const VertexSet others = unmatched & ~bit(x);
  bool ok = false;
  for_each_bit(g.neighbors(x, i) & others, [&](int y) {
    if (!ok) ok = match_rest(g, i, others & ~bit(y), failed);
  });
  if (!ok) failed.insert(unmatched);
  return ok;
}

}  // namespace

bool has_perfect_matching_in_color(const ColoredMultigraph& g, Color i) {
  if (!g.has_color(i)) throw InputError("color out of range");
  if (g.vertex_count() % 2 != 0) return false;
  std::unordered_set<VertexSet> failed;
  return match_rest(g, i, g.all_vertices(), failed);
}

}  // namespace phc
