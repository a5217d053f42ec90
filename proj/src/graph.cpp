#include "triodrot/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>

#include "triodrot/error.hpp"

namespace triodrot {

bool OrientedGraph::has_arc(std::size_t from, std::size_t to) const {
  return std::binary_search(arcs.begin(), arcs.end(), Arc{from, to, 0},
                            [](const Arc& a, const Arc& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
}

std::vector<std::vector<OrientedGraph::Arc>> OrientedGraph::adjacency() const {
  std::vector<std::vector<Arc>> adj(vertex_count());
  for (const auto& a : arcs) adj[a.from].push_back(a);
  return adj;
}

namespace {

std::vector<bool> reachable(std::size_t n, const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

bool OrientedGraph::strongly_connected() const {
  auto n = vertex_count();
  if (n == 0) return false;
  std::vector<std::vector<std::size_t>> fwd(n), bwd(n);
  for (const auto& a : arcs) {
    fwd[a.from].push_back(a.to);
    bwd[a.to].push_back(a.from);
  }
  auto f = reachable(n, fwd);
  auto b = reachable(n, bwd);
  return std::all_of(f.begin(), f.end(), [](bool x) { return x; }) &&
         std::all_of(b.begin(), b.end(), [](bool x) { return x; });
}

OrientedGraph point_graph(const TriodPattern& p) {
  OrientedGraph g;
  g.names = p.labels();
  auto n = p.period();
  for (PointId x = 0; x < n; ++x) {
    // Farthest reach of f([a, x]) on each branch.
    std::array<int, kBranchCount> reach{};
    for (int r = 1; r <= p.rank(x); ++r) {
      auto image = p.where(p.next(p.at(p.branch(x), r)));
      auto& slot = reach[static_cast<std::size_t>(image.branch)];
      slot = std::max(slot, image.rank);
    }
    for (PointId y = 0; y < n; ++y) {
      if (p.rank(y) <= reach[static_cast<std::size_t>(p.branch(y))]) {
        g.arcs.push_back({x, y, branch_step(p.branch(x), p.branch(y))});
      }
    }
  }
  return g;
}

bool covers(const TriodPattern& p, const BasicInterval& from, const BasicInterval& to) {
  auto s = p.image(from.lower_point(p));
  auto e = p.image(from.upper_point(p));
  return on_geodesic(s, e, to.lower_point(p)) && on_geodesic(s, e, to.upper_point(p));
}

OrientedGraph basic_interval_graph(const TriodPattern& p) {
  auto intervals = basic_intervals(p);
  OrientedGraph g;
  for (const auto& iv : intervals) g.names.push_back(iv.name(p));
  for (const auto& i : intervals) {
    for (const auto& j : intervals) {
      if (covers(p, i, j)) g.arcs.push_back({i.index, j.index, branch_step(i.branch, j.branch)});
    }
  }
  return g;
}

namespace {

// Karp's characterization of the minimum cycle mean for a strongly
// connected graph, evaluated in exact arithmetic.
Rational karp_min_mean(const OrientedGraph& g, bool negate) {
  if (!g.strongly_connected()) throw Error(ErrorKind::NotStronglyConnected, "graph is not strongly connected");
  auto n = g.vertex_count();
  constexpr auto kInf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::vector<std::int64_t>> dist(n + 1, std::vector<std::int64_t>(n, kInf));
  dist[0][0] = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    for (const auto& a : g.arcs) {
      if (dist[k - 1][a.from] == kInf) continue;
      std::int64_t w = negate ? -a.weight : a.weight;
      dist[k][a.to] = std::min(dist[k][a.to], dist[k - 1][a.from] + w);
    }
  }
  std::optional<Rational> best;
  for (std::size_t v = 0; v < n; ++v) {
    if (dist[n][v] == kInf) continue;
    std::optional<Rational> worst;
    for (std::size_t k = 0; k < n; ++k) {
      if (dist[k][v] == kInf) continue;
      Rational mean(dist[n][v] - dist[k][v], static_cast<std::int64_t>(n - k));
      if (!worst || mean > *worst) worst = mean;
    }
    if (worst && (!best || *worst < *best)) best = worst;
  }
  return negate ? -*best : *best;
}

}  // namespace

Rational min_cycle_mean(const OrientedGraph& g) { return karp_min_mean(g, false); }
Rational max_cycle_mean(const OrientedGraph& g) { return karp_min_mean(g, true); }

RotationInterval rotation_interval(const OrientedGraph& point_graph) {
  return {min_cycle_mean(point_graph) / Rational(3), max_cycle_mean(point_graph) / Rational(3)};
}

RotationInterval rotation_interval(const TriodPattern& p) { return rotation_interval(point_graph(p)); }

namespace {

class JohnsonSearch {
 public:
  JohnsonSearch(const OrientedGraph& g, std::size_t cap) : adj_(g.adjacency()), cap_(cap) {}

  std::vector<Loop> run() {
    auto n = adj_.size();
    for (start_ = 0; start_ < n; ++start_) {
      blocked_.assign(n, false);
      blockers_.assign(n, {});
      circuit(start_);
    }
    return std::move(out_);
  }

 private:
  bool circuit(std::size_t v) {
    bool found = false;
    path_.push_back(v);
    blocked_[v] = true;
    for (const auto& a : adj_[v]) {
      if (a.to < start_) continue;
      weights_.push_back(a.weight);
      if (a.to == start_) {
        emit();
        found = true;
      } else if (!blocked_[a.to] && circuit(a.to)) {
        found = true;
      }
      weights_.pop_back();
    }
    if (found) {
      unblock(v);
    } else {
      for (const auto& a : adj_[v]) {
        if (a.to < start_) continue;
        auto& b = blockers_[a.to];
        if (std::find(b.begin(), b.end(), v) == b.end()) b.push_back(v);
      }
    }
    path_.pop_back();
    return found;
  }

  void unblock(std::size_t u) {
    blocked_[u] = false;
    auto pending = std::move(blockers_[u]);
    blockers_[u].clear();
    for (auto w : pending) {
      if (blocked_[w]) unblock(w);
    }
  }

  void emit() {
    if (out_.size() >= cap_) {
      throw Error(ErrorKind::CapExceeded, "more than " + std::to_string(cap_) + " elementary loops");
    }
    Loop loop;
    loop.vertices = path_;
    loop.weight = std::accumulate(weights_.begin(), weights_.end(), std::int64_t{0});
    auto len = static_cast<std::int64_t>(path_.size());
    loop.pair = {loop.weight / 3, len};
    loop.number = Rational(loop.weight, 3 * len);
    out_.push_back(std::move(loop));
  }

  std::vector<std::vector<OrientedGraph::Arc>> adj_;
  std::size_t cap_;
  std::size_t start_ = 0;
  std::vector<bool> blocked_;
  std::vector<std::vector<std::size_t>> blockers_;
  std::vector<std::size_t> path_;
  std::vector<int> weights_;
  std::vector<Loop> out_;
};

}  // namespace

std::vector<Loop> elementary_loops(const OrientedGraph& g, std::size_t cap) { return JohnsonSearch(g, cap).run(); }

RotationInterval rotation_interval_by_enumeration(const OrientedGraph& point_graph, std::size_t cap) {
  auto loops = elementary_loops(point_graph, cap);
  if (loops.empty()) throw Error(ErrorKind::NotStronglyConnected, "graph has no loops");
  RotationInterval out{loops.front().number, loops.front().number};
  for (const auto& l : loops) {
    out.lo = std::min(out.lo, l.number);
    out.hi = std::max(out.hi, l.number);
  }
  return out;
}

bool is_regular(const TriodPattern& p) {
  if (p.period() == 2 && p.branch(0) != p.branch(1)) return false;
  auto intervals = basic_intervals(p);
  for (const auto& i : intervals) {
    for (const auto& j : intervals) {
      if (j.index <= i.index || i.branch == j.branch) continue;
      if (!i.lower && !j.lower) continue;
      if (covers(p, i, j) && covers(p, j, i)) return false;
    }
  }
  return true;
}

bool fixes_only_branching_point(const TriodPattern& p) {
  for (const auto& i : basic_intervals(p)) {
    if (i.lower && covers(p, i, i)) return false;
  }
  return true;
}

RealizedLoop realize_loop(const TriodPattern& p, std::span<const std::size_t> interval_ids) {
  if (interval_ids.empty()) throw Error(ErrorKind::CoverBroken, "empty loop");
  auto intervals = basic_intervals(p);
  RealizedLoop out;
  for (auto id : interval_ids) {
    if (id >= intervals.size()) throw Error(ErrorKind::UnknownPoint, "basic interval " + std::to_string(id));
    out.itinerary.push_back(intervals[id]);
  }
  std::int64_t thirds = 0;
  for (std::size_t i = 0; i < out.itinerary.size(); ++i) {
    const auto& from = out.itinerary[i];
    const auto& to = out.itinerary[(i + 1) % out.itinerary.size()];
    if (!covers(p, from, to)) {
      throw Error(ErrorKind::CoverBroken,
                  "step " + std::to_string(i) + ": " + from.name(p) + " does not cover " + to.name(p));
    }
    thirds += branch_step(from.branch, to.branch);
  }
  out.pair = {thirds / 3, static_cast<std::int64_t>(out.itinerary.size())};
  return out;
}

RealizedAdmissibleLoop realize_admissible_loop(const TriodPattern& p, std::span<const PointId> points) {
  if (points.empty()) throw Error(ErrorKind::CoverBroken, "empty loop");
  auto g = point_graph(p);
  RealizedAdmissibleLoop out{{points.begin(), points.end()}, {}};
  std::int64_t thirds = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto from = points[i];
    auto to = points[(i + 1) % points.size()];
    if (from >= p.period() || to >= p.period()) throw Error(ErrorKind::UnknownPoint, "point index out of range");
    if (!g.has_arc(from, to)) {
      throw Error(ErrorKind::CoverBroken, "step " + std::to_string(i) + ": [a," + p.label(from) +
                                              "] does not cover [a," + p.label(to) + "]");
    }
    thirds += branch_step(p.branch(from), p.branch(to));
  }
  out.pair = {thirds / 3, static_cast<std::int64_t>(points.size())};
  return out;
}

std::string to_dot(const OrientedGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) os << "  v" << v << " [label=\"" << g.names[v] << "\"];\n";
  for (const auto& a : g.arcs) os << "  v" << a.from << " -> v" << a.to << " [label=\"w=" << a.weight << "/3\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace triodrot
