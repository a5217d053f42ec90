#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "triodrot/pattern.hpp"
#include "triodrot/rational.hpp"
#include "triodrot/rotation.hpp"

namespace triodrot {

/// Weighted digraph whose arc weights are displacements counted in thirds.
struct OrientedGraph {
  struct Arc {
    std::size_t from = 0;
    std::size_t to = 0;
    int weight = 0;  // in {0, 1, 2}; displacement is weight / 3
    friend bool operator==(const Arc&, const Arc&) = default;
  };

  std::vector<std::string> names;  // one per vertex
  std::vector<Arc> arcs;           // sorted by (from, to)

  std::size_t vertex_count() const noexcept { return names.size(); }
  bool has_arc(std::size_t from, std::size_t to) const;
  /// Outgoing arcs per vertex, in target order.
  std::vector<std::vector<Arc>> adjacency() const;
  bool strongly_connected() const;
};

/// G_P: x -> y iff some point w of x's branch with w <= x has f(w) in y's
/// branch and f(w) >= y. For the P-linear map this is exactly "f([a, x])
/// reaches y", since f is affine between consecutive points and fixes a.
OrientedGraph point_graph(const TriodPattern& p);

/// Vertices are basic_intervals(p) in order; I -> J iff f(I) contains J.
OrientedGraph basic_interval_graph(const TriodPattern& p);

/// Interval of a basic interval under the P-linear map, as a covering test.
bool covers(const TriodPattern& p, const BasicInterval& from, const BasicInterval& to);

struct RotationInterval {
  Rational lo;
  Rational hi;
  friend bool operator==(const RotationInterval&, const RotationInterval&) = default;
};

/// Minimum and maximum mean arc weight over cycles (Karp). Throws
/// NotStronglyConnected.
Rational min_cycle_mean(const OrientedGraph& g);
Rational max_cycle_mean(const OrientedGraph& g);

/// Cycle means of the point graph divided by 3.
RotationInterval rotation_interval(const TriodPattern& p);
RotationInterval rotation_interval(const OrientedGraph& point_graph);

struct Loop {
  std::vector<std::size_t> vertices;  // starts at the loop's least vertex
  std::int64_t weight = 0;            // thirds
  RotationPair pair;
  Rational number;
};

inline constexpr std::size_t kDefaultLoopCap = 1'000'000;

/// Every elementary cycle of `g` (Johnson's algorithm), grouped by least
/// vertex. Throws CapExceeded once more than `cap` loops are found.
std::vector<Loop> elementary_loops(const OrientedGraph& g, std::size_t cap = kDefaultLoopCap);

/// Rotation interval from the elementary-loop extrema.
RotationInterval rotation_interval_by_enumeration(const OrientedGraph& point_graph,
                                                  std::size_t cap = kDefaultLoopCap);

/// False iff p is the primitive 2-cycle, or two basic intervals on different
/// branches cover each other and at least one of them stays clear of the
/// branching point (two apex intervals covering each other only realize the
/// fixed point a).
bool is_regular(const TriodPattern& p);

/// True iff the P-linear map has no fixed point besides a, i.e. no basic
/// interval clear of the branching point covers itself.
bool fixes_only_branching_point(const TriodPattern& p);

struct RealizedLoop {
  std::vector<BasicInterval> itinerary;
  RotationPair pair;
};

/// Checks the covering chain of a loop of basic intervals (given by index)
/// and reports the itinerary and rotation pair of the periodic point it
/// realizes. Throws CoverBroken naming the first broken step.
RealizedLoop realize_loop(const TriodPattern& p, std::span<const std::size_t> interval_ids);

struct RealizedAdmissibleLoop {
  std::vector<PointId> itinerary;  // [a, x] for each x
  RotationPair pair;
};

/// Same for a loop of admissible intervals [a, x_i].
RealizedAdmissibleLoop realize_admissible_loop(const TriodPattern& p, std::span<const PointId> points);

/// DOT text with arcs annotated "w=k/3".
std::string to_dot(const OrientedGraph& g, const std::string& name = "G");

}  // namespace triodrot
