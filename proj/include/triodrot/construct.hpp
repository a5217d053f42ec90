#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "triodrot/pattern.hpp"
#include "triodrot/rational.hpp"

namespace triodrot {

/// Rotation number and the branch b_j that carries the x points.
struct TwistSpec {
  Rational rho;
  int branch = 0;
};

struct LiftSpec {
  TwistSpec base;
  int k = 2;
};

/// Parses "p/q" and rejects fractions not in lowest terms (BadRho).
Rational parse_rho(std::string_view text);

/// Renames every point "<letter><rank>" with letters x, y, z for branches
/// 0, 1, 2.
TriodPattern spatially_labelled(const TriodPattern& p);

/// Unimodal twist pattern with rotation number p/q < 1/3:
///   b_j     x_1..x_{q-2p}  (x_1..x_p black, the rest green)
///   b_{j+1} y_1..y_p,  b_{j+2} z_1..z_p
///   x_i -> y_i (i <= p),  x_i -> x_{i-p} (i > p),
///   y_i -> z_i,           z_i -> x_{q-3p+i}.
TriodPattern construct_gamma(const TwistSpec& spec);

/// Unimodal twist pattern with rotation number r/s in (1/3, 1/2):
///   b_j     x_1..x_r  (x_1..x_{s-2r} black, the rest red)
///   b_{j+1} y_1..y_{s-2r},  b_{j+2} z_1..z_r
///   x_i -> y_i (i <= s-2r),  x_{s-2r+i} -> z_i,
///   y_i -> z_{3r-s+i},        z_i -> x_i.
TriodPattern construct_delta(const TwistSpec& spec);

/// construct_gamma or construct_delta by the side of 1/3.
TriodPattern construct_twist(const TwistSpec& spec);

/// k interleaved copies of a twist pattern before gluing. Each base point is
/// replaced by k adjacent points, copy 0 outermost. `temporal[i][t]` is the
/// t-th iterate (0-based) of copy i's first point: the base critical point
/// for rho < 1/3, the outermost point of b_j for rho > 1/3.
struct LiftedState {
  LiftSpec spec;
  TriodPattern base;
  TriodPattern::Branches branches;            // spatial labels
  std::vector<PointId> base_orbit;             // base points in temporal order
  std::vector<std::vector<PointId>> temporal;  // [copy][time]
  std::vector<PointId> next;                   // k disjoint cycles

  std::size_t base_period() const noexcept { return base.period(); }
  /// The lift as a pattern; only valid for k = 1.
  TriodPattern as_pattern() const { return TriodPattern::from_positions(branches, next); }
};

LiftedState lift(const LiftSpec& spec);

/// Redirects k images so the copies of a Gamma lift merge into one cycle:
/// c_{1,4} -> c_{2,l}, c_{i,l-1} -> c_{i+1,l} for 1 < i < k, and
/// c_{k,l-1} -> c_{1,5}, with c_{i,l} the p-th point of copy i on b_j
/// counted inward from the copy's outermost point c_{i,4}.
TriodPattern glue_gamma(const LiftedState& lifted);

/// The same for a Delta lift: c_{1,1} -> c_{2,l}, ..., c_{k,l-1} -> c_{1,2},
/// with c_{i,l} the (3r-s+1)-th point of copy i on b_{j+2} counted outward.
TriodPattern glue_delta(const LiftedState& lifted);

/// lift + the matching glue.
TriodPattern construct_strange(const LiftSpec& spec);

}  // namespace triodrot
