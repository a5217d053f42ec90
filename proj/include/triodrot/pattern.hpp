#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace triodrot {

inline constexpr int kBranchCount = 3;

/// Index of a pattern point. Points are numbered in spatial order: branch 0
/// from the branching point outward, then branch 1, then branch 2.
using PointId = std::uint32_t;

/// A location on the triod restricted to the pattern's skeleton: either the
/// branching point (rank 0) or the point of the given rank on a branch.
struct TreePoint {
  int branch = -1;  // -1 for the branching point
  int rank = 0;     // 0 for the branching point, 1 = nearest to it

  static constexpr TreePoint apex() { return {}; }
  bool is_apex() const noexcept { return rank == 0; }
  friend bool operator==(const TreePoint&, const TreePoint&) = default;
};

/// True when `x` lies on the geodesic between `s` and `e` in the triod.
bool on_geodesic(TreePoint s, TreePoint e, TreePoint x) noexcept;

/// A cycle on the triod up to branch-preserving conjugacy: n labeled points
/// spread over three ordered branches, and the cyclic permutation they form.
/// Immutable once built.
class TriodPattern {
 public:
  using Branches = std::array<std::vector<std::string>, kBranchCount>;

  /// `branches[b]` lists labels of branch b outward from the branching point;
  /// `next[i]` is the image of the point with spatial index i.
  static TriodPattern from_positions(Branches branches, std::vector<PointId> next);

  /// Same, with the map given label to label.
  static TriodPattern from_labels(Branches branches,
                                  const std::vector<std::pair<std::string, std::string>>& map);

  std::size_t period() const noexcept { return labels_.size(); }
  std::size_t branch_size(int branch) const noexcept { return sizes_[static_cast<std::size_t>(branch)]; }
  int occupied_branches() const noexcept;

  const std::string& label(PointId p) const { return labels_[p]; }
  int branch(PointId p) const { return branch_of_[p]; }
  int rank(PointId p) const { return rank_of_[p]; }
  TreePoint where(PointId p) const { return {branch_of_[p], rank_of_[p]}; }
  PointId next(PointId p) const { return next_[p]; }
  PointId prev(PointId p) const { return prev_[p]; }

  /// Point at (branch, rank), rank counted from 1.
  PointId at(int branch, int rank) const;
  std::optional<PointId> find(std::string_view label) const;
  /// Like find, but throws Error(UnknownPoint).
  PointId id(std::string_view label) const;

  /// Image of a skeleton location under the P-linear map (the apex is fixed).
  TreePoint image(TreePoint t) const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<PointId>& successors() const noexcept { return next_; }
  Branches branches() const;

  friend bool operator==(const TriodPattern& a, const TriodPattern& b) {
    return a.labels_ == b.labels_ && a.sizes_ == b.sizes_ && a.next_ == b.next_;
  }

 private:
  TriodPattern() = default;

  std::vector<std::string> labels_;
  std::array<std::size_t, kBranchCount> sizes_{};
  std::array<std::size_t, kBranchCount> offset_{};
  std::vector<int> branch_of_;
  std::vector<int> rank_of_;
  std::vector<PointId> next_;
  std::vector<PointId> prev_;
  std::unordered_map<std::string, PointId> index_;
};

/// Component of [P] minus (P and the branching point). `lower` is empty when
/// the interval runs from the branching point to `upper`.
struct BasicInterval {
  int branch = 0;
  std::optional<PointId> lower;
  PointId upper = 0;
  std::size_t index = 0;

  TreePoint lower_point(const TriodPattern& p) const {
    return lower ? p.where(*lower) : TreePoint::apex();
  }
  TreePoint upper_point(const TriodPattern& p) const { return p.where(upper); }
  std::string name(const TriodPattern& p) const;
};

TriodPattern parse_pattern(std::string_view document);
std::string serialize_pattern(const TriodPattern& p);

std::vector<BasicInterval> basic_intervals(const TriodPattern& p);

/// start, f(start), ..., f^{n-1}(start).
std::vector<PointId> temporal_orbit(const TriodPattern& p, PointId start);
std::vector<PointId> temporal_orbit(const TriodPattern& p, std::string_view start);

struct UnimodalResult {
  bool unimodal = false;
  std::optional<PointId> critical;  // set when unimodal
  std::vector<PointId> folds;       // every fold found, spatial order
};

/// A fold is a point whose inner and outer neighbours (the apex standing in
/// as inner neighbour of rank-1 points) have images on the same side of its
/// own image. Unimodal means exactly one fold.
UnimodalResult is_unimodal(const TriodPattern& p);

}  // namespace triodrot
