#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "triodrot/graph.hpp"
#include "triodrot/pattern.hpp"
#include "triodrot/rotation.hpp"

namespace triodrot {

/// Where the rotation number sits in the forced rotation interval.
/// Degenerate means the interval is a single point.
enum class Placement { Interior, FrontierLow, FrontierHigh, Degenerate };

std::string_view placement_name(Placement p);

/// Frontier in the wide sense: an endpoint of the interval, degenerate
/// intervals included.
inline bool at_endpoint(Placement p) noexcept { return p != Placement::Interior; }

Placement placement(const TriodPattern& p);
Placement placement(const RotationData& rotation, const RotationInterval& interval);

bool is_primitive_three_cycle(const TriodPattern& p);

/// At rotation number 1/3 only the primitive 3-cycle; otherwise regular with
/// a strictly increasing code.
bool is_twist(const TriodPattern& p);

struct BlockStructure {
  std::size_t block_count = 0;
  std::vector<std::vector<PointId>> blocks;  // each in rank order, listed by quotient point
  TriodPattern quotient;                     // labelled by each block's innermost point
};

/// Block structure with `block_count` blocks, if the orbits of f^block_count
/// form one: each orbit confined to a branch and occupying consecutive ranks.
std::optional<BlockStructure> block_structure_with(const TriodPattern& p, std::size_t block_count);

/// First valid block structure scanning block counts 1 < m < n upward.
std::optional<BlockStructure> block_structure(const TriodPattern& p);

/// Every valid block structure, by increasing block count.
std::vector<BlockStructure> block_structures(const TriodPattern& p);

bool has_block_over_twist(const TriodPattern& p);

/// Endpoint of its forced rotation interval, yet neither a twist nor a block
/// structure over a twist.
bool is_strangely_ordered(const TriodPattern& p);

struct ColorSummary {
  std::size_t green = 0;
  std::size_t black = 0;
  std::size_t red = 0;
};

ColorSummary summarize(const std::vector<Color>& c);

struct BlockSummary {
  std::size_t block_count = 0;
  TriodPattern quotient;
};

struct ClassificationReport {
  RotationData rotation;
  RotationInterval interval;
  CodeClass code_class = CodeClass::Undefined;
  std::optional<CodeAssignment> codes;  // normalised; absent at rotation number 1/3
  ColorSummary colors;
  bool regular = false;
  bool green = false;
  bool twist = false;
  std::optional<BlockSummary> block_over_twist;
  Placement placement = Placement::Interior;
  bool strangely_ordered = false;
  bool unimodal = false;

  /// Internal consistency: strange exactly when at an endpoint and neither
  /// twist nor block over twist, rho inside the interval, codes present iff
  /// defined, Degenerate iff the interval is a point.
  bool consistent() const;
};

ClassificationReport classify(const TriodPattern& p);

}  // namespace triodrot
