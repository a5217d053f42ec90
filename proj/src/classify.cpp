#include "triodrot/classify.hpp"

#include <algorithm>
#include <numeric>

namespace triodrot {

std::string_view placement_name(Placement p) {
  switch (p) {
    case Placement::Interior: return "interior";
    case Placement::FrontierLow: return "frontier_lo";
    case Placement::FrontierHigh: return "frontier_hi";
    case Placement::Degenerate: return "degenerate";
  }
  return "?";
}

Placement placement(const RotationData& rotation, const RotationInterval& interval) {
  if (interval.lo == interval.hi) return Placement::Degenerate;
  if (rotation.number == interval.lo) return Placement::FrontierLow;
  if (rotation.number == interval.hi) return Placement::FrontierHigh;
  return Placement::Interior;
}

Placement placement(const TriodPattern& p) { return placement(rotation_data(p), rotation_interval(p)); }

bool is_primitive_three_cycle(const TriodPattern& p) {
  return p.period() == 3 && p.branch_size(0) == 1 && p.branch_size(1) == 1 && p.branch_size(2) == 1 &&
         rotation_data(p).number == Rational(1, 3);
}

bool is_twist(const TriodPattern& p) {
  if (rotation_data(p).number == Rational(1, 3)) return is_primitive_three_cycle(p);
  return is_regular(p) && classify_code(p) == CodeClass::StrictlyIncreasing;
}

std::optional<BlockStructure> block_structure_with(const TriodPattern& p, std::size_t block_count) {
  auto n = p.period();
  if (block_count <= 1 || block_count >= n || n % block_count != 0) return std::nullopt;
  // Blocks are permuted cyclically by f, so each is one orbit of f^m; follow
  // the orbit of point 0 and cut it into residues mod m.
  auto orbit = temporal_orbit(p, 0);
  std::vector<std::vector<PointId>> blocks(block_count);
  for (std::size_t i = 0; i < n; ++i) blocks[i % block_count].push_back(orbit[i]);
  for (auto& block : blocks) {
    std::sort(block.begin(), block.end());  // same branch => spatial index order is rank order
    int b = p.branch(block.front());
    if (!std::all_of(block.begin(), block.end(), [&](PointId q) { return p.branch(q) == b; })) return std::nullopt;
    if (static_cast<std::size_t>(p.rank(block.back()) - p.rank(block.front())) + 1 != block.size()) {
      return std::nullopt;
    }
  }
  // Quotient: blocks ordered spatially by their innermost point.
  std::vector<std::size_t> order(block_count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return blocks[a].front() < blocks[b].front(); });
  std::vector<PointId> quotient_id(block_count);
  TriodPattern::Branches branches;
  for (std::size_t k = 0; k < block_count; ++k) {
    const auto& block = blocks[order[k]];
    quotient_id[order[k]] = static_cast<PointId>(k);
    branches[static_cast<std::size_t>(p.branch(block.front()))].push_back(p.label(block.front()));
  }
  std::vector<PointId> next(block_count);
  for (std::size_t i = 0; i < block_count; ++i) next[quotient_id[i]] = quotient_id[(i + 1) % block_count];
  BlockStructure out{block_count, {}, TriodPattern::from_positions(std::move(branches), std::move(next))};
  for (auto i : order) out.blocks.push_back(std::move(blocks[i]));
  return out;
}

std::vector<BlockStructure> block_structures(const TriodPattern& p) {
  std::vector<BlockStructure> out;
  for (std::size_t m = 2; m < p.period(); ++m) {
    if (auto s = block_structure_with(p, m)) out.push_back(std::move(*s));
  }
  return out;
}

std::optional<BlockStructure> block_structure(const TriodPattern& p) {
  for (std::size_t m = 2; m < p.period(); ++m) {
    if (auto s = block_structure_with(p, m)) return s;
  }
  return std::nullopt;
}

namespace {

std::optional<BlockSummary> first_block_over_twist(const TriodPattern& p) {
  for (auto& s : block_structures(p)) {
    if (is_twist(s.quotient)) return BlockSummary{s.block_count, std::move(s.quotient)};
  }
  return std::nullopt;
}

}  // namespace

bool has_block_over_twist(const TriodPattern& p) { return first_block_over_twist(p).has_value(); }

bool is_strangely_ordered(const TriodPattern& p) {
  return at_endpoint(placement(p)) && !is_twist(p) && !has_block_over_twist(p);
}

ColorSummary summarize(const std::vector<Color>& c) {
  ColorSummary s;
  for (auto x : c) {
    switch (x) {
      case Color::Green: ++s.green; break;
      case Color::Black: ++s.black; break;
      case Color::Red: ++s.red; break;
    }
  }
  return s;
}

bool ClassificationReport::consistent() const {
  if (strangely_ordered != (at_endpoint(placement) && !twist && !block_over_twist)) return false;
  if (codes.has_value() != (code_class != CodeClass::Undefined)) return false;
  if ((placement == Placement::Degenerate) != (interval.lo == interval.hi)) return false;
  return interval.lo <= rotation.number && rotation.number <= interval.hi;
}

ClassificationReport classify(const TriodPattern& p) {
  ClassificationReport r;
  r.rotation = rotation_data(p);
  r.interval = rotation_interval(p);
  r.code_class = classify_code(p);
  if (r.code_class != CodeClass::Undefined) r.codes = normalized_code(p);
  r.colors = summarize(colors(p));
  r.regular = is_regular(p);
  r.green = is_green(p).green;
  r.twist = is_twist(p);
  r.block_over_twist = first_block_over_twist(p);
  r.placement = placement(r.rotation, r.interval);
  r.strangely_ordered = at_endpoint(r.placement) && !r.twist && !r.block_over_twist;
  r.unimodal = is_unimodal(p).unimodal;
  return r;
}

}  // namespace triodrot
