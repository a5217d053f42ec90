#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "triodrot/pattern.hpp"
#include "triodrot/rational.hpp"

namespace triodrot {

enum class Color { Green, Black, Red };

std::string_view color_name(Color c);

/// Branch steps from `from` to `to`, anticlockwise, in {0, 1, 2}.
inline int branch_step(int from, int to) noexcept { return ((to - from) % 3 + 3) % 3; }

/// k/3 where the branch index advances by k (mod 3).
Rational displacement(const TriodPattern& p, PointId u, PointId v);
Rational displacement(const TriodPattern& p, std::string_view u, std::string_view v);

struct RotationPair {
  std::int64_t revolutions = 0;
  std::int64_t period = 0;
  friend bool operator==(const RotationPair&, const RotationPair&) = default;
};

struct ModifiedRotationPair {
  Rational number;
  std::int64_t multiplicity = 0;
  friend bool operator==(const ModifiedRotationPair&, const ModifiedRotationPair&) = default;
};

struct RotationData {
  RotationPair pair;
  Rational number;
  ModifiedRotationPair mrp;
};

RotationData rotation_data(const TriodPattern& p);

/// Colour of every point, indexed by PointId.
std::vector<Color> colors(const TriodPattern& p);

/// Moves branch b to (shift + b) mod 3, or to (shift - b) mod 3 when
/// `reversed`. Labels and the map are untouched; reversal swaps Black and Red.
TriodPattern relabel_branches(const TriodPattern& p, int shift, bool reversed);

struct CanonicalOrdering {
  TriodPattern pattern;
  int shift = 0;
  bool reversed = false;
};

/// First relabeling among the three rotations, then the three reversed
/// rotations, under which the innermost point of every branch is Black.
CanonicalOrdering canonical_ordering(const TriodPattern& p);

struct CodeAssignment {
  PointId base = 0;
  std::vector<Rational> psi;  // indexed by PointId

  const Rational& operator[](PointId q) const { return psi[q]; }
  /// The same code shifted so that `new_base` reads 0.
  CodeAssignment rebased(PointId new_base) const;
};

/// psi(f^k(x0)) = k*rho - floor(t_k), with t_k the cumulative displacement
/// measured from the ray of branch 0 (t_0 = branch(x0) / 3), which makes
/// codes for different bases differ by a constant.
CodeAssignment code_function(const TriodPattern& p, PointId base);
CodeAssignment code_function(const TriodPattern& p, std::string_view base);

/// Code rebased onto the point of least code (ties broken by spatial
/// order). This is the normalisation used for reports, coherent strips and
/// the semi-conjugacy.
CodeAssignment normalized_code(const TriodPattern& p);

enum class CodeClass { StrictlyIncreasing, NonDecreasing, Decreasing, Undefined };

std::string_view code_class_name(CodeClass c);

CodeClass classify_code(const TriodPattern& p);

struct GreenCheck {
  bool green = true;
  /// (x, y) with x farther out than y, images in one branch but not in order.
  std::optional<std::pair<PointId, PointId>> violation;
};

GreenCheck is_green(const TriodPattern& p);

}  // namespace triodrot
