#include "triodrot/rotation.hpp"

#include <algorithm>
#include <numeric>

#include "triodrot/error.hpp"

namespace triodrot {

std::string_view color_name(Color c) {
  switch (c) {
    case Color::Green: return "green";
    case Color::Black: return "black";
    case Color::Red: return "red";
  }
  return "?";
}

std::string_view code_class_name(CodeClass c) {
  switch (c) {
    case CodeClass::StrictlyIncreasing: return "strictly_increasing";
    case CodeClass::NonDecreasing: return "non_decreasing";
    case CodeClass::Decreasing: return "decreasing";
    case CodeClass::Undefined: return "undefined";
  }
  return "?";
}

Rational displacement(const TriodPattern& p, PointId u, PointId v) {
  if (u >= p.period() || v >= p.period()) throw Error(ErrorKind::UnknownPoint, "point index out of range");
  return Rational(branch_step(p.branch(u), p.branch(v)), 3);
}

Rational displacement(const TriodPattern& p, std::string_view u, std::string_view v) {
  return displacement(p, p.id(u), p.id(v));
}

RotationData rotation_data(const TriodPattern& p) {
  std::int64_t thirds = 0;
  for (PointId q = 0; q < p.period(); ++q) thirds += branch_step(p.branch(q), p.branch(p.next(q)));
  // Around a closed loop the branch steps sum to a multiple of 3.
  RotationData data;
  auto n = static_cast<std::int64_t>(p.period());
  data.pair = {thirds / 3, n};
  data.number = Rational(data.pair.revolutions, n);
  std::int64_t g = std::gcd(data.pair.revolutions, n);
  data.mrp = {data.number, g};
  return data;
}

std::vector<Color> colors(const TriodPattern& p) {
  std::vector<Color> out(p.period());
  for (PointId q = 0; q < p.period(); ++q) {
    out[q] = static_cast<Color>(branch_step(p.branch(q), p.branch(p.next(q))));
  }
  return out;
}

TriodPattern relabel_branches(const TriodPattern& p, int shift, bool reversed) {
  auto old = p.branches();
  TriodPattern::Branches moved;
  for (int b = 0; b < kBranchCount; ++b) {
    int target = ((shift + (reversed ? -b : b)) % 3 + 3) % 3;
    moved[static_cast<std::size_t>(target)] = old[static_cast<std::size_t>(b)];
  }
  std::vector<std::pair<std::string, std::string>> map;
  map.reserve(p.period());
  for (PointId q = 0; q < p.period(); ++q) map.emplace_back(p.label(q), p.label(p.next(q)));
  return TriodPattern::from_labels(std::move(moved), map);
}

CanonicalOrdering canonical_ordering(const TriodPattern& p) {
  for (int b = 0; b < kBranchCount; ++b) {
    if (p.branch_size(b) == 0) throw Error(ErrorKind::BranchEmpty, "branch " + std::to_string(b) + " is empty");
  }
  for (bool reversed : {false, true}) {
    for (int shift = 0; shift < kBranchCount; ++shift) {
      auto candidate = relabel_branches(p, shift, reversed);
      auto c = colors(candidate);
      bool ok = true;
      for (int b = 0; b < kBranchCount; ++b) ok = ok && c[candidate.at(b, 1)] == Color::Black;
      if (ok) return {std::move(candidate), shift, reversed};
    }
  }
  throw Error(ErrorKind::NoCanonicalOrdering, "innermost points cannot all be made black");
}

CodeAssignment CodeAssignment::rebased(PointId new_base) const {
  CodeAssignment out{new_base, psi};
  Rational shift = psi[new_base];
  for (auto& v : out.psi) v -= shift;
  return out;
}

CodeAssignment code_function(const TriodPattern& p, PointId base) {
  auto rho = rotation_data(p).number;
  if (rho == Rational(1, 3)) throw Error(ErrorKind::CodeUndefinedAtOneThird, "rotation number is 1/3");
  if (base >= p.period()) throw Error(ErrorKind::UnknownPoint, "base index out of range");
  CodeAssignment code{base, std::vector<Rational>(p.period())};
  // Revolutions are counted against the ray of branch 0, so moving the base
  // shifts every code by the same constant.
  std::int64_t thirds = p.branch(base);
  PointId q = base;
  for (std::int64_t k = 1; k < static_cast<std::int64_t>(p.period()); ++k) {
    thirds += branch_step(p.branch(q), p.branch(p.next(q)));
    q = p.next(q);
    code.psi[q] = rho * Rational(k) - Rational(thirds / 3);
  }
  return code;
}

CodeAssignment code_function(const TriodPattern& p, std::string_view base) {
  return code_function(p, p.id(base));
}

CodeAssignment normalized_code(const TriodPattern& p) {
  auto code = code_function(p, 0);
  auto least = static_cast<PointId>(std::min_element(code.psi.begin(), code.psi.end()) - code.psi.begin());
  return code.rebased(least);
}

CodeClass classify_code(const TriodPattern& p) {
  auto rho = rotation_data(p).number;
  if (rho == Rational(1, 3)) return CodeClass::Undefined;
  auto code = code_function(p, 0);
  bool below = rho < Rational(1, 3);
  bool strict = true;
  for (int b = 0; b < kBranchCount; ++b) {
    for (int r = 1; static_cast<std::size_t>(r) < p.branch_size(b); ++r) {
      const auto& inner = code[p.at(b, r)];
      const auto& outer = code[p.at(b, r + 1)];
      if (below ? outer > inner : outer < inner) return CodeClass::Decreasing;
      if (outer == inner) strict = false;
    }
  }
  return strict ? CodeClass::StrictlyIncreasing : CodeClass::NonDecreasing;
}

GreenCheck is_green(const TriodPattern& p) {
  for (PointId x = 0; x < p.period(); ++x) {
    for (PointId y = 0; y < p.period(); ++y) {
      if (p.branch(x) != p.branch(y) || p.rank(x) <= p.rank(y)) continue;
      PointId fx = p.next(x);
      PointId fy = p.next(y);
      if (p.branch(fx) == p.branch(fy) && p.rank(fx) < p.rank(fy)) return {false, std::make_pair(x, y)};
    }
  }
  return {};
}

}  // namespace triodrot
