#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "triodrot/pattern.hpp"
#include "triodrot/rational.hpp"
#include "triodrot/rotation.hpp"

namespace triodrot {

/// Maximal run of consecutive points on one branch whose codes share the
/// same integer part.
struct CoherentStrip {
  int branch = 0;
  std::vector<PointId> points;  // rank order
  int min_rank = 0;
  int max_rank = 0;
  std::int64_t integral = 0;  // common floor of the code
};

/// Strips of the normalised code (least code = 0), ordered by branch and
/// inner rank. Throws CodeUndefinedAtOneThird.
std::vector<CoherentStrip> coherent_strips(const TriodPattern& p);

/// Circle coordinate of every point, conjugating f on P to rotation by the
/// reduced rotation number.
struct SemiConjugacy {
  Rational rotation;         // p/q in lowest terms
  CodeAssignment code;       // the normalised code phi was read from
  std::vector<Rational> phi; // in [0, 1), indexed by PointId
  std::vector<CoherentStrip> strips;
};

/// phi = code mod 1. Throws CodeUndefinedAtOneThird.
SemiConjugacy build_semiconjugacy(const TriodPattern& p);

struct SemiConjugacyCheck {
  bool ok = true;
  std::optional<PointId> witness;
  std::string reason;
};

/// Exact check of phi(f(x)) = phi(x) + rotation (mod 1) at every point and
/// of monotonicity of phi along each coherent strip of p.
SemiConjugacyCheck verify_semiconjugacy(const SemiConjugacy& s, const TriodPattern& p);

}  // namespace triodrot
