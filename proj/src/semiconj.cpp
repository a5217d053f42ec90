#include "triodrot/semiconj.hpp"

namespace triodrot {

namespace {

std::vector<CoherentStrip> strips_of(const TriodPattern& p, const CodeAssignment& code) {
  std::vector<CoherentStrip> out;
  for (int b = 0; b < kBranchCount; ++b) {
    for (int r = 1; static_cast<std::size_t>(r) <= p.branch_size(b); ++r) {
      auto q = p.at(b, r);
      auto integral = code[q].floor();
      if (out.empty() || out.back().branch != b || out.back().integral != integral) {
        out.push_back({b, {}, r, r, integral});
      }
      out.back().points.push_back(q);
      out.back().max_rank = r;
    }
  }
  return out;
}

}  // namespace

std::vector<CoherentStrip> coherent_strips(const TriodPattern& p) { return strips_of(p, normalized_code(p)); }

SemiConjugacy build_semiconjugacy(const TriodPattern& p) {
  SemiConjugacy s;
  s.code = normalized_code(p);
  s.rotation = rotation_data(p).number;
  s.phi.reserve(p.period());
  for (const auto& v : s.code.psi) s.phi.push_back(v.frac());
  s.strips = strips_of(p, s.code);
  return s;
}

SemiConjugacyCheck verify_semiconjugacy(const SemiConjugacy& s, const TriodPattern& p) {
  if (s.phi.size() != p.period()) return {false, std::nullopt, "phi has the wrong number of entries"};
  for (PointId x = 0; x < p.period(); ++x) {
    if (s.phi[p.next(x)] != (s.phi[x] + s.rotation).frac()) {
      return {false, x, "phi(f(" + p.label(x) + ")) != phi(" + p.label(x) + ") + " + s.rotation.str() + " mod 1"};
    }
  }
  for (const auto& strip : coherent_strips(p)) {
    bool up = true;
    bool down = true;
    for (std::size_t i = 1; i < strip.points.size(); ++i) {
      const auto& inner = s.phi[strip.points[i - 1]];
      const auto& outer = s.phi[strip.points[i]];
      up = up && inner <= outer;
      down = down && inner >= outer;
      if (!up && !down) return {false, strip.points[i], "phi not monotone on the strip through " + p.label(strip.points[i])};
    }
  }
  return {};
}

}  // namespace triodrot
