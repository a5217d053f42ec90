#include "triodrot/construct.hpp"

#include <algorithm>
#include <numeric>

#include "triodrot/error.hpp"
#include "triodrot/rotation.hpp"

namespace triodrot {

namespace {

constexpr std::array<char, kBranchCount> kLetters{'x', 'y', 'z'};

int mod3(int b) { return ((b % 3) + 3) % 3; }

std::string spatial_label(int branch, int rank) {
  return std::string(1, kLetters[static_cast<std::size_t>(branch)]) + std::to_string(rank);
}

// Builds a pattern from branch sizes and a map on (branch, rank) positions.
class PositionMap {
 public:
  explicit PositionMap(std::array<std::size_t, kBranchCount> sizes) : sizes_(sizes) {
    std::size_t n = 0;
    for (std::size_t b = 0; b < kBranchCount; ++b) {
      offset_[b] = n;
      n += sizes[b];
    }
    next_.assign(n, static_cast<PointId>(n));
  }

  PointId id(int branch, std::size_t rank) const {
    return static_cast<PointId>(offset_[static_cast<std::size_t>(mod3(branch))] + rank - 1);
  }

  void set(int from_branch, std::size_t from_rank, int to_branch, std::size_t to_rank) {
    next_[id(from_branch, from_rank)] = id(to_branch, to_rank);
  }

  TriodPattern build() const {
    TriodPattern::Branches branches;
    for (int b = 0; b < kBranchCount; ++b) {
      for (std::size_t r = 1; r <= sizes_[static_cast<std::size_t>(b)]; ++r) {
        branches[static_cast<std::size_t>(b)].push_back(spatial_label(b, static_cast<int>(r)));
      }
    }
    return TriodPattern::from_positions(std::move(branches), next_);
  }

 private:
  std::array<std::size_t, kBranchCount> sizes_;
  std::array<std::size_t, kBranchCount> offset_{};
  std::vector<PointId> next_;
};

void check_branch(int branch) {
  if (branch < 0 || branch >= kBranchCount) throw Error(ErrorKind::BadBranchIndex, std::to_string(branch));
}

// Copy i of base point q sits at rank (rank(q) - 1) * k + (k - i).
PointId lifted_id(const TriodPattern& base, int k, PointId q, int copy,
                  const std::array<std::size_t, kBranchCount>& offset) {
  auto b = static_cast<std::size_t>(base.branch(q));
  auto rank = static_cast<std::size_t>((base.rank(q) - 1) * k + (k - copy));
  return static_cast<PointId>(offset[b] + rank - 1);
}

std::size_t temporal_index(const LiftedState& lifted, PointId base_point) {
  auto it = std::find(lifted.base_orbit.begin(), lifted.base_orbit.end(), base_point);
  if (it == lifted.base_orbit.end()) throw Error(ErrorKind::GlueFailed, "base point missing from the lift");
  return static_cast<std::size_t>(it - lifted.base_orbit.begin());
}

// Applies the redirect chain head -> c_{2,l}, c_{i,l-1} -> c_{i+1,l},
// c_{k,l-1} -> tail and checks the result is a single cycle.
TriodPattern glue(const LiftedState& lifted, std::size_t head, std::size_t ell, std::size_t tail) {
  int k = lifted.spec.k;
  if (k < 2) throw Error(ErrorKind::BadMultiplicity, "gluing needs k >= 2, got " + std::to_string(k));
  auto q = lifted.base_period();
  auto at = [&](int copy, std::size_t t) { return lifted.temporal[static_cast<std::size_t>(copy)][t % q]; };
  auto next = lifted.next;
  std::size_t before = (ell + q - 1) % q;
  next[at(0, head)] = at(1, ell);
  for (int i = 1; i + 1 < k; ++i) next[at(i, before)] = at(i + 1, ell);
  next[at(k - 1, before)] = at(0, tail);
  try {
    return TriodPattern::from_positions(lifted.branches, std::move(next));
  } catch (const Error& e) {
    throw Error(ErrorKind::GlueFailed, e.what());
  }
}

}  // namespace

Rational parse_rho(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) throw Error(ErrorKind::BadRho, "expected p/q, got '" + std::string(text) + "'");
  Rational num;
  Rational den;
  try {
    num = Rational::parse(text.substr(0, slash));
    den = Rational::parse(text.substr(slash + 1));
  } catch (const Error&) {
    throw Error(ErrorKind::BadRho, "expected p/q, got '" + std::string(text) + "'");
  }
  if (den.num() <= 0 || std::gcd(num.num(), den.num()) != 1) {
    throw Error(ErrorKind::BadRho, "'" + std::string(text) + "' is not in lowest terms");
  }
  return Rational(num.num(), den.num());
}

TriodPattern spatially_labelled(const TriodPattern& p) {
  TriodPattern::Branches branches;
  for (int b = 0; b < kBranchCount; ++b) {
    for (std::size_t r = 1; r <= p.branch_size(b); ++r) {
      branches[static_cast<std::size_t>(b)].push_back(spatial_label(b, static_cast<int>(r)));
    }
  }
  return TriodPattern::from_positions(std::move(branches), p.successors());
}

TriodPattern construct_gamma(const TwistSpec& spec) {
  check_branch(spec.branch);
  auto p = static_cast<std::size_t>(spec.rho.num());
  auto q = static_cast<std::size_t>(spec.rho.den());
  if (spec.rho <= Rational(0) || spec.rho >= Rational(1, 3)) {
    throw Error(ErrorKind::BadRho, spec.rho.str() + " is not in (0, 1/3)");
  }
  int j = spec.branch;
  std::size_t nx = q - 2 * p;
  std::array<std::size_t, kBranchCount> sizes{};
  sizes[static_cast<std::size_t>(j)] = nx;
  sizes[static_cast<std::size_t>(mod3(j + 1))] = p;
  sizes[static_cast<std::size_t>(mod3(j + 2))] = p;
  PositionMap map(sizes);
  for (std::size_t i = 1; i <= nx; ++i) {
    if (i <= p) {
      map.set(j, i, j + 1, i);
    } else {
      map.set(j, i, j, i - p);
    }
  }
  for (std::size_t i = 1; i <= p; ++i) {
    map.set(j + 1, i, j + 2, i);
    map.set(j + 2, i, j, q - 3 * p + i);
  }
  return map.build();
}

TriodPattern construct_delta(const TwistSpec& spec) {
  check_branch(spec.branch);
  auto r = static_cast<std::size_t>(spec.rho.num());
  auto s = static_cast<std::size_t>(spec.rho.den());
  if (spec.rho <= Rational(1, 3) || spec.rho >= Rational(1, 2)) {
    throw Error(ErrorKind::BadRho, spec.rho.str() + " is not in (1/3, 1/2)");
  }
  int j = spec.branch;
  std::size_t black = s - 2 * r;
  std::size_t red = 3 * r - s;
  std::array<std::size_t, kBranchCount> sizes{};
  sizes[static_cast<std::size_t>(j)] = r;
  sizes[static_cast<std::size_t>(mod3(j + 1))] = black;
  sizes[static_cast<std::size_t>(mod3(j + 2))] = r;
  PositionMap map(sizes);
  for (std::size_t i = 1; i <= black; ++i) {
    map.set(j, i, j + 1, i);
    map.set(j + 1, i, j + 2, red + i);
  }
  for (std::size_t i = 1; i <= red; ++i) map.set(j, black + i, j + 2, i);
  for (std::size_t i = 1; i <= r; ++i) map.set(j + 2, i, j, i);
  return map.build();
}

TriodPattern construct_twist(const TwistSpec& spec) {
  if (spec.rho < Rational(1, 3)) return construct_gamma(spec);
  return construct_delta(spec);
}

LiftedState lift(const LiftSpec& spec) {
  if (spec.k < 1) throw Error(ErrorKind::BadMultiplicity, "k must be positive, got " + std::to_string(spec.k));
  auto base = construct_twist(spec.base);
  int j = spec.base.branch;
  PointId first = 0;
  if (spec.base.rho < Rational(1, 3)) {
    auto fold = is_unimodal(base);
    if (!fold.unimodal) throw Error(ErrorKind::GlueFailed, "base twist pattern is not unimodal");
    first = *fold.critical;
  } else {
    first = base.at(j, static_cast<int>(base.branch_size(j)));
  }
  auto k = spec.k;
  auto uk = static_cast<std::size_t>(k);
  std::array<std::size_t, kBranchCount> offset{};
  LiftedState out{spec, base, {}, {}, {}, {}};
  std::size_t n = 0;
  for (int b = 0; b < kBranchCount; ++b) {
    auto bi = static_cast<std::size_t>(b);
    offset[bi] = n;
    n += base.branch_size(b) * uk;
    for (std::size_t r = 1; r <= base.branch_size(b) * uk; ++r) {
      out.branches[bi].push_back(spatial_label(b, static_cast<int>(r)));
    }
  }
  auto orbit = temporal_orbit(base, first);
  out.base_orbit = orbit;
  out.next.assign(n, 0);
  out.temporal.assign(uk, {});
  for (int copy = 0; copy < k; ++copy) {
    for (auto q : orbit) {
      out.temporal[static_cast<std::size_t>(copy)].push_back(lifted_id(base, k, q, copy, offset));
      out.next[lifted_id(base, k, q, copy, offset)] = lifted_id(base, k, base.next(q), copy, offset);
    }
  }
  return out;
}

TriodPattern glue_gamma(const LiftedState& lifted) {
  const auto& base = lifted.base;
  auto rho = lifted.spec.base.rho;
  if (rho >= Rational(1, 3)) throw Error(ErrorKind::BadRho, "glue_gamma needs rho < 1/3");
  int j = lifted.spec.base.branch;
  auto p = static_cast<int>(rho.num());
  auto outermost = base.at(j, static_cast<int>(base.branch_size(j)));
  if (lifted.base_orbit[3] != outermost) {
    throw Error(ErrorKind::GlueFailed, "fourth iterate of the critical point is not outermost on b_j");
  }
  auto ell = temporal_index(lifted, base.at(j, static_cast<int>(base.branch_size(j)) - p + 1));
  return glue(lifted, 3, ell, 4);
}

TriodPattern glue_delta(const LiftedState& lifted) {
  const auto& base = lifted.base;
  const auto& rho = lifted.spec.base.rho;
  if (rho <= Rational(1, 3)) throw Error(ErrorKind::BadRho, "glue_delta needs rho > 1/3");
  int j = lifted.spec.base.branch;
  auto red = static_cast<int>(3 * rho.num() - rho.den());
  auto ell = temporal_index(lifted, base.at(mod3(j + 2), red + 1));
  return glue(lifted, 0, ell, 1);
}

TriodPattern construct_strange(const LiftSpec& spec) {
  if (spec.k < 2) throw Error(ErrorKind::BadMultiplicity, "k must be at least 2, got " + std::to_string(spec.k));
  auto lifted = lift(spec);
  if (spec.base.rho < Rational(1, 3)) return glue_gamma(lifted);
  if (spec.base.branch == 0) return glue_delta(lifted);
  // Delta gluing is stated for j = 0; other branches are rotations of it.
  auto at_zero = glue_delta(lift({{spec.base.rho, 0}, spec.k}));
  return spatially_labelled(relabel_branches(at_zero, spec.base.branch, false));
}

}  // namespace triodrot
