#pragma once

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "triodrot/construct.hpp"
#include "triodrot/pattern.hpp"

namespace testing {

using namespace triodrot;

inline std::string data_path(const std::string& name) { return std::string(TRIODROT_TEST_DATA) + "/" + name; }

inline std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name), std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline TriodPattern p8() { return parse_pattern(read_data("P8.json")); }
inline TriodPattern p3() { return parse_pattern(read_data("P3.json")); }
inline TriodPattern g29() { return construct_gamma({Rational(2, 9), 0}); }
inline TriodPattern d25() { return construct_delta({Rational(2, 5), 0}); }
inline TriodPattern s18() { return construct_strange({{Rational(2, 9), 0}, 2}); }
inline TriodPattern s15() { return construct_strange({{Rational(2, 5), 0}, 3}); }

/// Uniformly random branch sizes and a uniformly random n-cycle.
inline TriodPattern random_pattern(std::mt19937& rng, std::size_t n) {
  std::array<std::size_t, kBranchCount> sizes{};
  std::uniform_int_distribution<int> pick(0, kBranchCount - 1);
  for (std::size_t i = 0; i < n; ++i) ++sizes[static_cast<std::size_t>(pick(rng))];
  TriodPattern::Branches branches;
  const char letters[] = {'u', 'v', 'w'};
  for (std::size_t b = 0; b < kBranchCount; ++b) {
    for (std::size_t r = 1; r <= sizes[b]; ++r) branches[b].push_back(letters[b] + std::to_string(r));
  }
  std::vector<PointId> order(n);
  std::iota(order.begin(), order.end(), PointId{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<PointId> next(n);
  for (std::size_t i = 0; i < n; ++i) next[order[i]] = order[(i + 1) % n];
  return TriodPattern::from_positions(std::move(branches), std::move(next));
}

}  // namespace testing
