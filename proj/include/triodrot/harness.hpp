#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "triodrot/pattern.hpp"
#include "triodrot/rational.hpp"
#include "triodrot/rotation.hpp"

namespace triodrot {

/// Compact form of an enumerated pattern: branch sizes plus successor table
/// over spatial indices.
struct PatternCode {
  std::array<std::uint8_t, kBranchCount> sizes{};
  std::vector<std::uint8_t> next;

  friend auto operator<=>(const PatternCode&, const PatternCode&) = default;
};

/// Spatially labelled pattern (x1.., y1.., z1..).
TriodPattern decode(const PatternCode& code);

/// Branch b moved to b + 1.
PatternCode rotate(const PatternCode& code);

/// One line: "b0=[x1,x2] b1=[y1] b2=[z1] orbit=x1>y1>z1>x2".
std::string describe(const TriodPattern& p);

inline constexpr std::size_t kDefaultPeriodCap = 7;

/// kDefaultPeriodCap unless TRIODROT_MAX_PERIOD holds a positive integer.
std::size_t period_cap_from_env();

struct EnumSpec {
  std::size_t period = 2;
  std::size_t cap = kDefaultPeriodCap;
  std::optional<Rational> rotation_number;
  std::optional<CodeClass> code_class;
  std::optional<bool> twist;
  std::optional<bool> strangely_ordered;
  int workers = 0;  // 0: OpenMP default
};

/// Every single n-cycle on every spatial arrangement of n points over three
/// branches, one representative per cyclic branch relabeling (the least of
/// the three encodings). Deterministic order. Throws CapExceeded.
std::vector<PatternCode> enumerate_codes(std::size_t n, std::size_t cap = kDefaultPeriodCap);

/// enumerate_codes decoded, with the spec's filters applied.
std::vector<TriodPattern> enumerate_patterns(const EnumSpec& spec);

/// Census oracle: walks all labelled arrangements without deduplication and
/// sums 1 / (size of the relabeling orbit) over them.
std::size_t naive_census_count(std::size_t n);

enum class Mutation { None, TwistIgnoresRegularity };

struct PropertyResult {
  std::string id;
  std::string statement;
  std::size_t checked = 0;  // patterns the premise applied to
  std::vector<std::string> counterexamples;
};

struct TheoremReport {
  std::size_t max_period = 0;
  std::vector<std::size_t> census;  // patterns per period, index = period
  std::vector<PropertyResult> properties;

  bool passed() const;
  std::size_t counterexample_count() const;
};

struct VerifyOptions {
  Mutation mutation = Mutation::None;
  std::size_t cap = kDefaultPeriodCap;
  bool parallel = true;
  int workers = 0;
  /// Counterexamples kept per property in the report.
  std::size_t keep = 20;
};

/// Runs the property suite over all enumerated patterns of period
/// 2..max_period.
TheoremReport verify_theorems(std::size_t max_period, const VerifyOptions& options = {});

/// The sweep kernels behind verify_theorems, exposed for cross-checking.
TheoremReport sweep_serial(const std::vector<PatternCode>& codes, const VerifyOptions& options);
TheoremReport sweep_parallel(const std::vector<PatternCode>& codes, const VerifyOptions& options);

std::string to_json(const TheoremReport& report);
std::string to_text(const TheoremReport& report);

}  // namespace triodrot
