#include "triodrot/harness.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "triodrot/classify.hpp"
#include "triodrot/error.hpp"
#include "triodrot/graph.hpp"
#include "triodrot/semiconj.hpp"

namespace triodrot {

namespace {

constexpr std::array<char, kBranchCount> kLetters{'x', 'y', 'z'};

std::array<std::size_t, kBranchCount> offsets(const std::array<std::uint8_t, kBranchCount>& sizes) {
  return {0, sizes[0], static_cast<std::size_t>(sizes[0] + sizes[1])};
}

bool is_single_cycle(const std::vector<std::uint8_t>& next) {
  std::size_t length = 1;
  for (auto q = next[0]; q != 0; q = next[q]) {
    if (++length > next.size()) return false;
  }
  return length == next.size();
}

// Calls visit(code) for every arrangement and every n-cycle, in a fixed order.
void for_each_labelled(std::size_t n, const std::function<void(const PatternCode&)>& visit) {
  std::vector<std::uint8_t> tail(n - 1);
  for (std::size_t m0 = n + 1; m0-- > 0;) {
    for (std::size_t m1 = n - m0 + 1; m1-- > 0;) {
      PatternCode code;
      code.sizes = {static_cast<std::uint8_t>(m0), static_cast<std::uint8_t>(m1),
                    static_cast<std::uint8_t>(n - m0 - m1)};
      code.next.assign(n, 0);
      std::iota(tail.begin(), tail.end(), std::uint8_t{1});
      do {
        // The cycle 0 -> tail[0] -> ... -> tail[n-2] -> 0.
        std::uint8_t from = 0;
        for (auto t : tail) {
          code.next[from] = t;
          from = t;
        }
        code.next[from] = 0;
        visit(code);
      } while (std::next_permutation(tail.begin(), tail.end()));
    }
  }
}

}  // namespace

TriodPattern decode(const PatternCode& code) {
  TriodPattern::Branches branches;
  for (std::size_t b = 0; b < kBranchCount; ++b) {
    for (std::size_t r = 1; r <= code.sizes[b]; ++r) branches[b].push_back(kLetters[b] + std::to_string(r));
  }
  return TriodPattern::from_positions(std::move(branches), {code.next.begin(), code.next.end()});
}

PatternCode rotate(const PatternCode& code) {
  PatternCode out;
  out.sizes = {code.sizes[2], code.sizes[0], code.sizes[1]};
  auto old_off = offsets(code.sizes);
  auto new_off = offsets(out.sizes);
  auto n = code.next.size();
  std::vector<std::uint8_t> moved(n);
  for (std::size_t b = 0; b < kBranchCount; ++b) {
    for (std::size_t r = 0; r < code.sizes[b]; ++r) {
      moved[old_off[b] + r] = static_cast<std::uint8_t>(new_off[(b + 1) % kBranchCount] + r);
    }
  }
  out.next.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) out.next[moved[i]] = moved[code.next[i]];
  return out;
}

std::string describe(const TriodPattern& p) {
  std::ostringstream os;
  auto branches = p.branches();
  for (std::size_t b = 0; b < kBranchCount; ++b) {
    os << (b ? " " : "") << "b" << b << "=[";
    for (std::size_t i = 0; i < branches[b].size(); ++i) os << (i ? "," : "") << branches[b][i];
    os << "]";
  }
  const auto& labels = p.labels();
  auto least = static_cast<PointId>(std::min_element(labels.begin(), labels.end()) - labels.begin());
  os << " orbit=";
  bool first = true;
  for (auto q : temporal_orbit(p, least)) {
    os << (first ? "" : ">") << p.label(q);
    first = false;
  }
  return os.str();
}

std::size_t period_cap_from_env() {
  if (const char* env = std::getenv("TRIODROT_MAX_PERIOD")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultPeriodCap;
}

std::vector<PatternCode> enumerate_codes(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw Error(ErrorKind::CapExceeded, "period " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  }
  if (n < 2) throw Error(ErrorKind::CapExceeded, "enumeration needs period >= 2");
  std::vector<PatternCode> out;
  for_each_labelled(n, [&](const PatternCode& code) {
    auto r1 = rotate(code);
    auto r2 = rotate(r1);
    if (code <= r1 && code <= r2) out.push_back(code);
  });
  return out;
}

std::vector<TriodPattern> enumerate_patterns(const EnumSpec& spec) {
  auto codes = enumerate_codes(spec.period, spec.cap);
  bool needs_report = spec.twist || spec.strangely_ordered;
  std::vector<std::optional<TriodPattern>> kept(codes.size());
#ifdef _OPENMP
  int workers = spec.workers > 0 ? spec.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 64) num_threads(workers)
#endif
  for (std::size_t i = 0; i < codes.size(); ++i) {
    auto p = decode(codes[i]);
    if (spec.rotation_number && rotation_data(p).number != *spec.rotation_number) continue;
    if (spec.code_class && classify_code(p) != *spec.code_class) continue;
    if (needs_report) {
      auto report = classify(p);
      if (spec.twist && report.twist != *spec.twist) continue;
      if (spec.strangely_ordered && report.strangely_ordered != *spec.strangely_ordered) continue;
    }
    kept[i] = std::move(p);
  }
  std::vector<TriodPattern> out;
  for (auto& p : kept) {
    if (p) out.push_back(std::move(*p));
  }
  return out;
}

std::size_t naive_census_count(std::size_t n) {
  // 3 * (number of orbits) = sum over arrangements of 3 / |orbit|.
  std::size_t thirds = 0;
  for_each_labelled(n, [&](const PatternCode& code) {
    if (!is_single_cycle(code.next)) return;
    auto r1 = rotate(code);
    thirds += (r1 == code) ? 3 : 1;  // orbit size is 1 or 3
  });
  return thirds / 3;
}

bool TheoremReport::passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& r) { return r.counterexamples.empty(); });
}

std::size_t TheoremReport::counterexample_count() const {
  std::size_t total = 0;
  for (const auto& r : properties) total += r.counterexamples.size();
  return total;
}

namespace {

bool twist_under(const TriodPattern& p, const RotationData& rd, Mutation mutation) {
  if (rd.number == Rational(1, 3)) return is_primitive_three_cycle(p);
  bool regular_ok = mutation == Mutation::TwistIgnoresRegularity || is_regular(p);
  return regular_ok && classify_code(p) == CodeClass::StrictlyIncreasing;
}

// Everything the property suite looks at for one pattern.
struct Facts {
  // Generic checks, made on the pattern as enumerated.
  RotationInterval interval;
  RotationInterval oracle_interval;
  bool audit_ok = true;
  bool report_consistent = true;
  bool code_defined = false;
  bool code_closes = true;
  bool semiconj_relation = true;
  bool semiconj_monotone = true;
  bool monotone_applies = false;

  bool unique_fixed_point = false;
  bool given_regular = false;
  bool given_twist = false;
  bool has_canonical = false;

  // Theorem facts, read off the canonically ordered pattern. The theorems
  // assume a canonical ordering, so patterns without one are outside.
  bool in_domain = false;
  RotationData rotation;
  CodeClass code_class = CodeClass::Undefined;
  bool equal_codes_in_branch = false;
  bool coprime = false;
  bool regular = false;
  bool green = false;
  bool twist = false;
  bool block_over_twist = false;
  Placement placement = Placement::Interior;
};

void gather_generic(const TriodPattern& p, Facts& f) {
  auto rotation = rotation_data(p);
  auto graph = point_graph(p);
  f.interval = rotation_interval(graph);
  f.oracle_interval = rotation_interval_by_enumeration(graph);

  std::int64_t thirds = 0;
  for (PointId x = 0; x < p.period(); ++x) {
    thirds += branch_step(p.branch(x), p.branch(p.next(x)));
    if (!graph.has_arc(x, p.next(x))) f.audit_ok = false;
  }
  for (const auto& a : graph.arcs) {
    if (a.weight != branch_step(p.branch(static_cast<PointId>(a.from)), p.branch(static_cast<PointId>(a.to)))) {
      f.audit_ok = false;
    }
  }
  if (thirds % 3 != 0 || rotation.number != Rational(thirds, 3 * static_cast<std::int64_t>(p.period()))) {
    f.audit_ok = false;
  }
  if (rotation.number < f.interval.lo || rotation.number > f.interval.hi) f.audit_ok = false;

  f.report_consistent = classify(p).consistent();

  auto code_class = classify_code(p);
  f.code_defined = code_class != CodeClass::Undefined;
  if (!f.code_defined) return;
  // Any base gives the same code up to a constant, and the orbit closes.
  auto base = code_function(p, 0);
  for (PointId other = 1; other < p.period(); ++other) {
    auto code = code_function(p, other);
    auto shift = code[0] - base[0];
    for (PointId x = 0; x < p.period(); ++x) {
      if (code[x] - base[x] != shift) f.code_closes = false;
    }
  }
  if (rotation.number * Rational(static_cast<std::int64_t>(p.period())) != Rational(thirds / 3)) {
    f.code_closes = false;
  }
  auto s = build_semiconjugacy(p);
  for (PointId x = 0; x < p.period(); ++x) {
    if (s.phi[p.next(x)] != (s.phi[x] + s.rotation).frac()) f.semiconj_relation = false;
  }
  f.monotone_applies = code_class != CodeClass::Decreasing;
  if (f.monotone_applies) f.semiconj_monotone = verify_semiconjugacy(s, p).ok;
}

void gather_theorem(const TriodPattern& given, Mutation mutation, Facts& f) {
  // The theory lives on maps whose only fixed point is a.
  f.unique_fixed_point = fixes_only_branching_point(given);
  if (!f.unique_fixed_point) return;
  f.given_regular = is_regular(given);
  f.given_twist = twist_under(given, rotation_data(given), mutation);
  std::optional<TriodPattern> canonical;
  if (given.occupied_branches() == kBranchCount) {
    try {
      canonical = canonical_ordering(given).pattern;
    } catch (const Error&) {
    }
  }
  f.has_canonical = canonical.has_value();
  if (!canonical) return;
  const auto& p = *canonical;
  f.in_domain = true;
  f.rotation = rotation_data(p);
  f.code_class = classify_code(p);
  f.coprime = std::gcd(f.rotation.pair.revolutions, f.rotation.pair.period) == 1;
  f.regular = is_regular(p);
  f.green = is_green(p).green;
  f.twist = twist_under(p, f.rotation, mutation);
  for (const auto& s : block_structures(p)) {
    if (twist_under(s.quotient, rotation_data(s.quotient), mutation)) {
      f.block_over_twist = true;
      break;
    }
  }
  f.placement = placement(f.rotation, rotation_interval(p));
  if (f.code_class != CodeClass::Undefined) {
    auto code = code_function(p, 0);
    for (int b = 0; b < kBranchCount; ++b) {
      for (int r = 1; static_cast<std::size_t>(r) < p.branch_size(b); ++r) {
        if (code[p.at(b, r)] == code[p.at(b, r + 1)]) f.equal_codes_in_branch = true;
      }
    }
  }
}

Facts gather(const TriodPattern& p, Mutation mutation) {
  Facts f;
  gather_generic(p, f);
  gather_theorem(p, mutation, f);
  return f;
}

struct Property {
  const char* id;
  const char* statement;
  // nullopt: premise does not apply; otherwise whether the claim holds.
  std::function<std::optional<bool>(const Facts&)> check;
};

std::optional<bool> implies(bool premise, bool conclusion) {
  if (!premise) return std::nullopt;
  return conclusion;
}

const std::vector<Property>& properties() {
  static const std::vector<Property> table = {
      {"a", "decreasing code => interior",
       [](const Facts& f) {
         return implies(f.in_domain && f.code_class == CodeClass::Decreasing, f.placement == Placement::Interior);
       }},
      {"b", "non-decreasing code => frontier",
       [](const Facts& f) {
         bool nd = f.code_class == CodeClass::NonDecreasing || f.code_class == CodeClass::StrictlyIncreasing;
         return implies(f.in_domain && nd, at_endpoint(f.placement));
       }},
      {"c", "equal codes on one branch => non-coprime rotation pair",
       [](const Facts& f) { return implies(f.in_domain && f.equal_codes_in_branch, !f.coprime); }},
      {"d", "regular, coprime pair and not twist => interior",
       [](const Facts& f) {
         return implies(f.in_domain && f.regular && f.coprime && !f.twist, f.placement == Placement::Interior);
       }},
      // Twist includes regularity, so only the converse needs it as a premise.
      {"e", "twist => frontier with coprime pair",
       [](const Facts& f) { return implies(f.in_domain && f.twist, at_endpoint(f.placement) && f.coprime); }},
      {"e'", "regular, frontier with coprime pair => twist",
       [](const Facts& f) { return implies(f.in_domain && f.regular && at_endpoint(f.placement) && f.coprime, f.twist); }},
      {"f", "block structure over a twist => frontier",
       [](const Facts& f) { return implies(f.in_domain && f.block_over_twist, at_endpoint(f.placement)); }},
      {"g", "twist => green", [](const Facts& f) { return implies(f.in_domain && f.twist, f.green); }},
      {"h", "twist => canonical ordering exists",
       [](const Facts& f) { return implies(f.unique_fixed_point && f.given_twist, f.has_canonical); }},
      {"canonical", "regular => canonical ordering exists",
       [](const Facts& f) { return implies(f.unique_fixed_point && f.given_regular, f.has_canonical); }},
      {"oracle", "cycle-mean interval equals elementary-loop extrema",
       [](const Facts& f) -> std::optional<bool> { return f.interval == f.oracle_interval; }},
      {"audit", "rotation data agrees with the point graph",
       [](const Facts& f) -> std::optional<bool> { return f.audit_ok; }},
      {"report", "classification report is internally consistent",
       [](const Facts& f) -> std::optional<bool> { return f.report_consistent; }},
      {"code", "code is base independent up to a constant and closes",
       [](const Facts& f) { return implies(f.code_defined, f.code_closes); }},
      {"semiconj", "phi o f = rotation o phi",
       [](const Facts& f) { return implies(f.code_defined, f.semiconj_relation); }},
      {"monotone", "phi monotone on coherent strips for non-decreasing codes",
       [](const Facts& f) { return implies(f.monotone_applies, f.semiconj_monotone); }},
  };
  return table;
}

// Accumulator for one worker.
struct Tally {
  std::vector<std::size_t> census;
  std::vector<std::size_t> checked;
  std::vector<std::vector<std::string>> failures;

  explicit Tally(std::size_t n_props) : checked(n_props, 0), failures(n_props) {}

  void add(const PatternCode& code, const VerifyOptions& options) {
    auto n = code.next.size();
    if (census.size() <= n) census.resize(n + 1, 0);
    ++census[n];
    auto p = decode(code);
    auto facts = gather(p, options.mutation);
    const auto& props = properties();
    for (std::size_t i = 0; i < props.size(); ++i) {
      auto verdict = props[i].check(facts);
      if (!verdict) continue;
      ++checked[i];
      if (!*verdict) failures[i].push_back(describe(p));
    }
  }

  void merge(Tally&& other) {
    if (census.size() < other.census.size()) census.resize(other.census.size(), 0);
    for (std::size_t i = 0; i < other.census.size(); ++i) census[i] += other.census[i];
    for (std::size_t i = 0; i < checked.size(); ++i) {
      checked[i] += other.checked[i];
      auto& f = failures[i];
      f.insert(f.end(), std::make_move_iterator(other.failures[i].begin()),
               std::make_move_iterator(other.failures[i].end()));
    }
  }

  TheoremReport finish(const VerifyOptions& options) && {
    TheoremReport report;
    report.census = std::move(census);
    report.max_period = report.census.empty() ? 0 : report.census.size() - 1;
    const auto& props = properties();
    for (std::size_t i = 0; i < props.size(); ++i) {
      auto& f = failures[i];
      std::sort(f.begin(), f.end());
      if (f.size() > options.keep) f.resize(options.keep);
      report.properties.push_back({props[i].id, props[i].statement, checked[i], std::move(f)});
    }
    return report;
  }
};

}  // namespace

TheoremReport sweep_serial(const std::vector<PatternCode>& codes, const VerifyOptions& options) {
  Tally tally(properties().size());
  for (const auto& code : codes) tally.add(code, options);
  return std::move(tally).finish(options);
}

TheoremReport sweep_parallel(const std::vector<PatternCode>& codes, const VerifyOptions& options) {
  Tally total(properties().size());
#ifdef _OPENMP
  int workers = options.workers > 0 ? options.workers : omp_get_max_threads();
#pragma omp parallel num_threads(workers)
  {
    Tally local(properties().size());
#pragma omp for schedule(dynamic, 32) nowait
    for (std::size_t i = 0; i < codes.size(); ++i) local.add(codes[i], options);
#pragma omp critical(triodrot_sweep_merge)
    total.merge(std::move(local));
  }
#else
  for (const auto& code : codes) total.add(code, options);
#endif
  return std::move(total).finish(options);
}

TheoremReport verify_theorems(std::size_t max_period, const VerifyOptions& options) {
  std::vector<PatternCode> codes;
  for (std::size_t n = 2; n <= max_period; ++n) {
    auto batch = enumerate_codes(n, options.cap);
    codes.insert(codes.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
  }
  auto report = options.parallel ? sweep_parallel(codes, options) : sweep_serial(codes, options);
  report.max_period = max_period;
  report.census.resize(max_period + 1, 0);
  return report;
}

std::string to_json(const TheoremReport& report) {
  nlohmann::ordered_json doc;
  doc["max_period"] = report.max_period;
  auto census = nlohmann::ordered_json::object();
  for (std::size_t n = 2; n < report.census.size(); ++n) census[std::to_string(n)] = report.census[n];
  doc["census"] = std::move(census);
  auto props = nlohmann::ordered_json::array();
  for (const auto& r : report.properties) {
    nlohmann::ordered_json item;
    item["id"] = r.id;
    item["statement"] = r.statement;
    item["checked"] = r.checked;
    item["counterexamples"] = r.counterexamples;
    props.push_back(std::move(item));
  }
  doc["properties"] = std::move(props);
  doc["passed"] = report.passed();
  return doc.dump(2) + "\n";
}

std::string to_text(const TheoremReport& report) {
  std::ostringstream os;
  os << "periods 2.." << report.max_period << ", census:";
  for (std::size_t n = 2; n < report.census.size(); ++n) os << " " << n << ":" << report.census[n];
  os << "\n";
  for (const auto& r : report.properties) {
    os << (r.counterexamples.empty() ? "PASS " : "FAIL ") << "(" << r.id << ") " << r.statement << " [checked "
       << r.checked << "]\n";
    for (const auto& c : r.counterexamples) os << "    " << c << "\n";
  }
  os << (report.passed() ? "all properties hold\n" : "counterexamples found\n");
  return os.str();
}

}  // namespace triodrot
