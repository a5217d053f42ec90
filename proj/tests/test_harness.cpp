#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <set>

#include "support.hpp"
#include "triodrot/classify.hpp"
#include "triodrot/error.hpp"
#include "triodrot/harness.hpp"

using namespace testing;

TEST_CASE("census matches the naive orbit-counting oracle") {
  for (std::size_t n = 2; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(enumerate_codes(n).size() == naive_census_count(n));
  }
}

TEST_CASE("enumeration is duplicate free modulo rotation") {
  for (std::size_t n = 2; n <= 5; ++n) {
    std::set<PatternCode> seen;
    for (const auto& code : enumerate_codes(n)) {
      auto r1 = rotate(code);
      auto r2 = rotate(r1);
      CHECK(seen.count(code) == 0);
      CHECK(seen.count(r1) == 0);
      CHECK(seen.count(r2) == 0);
      seen.insert(code);
      CHECK(decode(code).period() == n);
    }
  }
}

TEST_CASE("period 2 and 3 contents") {
  std::set<std::string> two;
  for (const auto& code : enumerate_codes(2)) two.insert(describe(decode(code)));
  CHECK(two == std::set<std::string>{"b0=[] b1=[] b2=[z1,z2] orbit=z1>z2", "b0=[] b1=[y1] b2=[z1] orbit=y1>z1"});

  int primitive = 0, mirror = 0;
  for (const auto& code : enumerate_codes(3)) {
    auto p = decode(code);
    primitive += is_primitive_three_cycle(p) ? 1 : 0;
    if (p.branch_size(0) == 1 && p.branch_size(1) == 1 && rotation_data(p).number == Rational(2, 3)) ++mirror;
  }
  // P3 itself; x -> z -> y turns the other way and has rotation number 2/3.
  CHECK(primitive == 1);
  CHECK(mirror == 1);
}

TEST_CASE("rotation generates a group of order three") {
  for (const auto& code : enumerate_codes(5)) CHECK(rotate(rotate(rotate(code))) == code);
}

TEST_CASE("cap") {
  try {
    enumerate_codes(8, 7);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
  ::setenv("TRIODROT_MAX_PERIOD", "9", 1);
  CHECK(period_cap_from_env() == 9);
  ::setenv("TRIODROT_MAX_PERIOD", "nine", 1);
  CHECK(period_cap_from_env() == kDefaultPeriodCap);
  ::unsetenv("TRIODROT_MAX_PERIOD");
  CHECK(period_cap_from_env() == kDefaultPeriodCap);
}

TEST_CASE("filters") {
  EnumSpec spec;
  spec.period = 5;
  spec.twist = true;
  auto twists = enumerate_patterns(spec);
  CHECK_FALSE(twists.empty());
  for (const auto& p : twists) CHECK(is_twist(p));

  spec.twist.reset();
  spec.rotation_number = Rational(2, 5);
  spec.code_class = CodeClass::StrictlyIncreasing;
  for (const auto& p : enumerate_patterns(spec)) {
    CHECK(rotation_data(p).number == Rational(2, 5));
    CHECK(classify_code(p) == CodeClass::StrictlyIncreasing);
  }
}

TEST_CASE("serial and parallel sweeps produce identical reports") {
  std::vector<PatternCode> codes;
  for (std::size_t n = 2; n <= 6; ++n) {
    auto batch = enumerate_codes(n);
    codes.insert(codes.end(), batch.begin(), batch.end());
  }
  for (auto mutation : {Mutation::None, Mutation::TwistIgnoresRegularity}) {
    VerifyOptions options;
    options.mutation = mutation;
    options.workers = 4;
    auto serial = to_json(sweep_serial(codes, options));
    auto parallel = to_json(sweep_parallel(codes, options));
    CHECK(serial == parallel);
    CHECK(to_json(sweep_parallel(codes, options)) == parallel);
  }
}

TEST_CASE("theorem suite passes to period 6 and catches the mutation") {
  auto clean = verify_theorems(6);
  CHECK(clean.passed());
  CHECK(clean.census[6] == 1124);
  for (const auto& property : clean.properties) {
    CAPTURE(property.id);
    CHECK(property.counterexamples.empty());
  }

  VerifyOptions options;
  options.mutation = Mutation::TwistIgnoresRegularity;
  auto broken = verify_theorems(5, options);
  CHECK_FALSE(broken.passed());
  CHECK(broken.counterexample_count() > 0);
  auto text = to_text(broken);
  CHECK(text.find("FAIL") != std::string::npos);
  CHECK(text.find("orbit=y1>z1") != std::string::npos);
}
