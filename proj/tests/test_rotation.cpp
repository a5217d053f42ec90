#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "support.hpp"
#include "triodrot/error.hpp"
#include "triodrot/rotation.hpp"

using namespace testing;

namespace {

// Independent code oracle: walk the orbit keeping the angle of the current
// point as an exact rational (branch b sits at angle b/3, one turn = 1).
std::map<std::string, Rational> code_oracle(const TriodPattern& p, const std::string& base) {
  Rational turns(0);
  for (PointId x = 0; x < p.period(); ++x) {
    turns += Rational(((p.branch(p.next(x)) - p.branch(x)) % 3 + 3) % 3, 3);
  }
  Rational rho = turns / Rational(static_cast<std::int64_t>(p.period()));
  std::map<std::string, Rational> out;
  PointId x = p.id(base);
  Rational angle(p.branch(x), 3);
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(p.period()); ++k) {
    out[p.label(x)] = rho * Rational(k) - Rational(angle.floor());
    auto step = ((p.branch(p.next(x)) - p.branch(x)) % 3 + 3) % 3;
    angle += Rational(step, 3);
    x = p.next(x);
  }
  return out;
}

std::map<std::string, Rational> as_map(const TriodPattern& p, const CodeAssignment& c) {
  std::map<std::string, Rational> out;
  for (PointId x = 0; x < p.period(); ++x) out[p.label(x)] = c[x];
  return out;
}

}  // namespace

TEST_CASE("displacement and colors of P8") {
  auto p = p8();
  CHECK(displacement(p, "x4", "x3") == Rational(0));
  CHECK(displacement(p, "x1", "y1") == Rational(1, 3));
  auto c = colors(p);
  for (auto label : {"x1", "x2", "y1", "y2", "z1", "z2"}) CHECK(c[p.id(label)] == Color::Black);
  for (auto label : {"x3", "x4"}) CHECK(c[p.id(label)] == Color::Green);
  CHECK_THROWS_AS(displacement(p, "x1", "nope"), Error);
}

TEST_CASE("displacement on a red step") {
  auto p = d25();
  CHECK(displacement(p, "x2", "z1") == Rational(2, 3));
}

TEST_CASE("rotation data") {
  auto r = rotation_data(p8());
  CHECK(r.pair == RotationPair{2, 8});
  CHECK(r.number == Rational(1, 4));
  CHECK(r.mrp == ModifiedRotationPair{Rational(1, 4), 2});
  auto t = rotation_data(p3());
  CHECK(t.pair == RotationPair{1, 3});
  CHECK(t.mrp == ModifiedRotationPair{Rational(1, 3), 1});
  auto s = rotation_data(s15());
  CHECK(s.pair == RotationPair{6, 15});
  CHECK(s.mrp == ModifiedRotationPair{Rational(2, 5), 3});
}

TEST_CASE("P8 codes from x4") {
  auto p = p8();
  auto code = code_function(p, "x4");
  std::map<std::string, Rational> expected{
      {"x1", Rational(1, 2)}, {"x2", Rational(1, 4)}, {"x3", Rational(1, 4)}, {"x4", Rational(0)},
      {"y1", Rational(3, 4)}, {"y2", Rational(1, 2)}, {"z1", Rational(1)},    {"z2", Rational(3, 4)}};
  CHECK(as_map(p, code) == expected);
  CHECK(classify_code(p) == CodeClass::NonDecreasing);
}

TEST_CASE("code is undefined at one third") {
  try {
    code_function(p3(), "x1");
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CodeUndefinedAtOneThird);
  }
  CHECK(classify_code(p3()) == CodeClass::Undefined);
}

TEST_CASE("code classes of the constructions") {
  CHECK(classify_code(g29()) == CodeClass::StrictlyIncreasing);
  CHECK(classify_code(d25()) == CodeClass::StrictlyIncreasing);
  CHECK(classify_code(s18()) == CodeClass::NonDecreasing);
}

TEST_CASE("a decreasing period-5 code") {
  // x1 -> y1 -> z1 -> x2 -> x3 -> x1, rho = 1/5: x3 lies outside x2 but
  // carries the larger code.
  auto p = TriodPattern::from_labels({{{"x1", "x2", "x3"}, {"y1"}, {"z1"}}},
                                     {{"x1", "y1"}, {"y1", "z1"}, {"z1", "x2"}, {"x2", "x3"}, {"x3", "x1"}});
  auto code = code_oracle(p, "x1");
  REQUIRE(rotation_data(p).number == Rational(1, 5));
  bool inversion = false;
  for (int r = 1; r < 3; ++r) {
    if (code[p.label(p.at(0, r + 1))] > code[p.label(p.at(0, r))]) inversion = true;
  }
  REQUIRE(inversion);
  CHECK(classify_code(p) == CodeClass::Decreasing);
}

TEST_CASE("codes match the angle oracle, are base independent and close") {
  std::mt19937 rng(3);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    auto p = random_pattern(rng, 2 + static_cast<std::size_t>(i % 10));
    if (rotation_data(p).number == Rational(1, 3)) continue;
    ++checked;
    auto first = code_function(p, PointId{0});
    CHECK(as_map(p, first) == code_oracle(p, p.label(0)));
    for (PointId b = 1; b < p.period(); ++b) {
      auto other = code_function(p, b);
      auto shift = other[0] - first[0];
      for (PointId x = 0; x < p.period(); ++x) CHECK(other[x] - first[x] == shift);
    }
    auto r = rotation_data(p);
    CHECK(r.number * Rational(static_cast<std::int64_t>(p.period())) == Rational(r.pair.revolutions));
  }
  CHECK(checked > 300);
}

TEST_CASE("rotation number is the mean color weight") {
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    auto p = random_pattern(rng, 1 + static_cast<std::size_t>(i % 11));
    std::int64_t weight = 0;
    for (auto c : colors(p)) weight += static_cast<int>(c);
    CHECK(weight % 3 == 0);
    CHECK(rotation_data(p).number == Rational(weight, 3 * static_cast<std::int64_t>(p.period())));
  }
}

TEST_CASE("cyclic relabeling preserves rotation data, colors and codes") {
  std::mt19937 rng(9);
  for (int i = 0; i < 200; ++i) {
    auto p = random_pattern(rng, 2 + static_cast<std::size_t>(i % 9));
    for (int shift = 1; shift < 3; ++shift) {
      auto q = relabel_branches(p, shift, false);
      CHECK(rotation_data(q).pair == rotation_data(p).pair);
      for (PointId x = 0; x < p.period(); ++x) {
        auto y = q.id(p.label(x));
        CHECK(colors(q)[y] == colors(p)[x]);
      }
      if (rotation_data(p).number == Rational(1, 3)) continue;
      // Revolutions are counted against branch 0's ray, so moving the
      // branches can shift single code values by whole turns; the class and
      // the fractional parts do not move.
      CHECK(classify_code(q) == classify_code(p));
      auto a = code_function(p, 0);
      auto b = code_function(q, q.id(p.label(0)));
      for (PointId x = 0; x < p.period(); ++x) {
        auto d = a[x] - b[q.id(p.label(x))];
        CHECK(d.floor() == d);
      }
    }
  }
}

TEST_CASE("reversal swaps black and red and fixes green") {
  std::mt19937 rng(13);
  for (int i = 0; i < 200; ++i) {
    auto p = random_pattern(rng, 2 + static_cast<std::size_t>(i % 9));
    auto q = relabel_branches(p, 0, true);
    std::array<int, 3> before{}, after{};
    for (auto c : colors(p)) ++before[static_cast<std::size_t>(c)];
    for (auto c : colors(q)) ++after[static_cast<std::size_t>(c)];
    CHECK(before[0] == after[0]);
    CHECK(before[1] == after[2]);
    CHECK(before[2] == after[1]);
  }
}

TEST_CASE("canonical ordering") {
  auto p = canonical_ordering(p8());
  CHECK(p.shift == 0);
  CHECK_FALSE(p.reversed);
  CHECK(p.pattern == p8());
  CHECK(canonical_ordering(p3()).pattern == p3());

  auto mirror = TriodPattern::from_labels({{{"x1"}, {"y1"}, {"z1"}}}, {{"x1", "z1"}, {"z1", "y1"}, {"y1", "x1"}});
  auto m = canonical_ordering(mirror);
  CHECK(m.reversed);
  for (auto c : colors(m.pattern)) CHECK(c == Color::Black);

  auto two = TriodPattern::from_labels({{{"x1"}, {"y1"}, {}}}, {{"x1", "y1"}, {"y1", "x1"}});
  try {
    canonical_ordering(two);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BranchEmpty);
  }
  // Innermost points green on every branch: no relabeling helps.
  auto stuck = TriodPattern::from_labels(
      {{{"x1", "x2"}, {"y1", "y2"}, {"z1", "z2"}}},
      {{"x1", "x2"}, {"x2", "y1"}, {"y1", "y2"}, {"y2", "z1"}, {"z1", "z2"}, {"z2", "x1"}});
  try {
    canonical_ordering(stuck);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoCanonicalOrdering);
  }
}

TEST_CASE("green check") {
  CHECK(is_green(p8()).green);
  CHECK(is_green(g29()).green);
  // Same branch, f swaps the order of x2 > x1 inside b1.
  auto p = TriodPattern::from_labels({{{"x1", "x2"}, {"y1", "y2"}, {}}},
                                     {{"x1", "y2"}, {"y2", "x2"}, {"x2", "y1"}, {"y1", "x1"}});
  auto g = is_green(p);
  CHECK_FALSE(g.green);
  REQUIRE(g.violation.has_value());
  CHECK(p.label(g.violation->first) == "x2");
  CHECK(p.label(g.violation->second) == "x1");
}
