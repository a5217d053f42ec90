#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>

#include "support.hpp"
#include "triodrot/classify.hpp"
#include "triodrot/error.hpp"

using namespace testing;

namespace {

ErrorKind error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no throw");
  return ErrorKind::Overflow;
}

std::vector<Rational> fractions(bool below_third, std::int64_t max_den) {
  std::vector<Rational> out;
  for (std::int64_t q = 2; q <= max_den; ++q) {
    for (std::int64_t p = 1; 2 * p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      Rational r(p, q);
      if (below_third ? r < Rational(1, 3) : r > Rational(1, 3)) out.push_back(r);
    }
  }
  return out;
}

std::map<std::string, Rational> codes_from(const TriodPattern& p, const std::string& base) {
  auto c = code_function(p, base);
  std::map<std::string, Rational> out;
  for (PointId x = 0; x < p.period(); ++x) out[p.label(x)] = c[x];
  return out;
}

}  // namespace

TEST_CASE("rho parsing") {
  CHECK(parse_rho("2/9") == Rational(2, 9));
  CHECK(error_of([] { parse_rho("4/18"); }) == ErrorKind::BadRho);
  CHECK(error_of([] { parse_rho("1/0"); }) == ErrorKind::BadRho);
  CHECK(error_of([] { parse_rho("x"); }) == ErrorKind::BadRho);
  CHECK(error_of([] { parse_rho("3"); }) == ErrorKind::BadRho);
}

TEST_CASE("Gamma 2/9 on b0") {
  auto p = g29();
  CHECK(p.period() == 9);
  CHECK(p.branch_size(0) == 5);
  CHECK(p.branch_size(1) == 2);
  CHECK(p.branch_size(2) == 2);
  CHECK(p.label(p.next(p.id("x1"))) == "y1");
  CHECK(p.label(p.next(p.id("x3"))) == "x1");
  CHECK(p.label(p.next(p.id("z1"))) == "x4");
  auto c = colors(p);
  int green = 0;
  for (PointId x = 0; x < p.period(); ++x) {
    if (c[x] == Color::Green) {
      ++green;
      CHECK(p.branch(x) == 0);
    } else {
      CHECK(c[x] == Color::Black);
    }
  }
  CHECK(green == 3);
}

TEST_CASE("Delta 2/5 on b0") {
  auto p = d25();
  CHECK(p.period() == 5);
  CHECK(p.branch_size(0) == 2);
  CHECK(p.branch_size(1) == 1);
  CHECK(p.branch_size(2) == 2);
  auto c = colors(p);
  CHECK(c[p.id("x2")] == Color::Red);
  int red = 0;
  for (auto color : c) red += color == Color::Red ? 1 : 0;
  CHECK(red == 1);
  CHECK(parse_pattern(serialize_pattern(construct_twist({Rational(2, 5), 0}))) == p);
}

TEST_CASE("bad twist parameters") {
  CHECK(error_of([] { construct_gamma({Rational(1, 3), 0}); }) == ErrorKind::BadRho);
  CHECK(error_of([] { construct_gamma({Rational(2, 5), 0}); }) == ErrorKind::BadRho);
  CHECK(error_of([] { construct_delta({Rational(1, 4), 0}); }) == ErrorKind::BadRho);
  CHECK(error_of([] { construct_delta({Rational(1, 2), 0}); }) == ErrorKind::BadRho);
  CHECK(error_of([] { construct_twist({Rational(1, 3), 0}); }) == ErrorKind::BadRho);
  CHECK(error_of([] { construct_twist({Rational(1, 4), 3}); }) == ErrorKind::BadBranchIndex);
  CHECK(error_of([] { construct_strange({{Rational(1, 4), 0}, 1}); }) == ErrorKind::BadMultiplicity);
  CHECK(error_of([] { lift({{Rational(1, 4), 0}, 0}); }) == ErrorKind::BadMultiplicity);
}

TEST_CASE("twist constructions over all small rotation numbers") {
  for (bool below : {true, false}) {
    for (auto rho : fractions(below, 25)) {
      for (int j = 0; j < kBranchCount; ++j) {
        auto p = construct_twist({rho, j});
        auto r = rotation_data(p);
        CHECK(r.pair == RotationPair{rho.num(), rho.den()});
        CHECK(is_twist(p));
        CHECK(is_green(p).green);
        CHECK(is_unimodal(p).unimodal);
        auto forbidden = below ? Color::Red : Color::Green;
        for (auto c : colors(p)) CHECK(c != forbidden);
        // Innermost point of every branch is black.
        for (int b = 0; b < kBranchCount; ++b) CHECK(colors(p)[p.at(b, 1)] == Color::Black);
      }
    }
  }
}

TEST_CASE("S18 codes") {
  auto p = s18();
  CHECK(p.period() == 18);
  CHECK(rotation_data(p).pair == RotationPair{4, 18});
  std::map<std::string, Rational> expected;
  std::vector<std::int64_t> x{5, 4, 4, 3, 3, 2, 2, 1, 1, 0};
  std::vector<std::int64_t> y{7, 6, 6, 5};
  std::vector<std::int64_t> z{9, 8, 8, 7};
  for (std::size_t i = 0; i < x.size(); ++i) expected["x" + std::to_string(i + 1)] = Rational(x[i], 9);
  for (std::size_t i = 0; i < y.size(); ++i) expected["y" + std::to_string(i + 1)] = Rational(y[i], 9);
  for (std::size_t i = 0; i < z.size(); ++i) expected["z" + std::to_string(i + 1)] = Rational(z[i], 9);
  CHECK(codes_from(p, "x10") == expected);
  CHECK(is_strangely_ordered(p));
}

TEST_CASE("S15 codes") {
  auto p = s15();
  CHECK(rotation_data(p).pair == RotationPair{6, 15});
  std::map<std::string, Rational> expected;
  std::vector<std::int64_t> x{0, 0, 1, 1, 1, 2};
  std::vector<std::int64_t> y{2, 2, 3};
  std::vector<std::int64_t> z{3, 3, 4, 4, 4, 5};
  for (std::size_t i = 0; i < x.size(); ++i) expected["x" + std::to_string(i + 1)] = Rational(x[i], 5);
  for (std::size_t i = 0; i < y.size(); ++i) expected["y" + std::to_string(i + 1)] = Rational(y[i], 5);
  for (std::size_t i = 0; i < z.size(); ++i) expected["z" + std::to_string(i + 1)] = Rational(z[i], 5);
  CHECK(codes_from(p, "x1") == expected);
  CHECK(is_strangely_ordered(p));
}

TEST_CASE("a single copy lift is the base pattern") {
  for (auto rho : {Rational(2, 9), Rational(2, 5), Rational(1, 7)}) {
    auto lifted = lift({{rho, 0}, 1});
    CHECK(lifted.as_pattern() == spatially_labelled(construct_twist({rho, 0})));
  }
}

TEST_CASE("gluing merges the copies and changes k images") {
  for (bool below : {true, false}) {
    for (auto rho : fractions(below, 15)) {
      for (int j = 0; j < kBranchCount; ++j) {
        for (int k : {2, 3}) {
          CAPTURE(rho);
          CAPTURE(j);
          CAPTURE(k);
          auto lifted = lift({{rho, j}, k});
          auto glued = construct_strange({{rho, j}, k});
          CHECK(glued.period() == static_cast<std::size_t>(k) * lifted.base_period());
          std::size_t changed = 0;
          for (PointId x = 0; x < glued.period(); ++x) changed += glued.next(x) != lifted.next[x] ? 1 : 0;
          CHECK(changed == static_cast<std::size_t>(k));
          CHECK(rotation_data(glued).pair == RotationPair{k * rho.num(), k * rho.den()});
          CHECK(is_strangely_ordered(glued));
        }
      }
    }
  }
}
