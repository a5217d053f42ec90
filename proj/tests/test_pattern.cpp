#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "triodrot/error.hpp"

using namespace testing;

namespace {

ErrorKind kind_of(const std::string& doc) {
  try {
    parse_pattern(doc);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("document parsed");
  return ErrorKind::MalformedDocument;
}

}  // namespace

TEST_CASE("P8 spatial and temporal indexing") {
  auto p = p8();
  CHECK(p.period() == 8);
  CHECK(p.branch_size(0) == 4);
  CHECK(p.label(p.at(0, 4)) == "x4");
  CHECK(p.rank(p.id("y2")) == 2);
  CHECK(p.label(p.next(p.id("z2"))) == "x4");
  CHECK(p.label(p.prev(p.id("x1"))) == "x3");
  std::vector<std::string> orbit;
  for (auto q : temporal_orbit(p, "x1")) orbit.push_back(p.label(q));
  CHECK(orbit == std::vector<std::string>{"x1", "y1", "z1", "x2", "y2", "z2", "x4", "x3"});
}

TEST_CASE("canonical text round trips") {
  for (const auto& p : {p8(), p3(), s15()}) {
    auto text = serialize_pattern(p);
    auto again = parse_pattern(text);
    CHECK(again == p);
    CHECK(serialize_pattern(again) == text);
  }
  auto text = serialize_pattern(p8());
  CHECK(text.find("\"period\": 8") < text.find("\"branches\""));
  CHECK(text.find("\"branches\"") < text.find("\"map\""));
  CHECK(text.find("\"x1\": \"y1\"") < text.find("\"y1\": \"z1\""));
  CHECK(text.find("\"x4\": \"x3\"") < text.find("\"x3\": \"x1\""));
  CHECK(text.back() == '\n');
}

TEST_CASE("round trip on random patterns") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    auto p = random_pattern(rng, 1 + static_cast<std::size_t>(i % 12));
    CHECK(parse_pattern(serialize_pattern(p)) == p);
  }
}

TEST_CASE("validation errors") {
  CHECK(kind_of(read_data("malformed.json")) == ErrorKind::NotSingleCycle);
  CHECK(kind_of("{") == ErrorKind::MalformedDocument);
  CHECK(kind_of(R"({"period": 2, "branches": [["x1"], ["x1"], []], "map": {"x1": "x1"}})") ==
        ErrorKind::DuplicateLabel);
  CHECK(kind_of(R"({"period": 2, "branches": [["x1"], ["y1"]], "map": {"x1": "y1", "y1": "x1"}})") ==
        ErrorKind::BadBranchIndex);
  CHECK(kind_of(R"({"period": 0, "branches": [[], [], []], "map": {}})") == ErrorKind::EmptyPattern);
  CHECK(kind_of(R"({"period": 2, "branches": [["x1"], ["y1"], []], "map": {"x1": "q", "y1": "x1"}})") ==
        ErrorKind::UnknownPoint);
  CHECK(kind_of(R"({"period": 3, "branches": [["x1"], ["y1"], []], "map": {"x1": "y1", "y1": "x1"}})") ==
        ErrorKind::MalformedDocument);
  CHECK(kind_of(R"({"period": 2, "branches": [["x1"], ["y1"], []], "map": {"x1": "y1"}})") ==
        ErrorKind::MalformedDocument);
}

TEST_CASE("geodesics through the branching point") {
  TreePoint x2{0, 2}, x1{0, 1}, y1{1, 1}, z3{2, 3};
  CHECK(on_geodesic(x2, y1, TreePoint::apex()));
  CHECK(on_geodesic(x2, y1, x1));
  CHECK_FALSE(on_geodesic(x1, y1, x2));
  CHECK_FALSE(on_geodesic(x2, y1, z3));
  CHECK(on_geodesic(x2, x2, x2));
  CHECK_FALSE(on_geodesic(x2, x1, TreePoint::apex()));
}

TEST_CASE("basic intervals of P8") {
  auto p = p8();
  auto intervals = basic_intervals(p);
  // One apex interval per branch plus the gaps between consecutive points.
  CHECK(intervals.size() == 3 + 3 + 1 + 1);
  CHECK(intervals[0].name(p) == "(A,x1)");
  CHECK_FALSE(intervals[0].lower.has_value());
  for (std::size_t i = 0; i < intervals.size(); ++i) CHECK(intervals[i].index == i);
}

TEST_CASE("basic intervals with one occupied branch skip the apex") {
  auto p = TriodPattern::from_labels({{{"x1", "x2"}, {}, {}}}, {{"x1", "x2"}, {"x2", "x1"}});
  auto intervals = basic_intervals(p);
  REQUIRE(intervals.size() == 1);
  CHECK(intervals[0].lower.has_value());
}

TEST_CASE("unimodality") {
  auto g = g29();
  auto u = is_unimodal(g);
  CHECK(u.unimodal);
  REQUIRE(u.critical.has_value());
  CHECK(g.label(*u.critical) == "x2");
  CHECK(is_unimodal(d25()).unimodal);
  CHECK(is_unimodal(p8()).unimodal);
}
