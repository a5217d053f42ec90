#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "triodrot/report.hpp"

namespace triodrot {

namespace {

constexpr double kCenter = 400.0;
constexpr double kReach = 350.0;
constexpr std::array<double, kBranchCount> kAngles{90.0, 210.0, 330.0};

struct Xy {
  double x = 0;
  double y = 0;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

std::string escaped(std::string_view text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

Xy position(int branch, int rank, double step) {
  double a = kAngles[static_cast<std::size_t>(branch)] * std::numbers::pi / 180.0;
  double r = step * rank;
  return {kCenter + r * std::cos(a), kCenter - r * std::sin(a)};
}

std::string_view stroke(Color c) {
  switch (c) {
    case Color::Green: return "#2e8b57";
    case Color::Black: return "#000000";
    case Color::Red: return "#c0392b";
  }
  return "#000000";
}

}  // namespace

std::string render_svg(const TriodPattern& p) {
  std::size_t deepest = 1;
  for (int b = 0; b < kBranchCount; ++b) deepest = std::max(deepest, p.branch_size(b));
  double step = (kReach - 20.0) / static_cast<double>(deepest);
  auto c = colors(p);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\" width=\"800\" height=\"800\">\n";
  os << "<defs>\n";
  for (auto color : {Color::Green, Color::Black, Color::Red}) {
    os << "<marker id=\"head-" << color_name(color)
       << "\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"7\" markerHeight=\"7\" orient=\"auto\">"
       << "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"" << stroke(color) << "\"/></marker>\n";
  }
  os << "</defs>\n";
  os << "<rect width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";
  for (int b = 0; b < kBranchCount; ++b) {
    double a = kAngles[static_cast<std::size_t>(b)] * std::numbers::pi / 180.0;
    Xy end{kCenter + kReach * std::cos(a), kCenter - kReach * std::sin(a)};
    os << "<line class=\"ray\" x1=\"400.00\" y1=\"400.00\" x2=\"" << num(end.x) << "\" y2=\"" << num(end.y)
       << "\" stroke=\"#999999\" stroke-width=\"2\"/>\n";
    Xy tag{kCenter + (kReach + 25.0) * std::cos(a), kCenter - (kReach + 25.0) * std::sin(a)};
    os << "<text x=\"" << num(tag.x) << "\" y=\"" << num(tag.y)
       << "\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\">b" << b << "</text>\n";
  }
  os << "<circle cx=\"400.00\" cy=\"400.00\" r=\"4\" fill=\"#999999\"/>\n";
  os << "<text x=\"412.00\" y=\"418.00\" font-family=\"sans-serif\" font-size=\"14\">a</text>\n";

  for (PointId x = 0; x < p.period(); ++x) {
    auto from = position(p.branch(x), p.rank(x), step);
    auto to = position(p.branch(p.next(x)), p.rank(p.next(x)), step);
    // Bend every arrow to its left so arrows along a ray stay visible.
    double dx = to.x - from.x;
    double dy = to.y - from.y;
    Xy control{(from.x + to.x) / 2 - 0.25 * dy, (from.y + to.y) / 2 + 0.25 * dx};
    os << "<path class=\"arrow " << color_name(c[x]) << "\" d=\"M " << num(from.x) << " " << num(from.y) << " Q "
       << num(control.x) << " " << num(control.y) << " " << num(to.x) << " " << num(to.y)
       << "\" fill=\"none\" stroke=\"" << stroke(c[x]) << "\" stroke-width=\"1.5\" marker-end=\"url(#head-"
       << color_name(c[x]) << ")\"/>\n";
  }
  for (PointId x = 0; x < p.period(); ++x) {
    auto at = position(p.branch(x), p.rank(x), step);
    os << "<circle class=\"point\" cx=\"" << num(at.x) << "\" cy=\"" << num(at.y) << "\" r=\"5\" fill=\""
       << stroke(c[x]) << "\"/>\n";
    os << "<text x=\"" << num(at.x + 9) << "\" y=\"" << num(at.y - 9)
       << "\" font-family=\"sans-serif\" font-size=\"13\">" << escaped(p.label(x)) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace triodrot
