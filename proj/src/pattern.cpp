#include "triodrot/pattern.hpp"

#include <algorithm>
#include <json.hpp>

#include "triodrot/error.hpp"

namespace triodrot {

bool on_geodesic(TreePoint s, TreePoint e, TreePoint x) noexcept {
  if (x.is_apex()) return s.is_apex() || e.is_apex() || s.branch != e.branch;
  bool s_in = !s.is_apex() && s.branch == x.branch;
  bool e_in = !e.is_apex() && e.branch == x.branch;
  if (s_in && e_in) return std::min(s.rank, e.rank) <= x.rank && x.rank <= std::max(s.rank, e.rank);
  if (s_in) return x.rank <= s.rank;
  if (e_in) return x.rank <= e.rank;
  return false;
}

TriodPattern TriodPattern::from_positions(Branches branches, std::vector<PointId> next) {
  TriodPattern p;
  std::size_t n = 0;
  for (int b = 0; b < kBranchCount; ++b) {
    auto bi = static_cast<std::size_t>(b);
    p.offset_[bi] = n;
    p.sizes_[bi] = branches[bi].size();
    n += branches[bi].size();
  }
  if (n == 0) throw Error(ErrorKind::EmptyPattern, "pattern has no points");
  if (next.size() != n) {
    throw Error(ErrorKind::MalformedDocument,
                "map has " + std::to_string(next.size()) + " entries for " + std::to_string(n) + " points");
  }
  p.labels_.reserve(n);
  for (int b = 0; b < kBranchCount; ++b) {
    int rank = 0;
    for (auto& label : branches[static_cast<std::size_t>(b)]) {
      auto id = static_cast<PointId>(p.labels_.size());
      if (!p.index_.emplace(label, id).second) throw Error(ErrorKind::DuplicateLabel, "label '" + label + "'");
      p.labels_.push_back(std::move(label));
      p.branch_of_.push_back(b);
      p.rank_of_.push_back(++rank);
    }
  }
  p.prev_.assign(n, static_cast<PointId>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (next[i] >= n) throw Error(ErrorKind::UnknownPoint, "image index " + std::to_string(next[i]));
    if (p.prev_[next[i]] != n) {
      throw Error(ErrorKind::NotSingleCycle, "point '" + p.labels_[next[i]] + "' has two preimages");
    }
    p.prev_[next[i]] = static_cast<PointId>(i);
  }
  p.next_ = std::move(next);
  std::size_t length = 1;
  for (PointId q = p.next_[0]; q != 0; q = p.next_[q]) ++length;
  if (length != n) {
    throw Error(ErrorKind::NotSingleCycle, "orbit of '" + p.labels_[0] + "' has length " + std::to_string(length) +
                                               ", period is " + std::to_string(n));
  }
  return p;
}

TriodPattern TriodPattern::from_labels(Branches branches,
                                       const std::vector<std::pair<std::string, std::string>>& map) {
  std::unordered_map<std::string, PointId> index;
  PointId id = 0;
  for (const auto& branch : branches) {
    for (const auto& label : branch) {
      if (!index.emplace(label, id++).second) throw Error(ErrorKind::DuplicateLabel, "label '" + label + "'");
    }
  }
  if (id == 0) throw Error(ErrorKind::EmptyPattern, "pattern has no points");
  std::vector<PointId> next(id, id);
  for (const auto& [from, to] : map) {
    auto f = index.find(from);
    if (f == index.end()) throw Error(ErrorKind::UnknownPoint, "map key '" + from + "'");
    auto t = index.find(to);
    if (t == index.end()) throw Error(ErrorKind::UnknownPoint, "image '" + to + "' of '" + from + "'");
    if (next[f->second] != id) throw Error(ErrorKind::MalformedDocument, "map key '" + from + "' repeated");
    next[f->second] = t->second;
  }
  for (const auto& [label, pid] : index) {
    if (next[pid] == id) throw Error(ErrorKind::MalformedDocument, "no image for '" + label + "'");
  }
  return from_positions(std::move(branches), std::move(next));
}

int TriodPattern::occupied_branches() const noexcept {
  return static_cast<int>(std::count_if(sizes_.begin(), sizes_.end(), [](std::size_t s) { return s > 0; }));
}

PointId TriodPattern::at(int branch, int rank) const {
  auto b = static_cast<std::size_t>(branch);
  if (branch < 0 || branch >= kBranchCount || rank < 1 || static_cast<std::size_t>(rank) > sizes_[b]) {
    throw Error(ErrorKind::UnknownPoint,
                "no point of rank " + std::to_string(rank) + " on branch " + std::to_string(branch));
  }
  return static_cast<PointId>(offset_[b] + static_cast<std::size_t>(rank) - 1);
}

std::optional<PointId> TriodPattern::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PointId TriodPattern::id(std::string_view label) const {
  auto found = find(label);
  if (!found) throw Error(ErrorKind::UnknownPoint, "'" + std::string(label) + "'");
  return *found;
}

TreePoint TriodPattern::image(TreePoint t) const {
  if (t.is_apex()) return t;
  return where(next(at(t.branch, t.rank)));
}

TriodPattern::Branches TriodPattern::branches() const {
  Branches out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    out[static_cast<std::size_t>(branch_of_[i])].push_back(labels_[i]);
  }
  return out;
}

std::string BasicInterval::name(const TriodPattern& p) const {
  return "(" + (lower ? p.label(*lower) : std::string("A")) + "," + p.label(upper) + ")";
}

TriodPattern parse_pattern(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::MalformedDocument, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::MalformedDocument, "top level must be an object");
  if (!doc.contains("branches") || !doc["branches"].is_array()) {
    throw Error(ErrorKind::MalformedDocument, "missing 'branches' array");
  }
  const auto& jb = doc["branches"];
  if (jb.size() != kBranchCount) {
    throw Error(ErrorKind::BadBranchIndex, "'branches' has " + std::to_string(jb.size()) + " entries, expected 3");
  }
  TriodPattern::Branches branches;
  for (std::size_t b = 0; b < kBranchCount; ++b) {
    if (!jb[b].is_array()) throw Error(ErrorKind::BadBranchIndex, "branch " + std::to_string(b) + " is not a list");
    for (const auto& label : jb[b]) {
      if (!label.is_string()) throw Error(ErrorKind::MalformedDocument, "labels must be strings");
      branches[b].push_back(label.get<std::string>());
    }
  }
  if (!doc.contains("map") || !doc["map"].is_object()) throw Error(ErrorKind::MalformedDocument, "missing 'map' object");
  std::vector<std::pair<std::string, std::string>> map;
  for (const auto& [key, value] : doc["map"].items()) {
    if (!value.is_string()) throw Error(ErrorKind::MalformedDocument, "image of '" + key + "' must be a string");
    map.emplace_back(key, value.get<std::string>());
  }
  auto pattern = TriodPattern::from_labels(std::move(branches), map);
  if (doc.contains("period")) {
    const auto& period = doc["period"];
    if (!period.is_number_integer() || period.get<std::int64_t>() != static_cast<std::int64_t>(pattern.period())) {
      throw Error(ErrorKind::MalformedDocument, "'period' does not match the number of points");
    }
  }
  return pattern;
}

std::string serialize_pattern(const TriodPattern& p) {
  nlohmann::ordered_json doc;
  doc["period"] = p.period();
  auto branches = nlohmann::ordered_json::array();
  for (const auto& b : p.branches()) branches.push_back(b);
  doc["branches"] = std::move(branches);
  const auto& labels = p.labels();
  auto least = static_cast<PointId>(std::min_element(labels.begin(), labels.end()) - labels.begin());
  auto map = nlohmann::ordered_json::object();
  for (PointId q : temporal_orbit(p, least)) map[p.label(q)] = p.label(p.next(q));
  doc["map"] = std::move(map);
  return doc.dump(2) + "\n";
}

std::vector<BasicInterval> basic_intervals(const TriodPattern& p) {
  std::vector<BasicInterval> out;
  bool apex_inside = p.occupied_branches() >= 2;
  for (int b = 0; b < kBranchCount; ++b) {
    auto m = static_cast<int>(p.branch_size(b));
    if (m == 0) continue;
    if (apex_inside) out.push_back({b, std::nullopt, p.at(b, 1), out.size()});
    for (int r = 1; r < m; ++r) out.push_back({b, p.at(b, r), p.at(b, r + 1), out.size()});
  }
  return out;
}

std::vector<PointId> temporal_orbit(const TriodPattern& p, PointId start) {
  if (start >= p.period()) throw Error(ErrorKind::UnknownPoint, "index " + std::to_string(start));
  std::vector<PointId> orbit;
  orbit.reserve(p.period());
  PointId q = start;
  do {
    orbit.push_back(q);
    q = p.next(q);
  } while (q != start);
  return orbit;
}

std::vector<PointId> temporal_orbit(const TriodPattern& p, std::string_view start) {
  return temporal_orbit(p, p.id(start));
}

UnimodalResult is_unimodal(const TriodPattern& p) {
  UnimodalResult result;
  for (PointId c = 0; c < p.period(); ++c) {
    int b = p.branch(c);
    int r = p.rank(c);
    if (static_cast<std::size_t>(r) == p.branch_size(b)) continue;  // outermost: no outer neighbour
    TreePoint inner = r == 1 ? TreePoint::apex() : TreePoint{b, r - 1};
    TreePoint outer{b, r + 1};
    if (!on_geodesic(p.image(inner), p.image(outer), p.image(p.where(c)))) result.folds.push_back(c);
  }
  result.unimodal = result.folds.size() == 1;
  if (result.unimodal) result.critical = result.folds.front();
  return result;
}

}  // namespace triodrot
