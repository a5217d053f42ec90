#include "triodrot/report.hpp"

#include <sstream>

#include <json.hpp>

namespace triodrot {

namespace {

using nlohmann::ordered_json;

ordered_json rotation_object(const RotationData& r) {
  ordered_json out;
  out["pair"] = {r.pair.revolutions, r.pair.period};
  out["number"] = r.number.str();
  out["mrp"] = {{"number", r.mrp.number.str()}, {"multiplicity", r.mrp.multiplicity}};
  return out;
}

std::string interval_string(const RotationInterval& i) { return "[" + i.lo.str() + ", " + i.hi.str() + "]"; }

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string report_json(const TriodPattern& p, const ClassificationReport& r) {
  ordered_json doc;
  doc["rotation"] = rotation_object(r.rotation);
  doc["interval"] = {r.interval.lo.str(), r.interval.hi.str()};
  doc["code_class"] = std::string(code_class_name(r.code_class));
  if (r.codes) {
    ordered_json codes = ordered_json::object();
    for (PointId x = 0; x < p.period(); ++x) codes[p.label(x)] = (*r.codes)[x].str();
    doc["codes"] = std::move(codes);
  } else {
    doc["codes"] = nullptr;
  }
  doc["colors"] = {{"green", r.colors.green}, {"black", r.colors.black}, {"red", r.colors.red}};
  doc["regular"] = r.regular;
  doc["green"] = r.green;
  doc["twist"] = r.twist;
  if (r.block_over_twist) {
    doc["block_over_twist"] = {{"block_count", r.block_over_twist->block_count},
                               {"quotient", ordered_json::parse(serialize_pattern(r.block_over_twist->quotient))}};
  } else {
    doc["block_over_twist"] = nullptr;
  }
  doc["placement"] = std::string(placement_name(r.placement));
  doc["strangely_ordered"] = r.strangely_ordered;
  doc["unimodal"] = r.unimodal;
  return doc.dump(2) + "\n";
}

std::string report_text(const TriodPattern& p, const ClassificationReport& r) {
  std::ostringstream os;
  os << "period: " << p.period() << "\n";
  os << "rotation pair: (" << r.rotation.pair.revolutions << ", " << r.rotation.pair.period << ")\n";
  os << "rotation number: " << r.rotation.number << "\n";
  os << "mrp: (" << r.rotation.mrp.number << ", " << r.rotation.mrp.multiplicity << ")\n";
  os << "interval: " << interval_string(r.interval) << "\n";
  os << "placement: " << placement_name(r.placement) << "\n";
  if (r.code_class == CodeClass::Undefined) {
    os << "code: undefined (rho = 1/3)\n";
  } else {
    os << "code: " << code_class_name(r.code_class) << "\n";
  }
  os << "colors: green " << r.colors.green << ", black " << r.colors.black << ", red " << r.colors.red << "\n";
  os << "regular: " << yes_no(r.regular) << "\n";
  os << "green: " << yes_no(r.green) << "\n";
  os << "twist: " << yes_no(r.twist) << "\n";
  if (r.block_over_twist) {
    os << "block_over_twist: " << r.block_over_twist->block_count << " blocks\n";
  } else {
    os << "block_over_twist: none\n";
  }
  os << "strangely_ordered: " << yes_no(r.strangely_ordered) << "\n";
  os << "unimodal: " << yes_no(r.unimodal) << "\n";
  if (r.codes) {
    auto c = colors(p);
    os << "codes:\n";
    for (PointId x = 0; x < p.period(); ++x) {
      os << "  " << p.label(x) << "  " << (*r.codes)[x] << "  " << color_name(c[x]) << "\n";
    }
  }
  return os.str();
}

std::string interval_json(const RotationData& rotation, const RotationInterval& interval) {
  ordered_json doc;
  doc["rotation"] = rotation_object(rotation);
  doc["interval"] = {interval.lo.str(), interval.hi.str()};
  return doc.dump(2) + "\n";
}

std::string interval_text(const RotationData& rotation, const RotationInterval& interval) {
  std::ostringstream os;
  os << "rotation number: " << rotation.number << "\n";
  os << "interval: " << interval_string(interval) << "\n";
  return os.str();
}

std::string semiconj_json(const TriodPattern& p, const SemiConjugacy& s, const SemiConjugacyCheck& check) {
  ordered_json doc;
  doc["rotation"] = s.rotation.str();
  ordered_json phi = ordered_json::object();
  for (PointId x = 0; x < p.period(); ++x) phi[p.label(x)] = s.phi[x].str();
  doc["phi"] = std::move(phi);
  ordered_json strips = ordered_json::array();
  for (const auto& strip : s.strips) {
    ordered_json item;
    item["branch"] = strip.branch;
    item["ranks"] = {strip.min_rank, strip.max_rank};
    item["integral"] = strip.integral;
    ordered_json labels = ordered_json::array();
    for (auto q : strip.points) labels.push_back(p.label(q));
    item["points"] = std::move(labels);
    strips.push_back(std::move(item));
  }
  doc["strips"] = std::move(strips);
  doc["ok"] = check.ok;
  if (!check.ok) doc["reason"] = check.reason;
  return doc.dump(2) + "\n";
}

}  // namespace triodrot
