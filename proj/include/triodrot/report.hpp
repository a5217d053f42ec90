#pragma once

#include <string>

#include "triodrot/classify.hpp"
#include "triodrot/graph.hpp"
#include "triodrot/pattern.hpp"
#include "triodrot/semiconj.hpp"

namespace triodrot {

/// Fields in the order of ClassificationReport; rationals as "p/q" strings.
/// Codes are keyed by label in spatial order.
std::string report_json(const TriodPattern& p, const ClassificationReport& r);

/// Human-readable report with the code table in spatial order.
std::string report_text(const TriodPattern& p, const ClassificationReport& r);

std::string interval_json(const RotationData& rotation, const RotationInterval& interval);
std::string interval_text(const RotationData& rotation, const RotationInterval& interval);

/// Circle coordinate per point plus the strip listing, as JSON.
std::string semiconj_json(const TriodPattern& p, const SemiConjugacy& s, const SemiConjugacyCheck& check);

/// Orbit diagram: rays at 90, 210 and 330 degrees, points by rank, one arrow
/// per point colored by the point's color. Deterministic output.
std::string render_svg(const TriodPattern& p);

}  // namespace triodrot
