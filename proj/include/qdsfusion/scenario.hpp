#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdsfusion/confidence_curve.hpp"
#include "qdsfusion/frame.hpp"
#include "qdsfusion/fusion.hpp"

namespace qds {

inline constexpr int kScenarioFormat = 1;

struct Scenario {
  Frame frame;
  std::vector<SensorReport> reports;
  // Curve used by reports that give a distance without their own curve.
  std::optional<CurveParams> defaults;
};

// Parses the JSON scenario document. Syntax problems raise ParseError with
// a line:column location; semantic problems raise ValidationError naming the
// JSON path and, where known, the report's source_id.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);

// Inverse of parse_scenario; curves are written with explicit gamma and x_r.
std::string serialize_scenario(const Scenario& scenario);

}  // namespace qds
