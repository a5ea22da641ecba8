#include "qdsfusion/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "qdsfusion/error.hpp"
#include "qdsfusion/radar.hpp"

namespace qds {
namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ValidationError, fmt::format("{}: {}", where, what));
}

void reject_unknown_keys(const json& obj, const std::string& where,
                         std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      invalid(where, fmt::format("unknown field '{}'", key));
    }
  }
}

const json& require_object(const json& parent, const char* key, const std::string& where) {
  const auto it = parent.find(key);
  if (it == parent.end()) invalid(where, fmt::format("missing field '{}'", key));
  if (!it->is_object()) invalid(fmt::format("{}/{}", where, key), "expected an object");
  return *it;
}

double number_field(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) invalid(where, fmt::format("missing field '{}'", key));
  if (!it->is_number()) invalid(fmt::format("{}/{}", where, key), "expected a number");
  return it->get<double>();
}

std::optional<double> optional_number(const json& obj, const char* key,
                                      const std::string& where) {
  if (!obj.contains(key)) return std::nullopt;
  return number_field(obj, key, where);
}

RadarParams parse_radar(const json& obj, const std::string& where) {
  reject_unknown_keys(obj, where, {"p_t", "g_t", "g_r", "sigma", "lambda", "p_rmin"});
  RadarParams radar{number_field(obj, "p_t", where),   number_field(obj, "g_t", where),
                    number_field(obj, "g_r", where),   number_field(obj, "sigma", where),
                    number_field(obj, "lambda", where), number_field(obj, "p_rmin", where)};
  try {
    radar.validate();
  } catch (const Error& e) {
    invalid(where, e.what());
  }
  return radar;
}

CurveParams parse_curve(const json& obj, const std::string& where) {
  reject_unknown_keys(obj, where, {"c", "L", "gamma", "x_r", "mode", "kappa", "radar"});
  const double c = number_field(obj, "c", where);
  const double big_l = number_field(obj, "L", where);
  auto gamma = optional_number(obj, "gamma", where);
  auto x_r = optional_number(obj, "x_r", where);
  const auto kappa = optional_number(obj, "kappa", where);

  std::optional<RadarParams> radar;
  if (obj.contains("radar")) {
    radar = parse_radar(require_object(obj, "radar", where), where + "/radar");
  }
  if (kappa) {
    if (gamma) invalid(where, "give either 'gamma' or 'kappa', not both");
    if (!radar) invalid(where, "'kappa' requires a 'radar' block");
    try {
      gamma = quasi_potential_strength(*radar, *kappa);
    } catch (const Error& e) {
      invalid(where, e.what());
    }
  }
  if (!x_r) {
    if (!radar) invalid(where, "missing field 'x_r' (or a 'radar' block to derive it)");
    x_r = max_range(*radar);
  }

  Superposition mode = Superposition::Sum;
  if (obj.contains("mode")) {
    const auto& m = obj.at("mode");
    if (m == "sum") {
      mode = Superposition::Sum;
    } else if (m == "dirichlet") {
      mode = Superposition::Dirichlet;
    } else {
      invalid(where + "/mode", "expected \"sum\" or \"dirichlet\"");
    }
  }
  try {
    return CurveParams::create(c, big_l, gamma.value_or(0.0), *x_r, mode);
  } catch (const Error& e) {
    invalid(where, fmt::format("{}: {}", to_string(e.kind()), e.what()));
  }
}

Bpa parse_masses(const Frame& frame, const json& obj, const std::string& where) {
  Bpa::MassMap masses;
  for (const auto& [key, value] : obj.items()) {
    if (!value.is_number()) invalid(fmt::format("{}/{}", where, key), "expected a number");
    try {
      const FocalSet set = frame.parse_subset(key);
      const double m = value.get<double>();
      if (set.empty() && m > 0.0) {
        throw Error(ErrorKind::EmptyFocalSet, "the empty set cannot carry mass");
      }
      masses[set] += m;
    } catch (const Error& e) {
      invalid(fmt::format("{}/{}", where, key), fmt::format("{}: {}", to_string(e.kind()), e.what()));
    }
  }
  try {
    return Bpa::from_masses(frame, masses);
  } catch (const Error& e) {
    invalid(where, fmt::format("{}: {}", to_string(e.kind()), e.what()));
  }
}

std::string location_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return fmt::format("line {}, column {}", line, column);
}

nlohmann::ordered_json curve_to_json(const CurveParams& p) {
  nlohmann::ordered_json out;
  out["c"] = p.c();
  out["L"] = p.big_l();
  out["gamma"] = p.gamma();
  out["x_r"] = p.x_r();
  out["mode"] = std::string(to_string(p.mode()));
  return out;
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError,
                fmt::format("malformed scenario at {}: {}", location_of(text, e.byte), e.what()));
  }
  if (!doc.is_object()) invalid("/", "scenario must be a JSON object");
  reject_unknown_keys(doc, "/", {"format", "frame", "defaults", "reports"});

  if (!doc.contains("format")) invalid("/", "missing field 'format'");
  if (doc.at("format") != kScenarioFormat) {
    invalid("/format", fmt::format("unsupported format {}, expected {}", doc.at("format").dump(),
                                   kScenarioFormat));
  }

  if (!doc.contains("frame") || !doc.at("frame").is_array()) {
    invalid("/frame", "expected an array of hypothesis labels");
  }
  std::vector<std::string> labels;
  for (const auto& label : doc.at("frame")) {
    if (!label.is_string()) invalid("/frame", "labels must be strings");
    labels.push_back(label.get<std::string>());
  }
  std::optional<Frame> frame;
  try {
    frame.emplace(std::move(labels));
  } catch (const Error& e) {
    invalid("/frame", e.what());
  }

  std::optional<CurveParams> defaults;
  if (doc.contains("defaults")) {
    defaults = parse_curve(require_object(doc, "defaults", "/"), "/defaults");
  }

  if (!doc.contains("reports") || !doc.at("reports").is_array()) {
    invalid("/reports", "expected an array of reports");
  }
  const auto& reports_json = doc.at("reports");
  if (reports_json.empty()) invalid("/reports", "no reports");

  std::vector<SensorReport> reports;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < reports_json.size(); ++i) {
    const auto& r = reports_json[i];
    std::string where = fmt::format("/reports/{}", i);
    if (!r.is_object()) invalid(where, "expected an object");
    reject_unknown_keys(r, where, {"source_id", "masses", "reliability", "distance", "curve"});
    if (!r.contains("source_id") || !r.at("source_id").is_string()) {
      invalid(where, "missing string field 'source_id'");
    }
    const auto id = r.at("source_id").get<std::string>();
    where = fmt::format("report '{}' ({})", id, where);
    if (!ids.insert(id).second) invalid(where, "duplicate source_id");

    Bpa bpa = parse_masses(*frame, require_object(r, "masses", where), where + "/masses");
    SensorReport report{id, std::move(bpa), optional_number(r, "reliability", where), {}};

    const auto distance = optional_number(r, "distance", where);
    std::optional<CurveParams> curve;
    if (r.contains("curve")) {
      curve = parse_curve(require_object(r, "curve", where), where + "/curve");
    }
    if (distance) {
      if (!curve) curve = defaults;
      if (!curve) invalid(where, "'distance' given but no curve and no defaults");
      report.from_curve = CurveReliability{*distance, *curve};
    } else if (curve) {
      invalid(where, "'curve' given without a 'distance'");
    }
    try {
      report.validate();
    } catch (const Error& e) {
      invalid(where, e.what());
    }
    reports.push_back(std::move(report));
  }
  return Scenario{*frame, std::move(reports), defaults};
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::ValidationError,
                fmt::format("cannot open scenario file '{}'", path.string()));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

std::string serialize_scenario(const Scenario& scenario) {
  nlohmann::ordered_json doc;
  doc["format"] = kScenarioFormat;
  doc["frame"] = std::vector<std::string>(scenario.frame.labels().begin(),
                                          scenario.frame.labels().end());
  if (scenario.defaults) doc["defaults"] = curve_to_json(*scenario.defaults);
  auto reports = nlohmann::ordered_json::array();
  for (const auto& report : scenario.reports) {
    nlohmann::ordered_json r;
    r["source_id"] = report.source_id;
    nlohmann::ordered_json masses = nlohmann::ordered_json::object();
    for (const auto& [set, m] : report.bpa.masses()) masses[scenario.frame.format(set)] = m;
    r["masses"] = masses;
    if (report.reliability) r["reliability"] = *report.reliability;
    if (report.from_curve) {
      r["distance"] = report.from_curve->distance;
      if (!scenario.defaults || !(*scenario.defaults == report.from_curve->curve)) {
        r["curve"] = curve_to_json(report.from_curve->curve);
      }
    }
    reports.push_back(std::move(r));
  }
  doc["reports"] = std::move(reports);
  return doc.dump(2) + "\n";
}

}  // namespace qds
