#pragma once

// The five bodies of evidence of the five-radar target recognition example
// and the reliabilities attached to them.

#include <vector>

#include "qdsfusion/bpa.hpp"
#include "qdsfusion/fusion.hpp"

namespace qds::testing {

inline Frame abc_frame() { return Frame({"A", "B", "C"}); }

inline std::vector<Bpa> section4_boes(const Frame& frame) {
  const auto make = [&](std::vector<MassEntry> entries) { return Bpa::create(frame, entries); };
  return {
      make({{{"A"}, 0.6}, {{"B"}, 0.15}, {{"A", "C"}, 0.25}}),
      make({{{"A"}, 0.5}, {{"B"}, 0.3}, {{"C"}, 0.2}}),
      make({{{"B"}, 0.95}, {{"C"}, 0.05}}),
      make({{{"A"}, 0.55}, {{"B"}, 0.25}, {{"A", "C"}, 0.2}}),
      make({{{"A"}, 0.6}, {{"B"}, 0.3}, {{"B", "C"}, 0.1}}),
  };
}

inline const std::vector<double>& section4_reliabilities() {
  static const std::vector<double> mus{0.55, 0.6, 0.25, 0.45, 0.5};
  return mus;
}

inline std::vector<SensorReport> section4_reports(const Frame& frame) {
  const auto boes = section4_boes(frame);
  std::vector<SensorReport> reports;
  for (std::size_t i = 0; i < boes.size(); ++i) {
    reports.push_back(
        {"radar-" + std::to_string(i + 1), boes[i], section4_reliabilities()[i], std::nullopt});
  }
  return reports;
}

}  // namespace qds::testing
