#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qdsfusion/bpa.hpp"
#include "qdsfusion/confidence_curve.hpp"
#include "qdsfusion/error.hpp"

namespace qds {

enum class Strategy { Classical, Murphy, ReliabilityWeighted };

std::string_view to_string(Strategy strategy) noexcept;
// Accepts "classical", "murphy", "reliability" and "reliability-weighted".
std::optional<Strategy> parse_strategy(std::string_view name) noexcept;

inline constexpr Strategy kAllStrategies[] = {Strategy::Classical, Strategy::Murphy,
                                              Strategy::ReliabilityWeighted};

// Reliability derived from the sensor's confidence curve at the object
// distance.
struct CurveReliability {
  double distance = 0.0;
  CurveParams curve;

  friend bool operator==(const CurveReliability&, const CurveReliability&) = default;
};

struct SensorReport {
  std::string source_id;
  Bpa bpa;
  // A direct reliability takes precedence over the curve-derived one.
  std::optional<double> reliability;
  std::optional<CurveReliability> from_curve;

  // Throws ValidationError when a direct value lies outside [0, 1] or a
  // curve distance is not positive.
  void validate() const;
};

// Resolved reliability mu of one report. Throws MissingReliability when the
// report carries neither form.
double resolve_reliability(const SensorReport& report,
                           std::size_t grid_size = kDefaultGridSize);

// Crd_i = mu_i / sum_j mu_j. Throws AllUnreliable when the sum is <= 1e-12.
std::vector<double> credibility(std::span<const double> mus);

struct FusionResult {
  Strategy strategy = Strategy::Classical;
  Bpa fused;
  // (source_id, Crd); empty for the classical strategy.
  std::vector<std::pair<std::string, double>> credibilities;
  // Conflict coefficient of every Dempster step performed.
  std::vector<double> conflicts;
};

struct FusionOptions {
  std::size_t grid_size = kDefaultGridSize;
};

FusionResult fuse(std::span<const SensorReport> reports, Strategy strategy,
                  const FusionOptions& options = {});

struct StrategyOutcome {
  Strategy strategy = Strategy::Classical;
  std::optional<FusionResult> result;
  std::optional<Error> error;

  bool ok() const noexcept { return result.has_value(); }
};

// Runs every strategy; a failing strategy is reported in its own row.
std::vector<StrategyOutcome> compare_strategies(std::span<const SensorReport> reports,
                                                const FusionOptions& options = {});

}  // namespace qds
