#include "qdsfusion/fusion.hpp"

#include <cmath>
#include <numeric>

#include <fmt/format.h>

namespace qds {

std::string_view to_string(Strategy strategy) noexcept {
  switch (strategy) {
    case Strategy::Classical: return "classical";
    case Strategy::Murphy: return "murphy";
    case Strategy::ReliabilityWeighted: return "reliability-weighted";
  }
  return "unknown";
}

std::optional<Strategy> parse_strategy(std::string_view name) noexcept {
  if (name == "classical") return Strategy::Classical;
  if (name == "murphy") return Strategy::Murphy;
  if (name == "reliability" || name == "reliability-weighted") {
    return Strategy::ReliabilityWeighted;
  }
  return std::nullopt;
}

void SensorReport::validate() const {
  if (reliability && !(*reliability >= 0.0 && *reliability <= 1.0)) {
    throw Error(ErrorKind::ValidationError,
                fmt::format("report '{}': reliability {} outside [0, 1]", source_id,
                            *reliability));
  }
  if (from_curve && !(from_curve->distance > 0.0 && std::isfinite(from_curve->distance))) {
    throw Error(ErrorKind::ValidationError,
                fmt::format("report '{}': distance {} must be positive", source_id,
                            from_curve->distance));
  }
}

double resolve_reliability(const SensorReport& report, std::size_t grid_size) {
  report.validate();
  if (report.reliability) return *report.reliability;
  if (report.from_curve) {
    const auto curve = confidence_curve(report.from_curve->curve, grid_size);
    return curve.reliability_at(report.from_curve->distance);
  }
  throw Error(ErrorKind::MissingReliability,
              fmt::format("report '{}' has neither a reliability nor a distance and curve",
                          report.source_id));
}

std::vector<double> credibility(std::span<const double> mus) {
  double total = 0.0;
  for (const double mu : mus) {
    if (!(mu >= 0.0) || !std::isfinite(mu)) {
      throw Error(ErrorKind::InvalidArgument,
                  fmt::format("reliability {} must be a nonnegative number", mu));
    }
    total += mu;
  }
  if (total <= 1e-12) {
    throw Error(ErrorKind::AllUnreliable, "no report carries a positive reliability");
  }
  std::vector<double> out(mus.begin(), mus.end());
  for (double& v : out) v /= total;
  return out;
}

namespace {

std::vector<Bpa> collect_bpas(std::span<const SensorReport> reports) {
  if (reports.empty()) {
    throw Error(ErrorKind::InvalidArgument, "fusion needs at least one report");
  }
  std::vector<Bpa> boes;
  boes.reserve(reports.size());
  for (const auto& r : reports) {
    if (!r.bpa.frame().same_as(reports.front().bpa.frame())) {
      throw Error(ErrorKind::FrameMismatch,
                  fmt::format("report '{}' uses a different frame", r.source_id));
    }
    boes.push_back(r.bpa);
  }
  return boes;
}

FusionResult average_then_self_combine(Strategy strategy, std::span<const Bpa> boes,
                                       std::span<const double> weights) {
  const Bpa average = weighted_average(boes, weights);
  auto trace = self_combine_traced(average, boes.size());
  return FusionResult{strategy, std::move(trace.result), {}, std::move(trace.conflicts)};
}

}  // namespace

FusionResult fuse(std::span<const SensorReport> reports, Strategy strategy,
                  const FusionOptions& options) {
  const auto boes = collect_bpas(reports);
  switch (strategy) {
    case Strategy::Classical: {
      auto trace = combine_sequential_traced(boes);
      return FusionResult{strategy, std::move(trace.result), {}, std::move(trace.conflicts)};
    }
    case Strategy::Murphy: {
      const std::vector<double> weights(boes.size(), 1.0 / static_cast<double>(boes.size()));
      return average_then_self_combine(strategy, boes, weights);
    }
    case Strategy::ReliabilityWeighted: {
      std::vector<double> mus;
      mus.reserve(reports.size());
      for (const auto& r : reports) mus.push_back(resolve_reliability(r, options.grid_size));
      const auto weights = credibility(mus);
      auto result = average_then_self_combine(strategy, boes, weights);
      for (std::size_t i = 0; i < reports.size(); ++i) {
        result.credibilities.emplace_back(reports[i].source_id, weights[i]);
      }
      return result;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown fusion strategy");
}

std::vector<StrategyOutcome> compare_strategies(std::span<const SensorReport> reports,
                                                const FusionOptions& options) {
  std::vector<StrategyOutcome> rows;
  for (const Strategy s : kAllStrategies) {
    StrategyOutcome row{s, std::nullopt, std::nullopt};
    try {
      row.result = fuse(reports, s, options);
    } catch (const Error& e) {
      row.error = e;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace qds
