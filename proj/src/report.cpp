#include "qdsfusion/report.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

namespace qds {
namespace {

// Singletons first, then larger subsets; ties by mask.
struct DisplayOrder {
  bool operator()(FocalSet a, FocalSet b) const noexcept {
    if (a.cardinality() != b.cardinality()) return a.cardinality() < b.cardinality();
    return a.bits < b.bits;
  }
};

std::string set_label(const Frame& frame, FocalSet set) {
  return fmt::format("{{{}}}", frame.format(set));
}

}  // namespace

std::string format_fusion_table(const FusionResult& result) {
  const Bpa& fused = result.fused;
  std::string out;
  auto it = std::back_inserter(out);
  fmt::format_to(it, "strategy: {}\n\n", to_string(result.strategy));
  fmt::format_to(it, "{:<16} {:>8}\n", "focal set", "mass");
  std::set<FocalSet, DisplayOrder> sets;
  for (const auto& [set, m] : fused.masses()) sets.insert(set);
  for (const FocalSet set : sets) {
    fmt::format_to(it, "{:<16} {:>8.4f}\n", set_label(fused.frame(), set), fused.mass(set));
  }
  if (!result.credibilities.empty()) {
    fmt::format_to(it, "\n{:<16} {:>8}\n", "source", "Crd");
    for (const auto& [id, crd] : result.credibilities) {
      fmt::format_to(it, "{:<16} {:>8.4f}\n", id, crd);
    }
  }
  if (!result.conflicts.empty()) {
    fmt::format_to(it, "\n{:<16} {:>8}\n", "step", "K");
    for (std::size_t i = 0; i < result.conflicts.size(); ++i) {
      fmt::format_to(it, "{:<16} {:>8.4f}\n", i + 1, result.conflicts[i]);
    }
  }
  return out;
}

std::string format_comparison_table(std::span<const StrategyOutcome> rows) {
  std::set<FocalSet, DisplayOrder> columns;
  const Frame* frame = nullptr;
  for (const auto& row : rows) {
    if (!row.result) continue;
    frame = &row.result->fused.frame();
    for (const auto& [set, m] : row.result->fused.masses()) columns.insert(set);
  }
  // Every singleton gets a column even when no strategy assigns it mass.
  if (frame) {
    for (std::size_t i = 0; i < frame->size(); ++i) columns.insert(frame->singleton(i));
  }

  std::string out;
  auto it = std::back_inserter(out);
  fmt::format_to(it, "{:<22}", "strategy");
  for (const FocalSet set : columns) {
    fmt::format_to(it, " {:>10}", fmt::format("m({})", set_label(*frame, set)));
  }
  fmt::format_to(it, "  status\n");
  for (const auto& row : rows) {
    fmt::format_to(it, "{:<22}", to_string(row.strategy));
    if (row.result) {
      for (const FocalSet set : columns) {
        fmt::format_to(it, " {:>10.4f}", row.result->fused.mass(set));
      }
      fmt::format_to(it, "  ok\n");
    } else {
      for (std::size_t i = 0; i < columns.size(); ++i) fmt::format_to(it, " {:>10}", "-");
      fmt::format_to(it, "  {}: {}\n", to_string(row.error->kind()), row.error->what());
    }
  }
  return out;
}

nlohmann::ordered_json fusion_to_json(const FusionResult& result) {
  nlohmann::ordered_json out;
  out["strategy"] = std::string(to_string(result.strategy));
  nlohmann::ordered_json fused = nlohmann::ordered_json::object();
  for (const auto& [set, m] : result.fused.masses()) fused[result.fused.frame().format(set)] = m;
  out["fused"] = fused;
  nlohmann::ordered_json crd = nlohmann::ordered_json::object();
  for (const auto& [id, value] : result.credibilities) crd[id] = value;
  out["credibilities"] = crd;
  out["conflicts"] = result.conflicts;
  return out;
}

nlohmann::ordered_json error_to_json(const Error& error) {
  nlohmann::ordered_json out;
  out["kind"] = std::string(to_string(error.kind()));
  out["message"] = error.what();
  if (error.step()) out["step"] = *error.step();
  return out;
}

nlohmann::ordered_json comparison_to_json(std::span<const StrategyOutcome> rows) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json r;
    if (row.result) {
      r = fusion_to_json(*row.result);
      r["status"] = "ok";
    } else {
      r["strategy"] = std::string(to_string(row.strategy));
      r["status"] = "error";
      r["error"] = error_to_json(*row.error);
    }
    out.push_back(std::move(r));
  }
  return nlohmann::ordered_json{{"rows", out}};
}

}  // namespace qds
