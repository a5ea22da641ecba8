#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "qdsfusion/fusion.hpp"

namespace qds {

// Human-readable report, masses at 4 decimals.
std::string format_fusion_table(const FusionResult& result);
std::string format_comparison_table(std::span<const StrategyOutcome> rows);

// Machine-readable forms with full double precision.
nlohmann::ordered_json fusion_to_json(const FusionResult& result);
nlohmann::ordered_json error_to_json(const Error& error);
nlohmann::ordered_json comparison_to_json(std::span<const StrategyOutcome> rows);

}  // namespace qds
