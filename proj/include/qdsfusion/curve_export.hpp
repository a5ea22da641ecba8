#pragma once

#include <string>

#include "qdsfusion/confidence_curve.hpp"

namespace qds {

// '#' header lines (parameters, alpha, x0), a column header, then one
// "x,P,mu" row per grid point with round-trip precision.
std::string export_curve_csv(const ConfidenceCurve& curve);

}  // namespace qds
