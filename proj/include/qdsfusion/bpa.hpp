#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qdsfusion/frame.hpp"

namespace qds {

// Absolute tolerance on the total mass of a basic probability assignment.
inline constexpr double kMassSumTolerance = 1e-9;
// Conflict at or above 1 - kTotalConflictMargin is treated as total.
inline constexpr double kTotalConflictMargin = 1e-12;

struct MassEntry {
  std::vector<std::string> labels;
  double mass = 0.0;
};

// Basic probability assignment over the nonempty subsets of a frame.
// Only focal elements (strictly positive mass) are stored.
class Bpa {
 public:
  using MassMap = std::map<FocalSet, double>;

  // Validating constructor. Entries for the same subset accumulate; zero
  // masses are dropped. Throws EmptyFocalSet, NegativeMass,
  // MassSumViolation, UnknownLabel.
  static Bpa create(Frame frame, std::span<const MassEntry> entries);
  static Bpa from_masses(Frame frame, const MassMap& masses);

  // m(Theta) = 1.
  static Bpa vacuous(Frame frame);

  const Frame& frame() const noexcept { return frame_; }
  const MassMap& masses() const noexcept { return masses_; }
  std::size_t focal_count() const noexcept { return masses_.size(); }

  // 0 for subsets that are not focal.
  double mass(FocalSet set) const noexcept;
  double mass(std::string_view subset) const { return mass(frame_.parse_subset(subset)); }

  double total() const noexcept;

  // For results of combination rules: drops zeros and skips the sum check.
  static Bpa from_combination(Frame frame, MassMap masses);

 private:
  Bpa(Frame frame, MassMap masses) : frame_(std::move(frame)), masses_(std::move(masses)) {}

  Frame frame_;
  MassMap masses_;
};

// Largest absolute per-subset mass difference; frames must match.
double max_abs_difference(const Bpa& a, const Bpa& b);

// Conflict coefficient K: total product mass over disjoint focal pairs.
double conflict(const Bpa& m1, const Bpa& m2);

// Dempster's rule. Throws TotalConflict when K >= 1 - 1e-12.
Bpa combine_dempster(const Bpa& m1, const Bpa& m2);

struct CombinationTrace {
  Bpa result;
  // Conflict of each binary step, in fold order.
  std::vector<double> conflicts;
};

// Left fold of combine_dempster over boes. A TotalConflict error carries the
// zero-based index of the BOE whose combination failed.
CombinationTrace combine_sequential_traced(std::span<const Bpa> boes);
Bpa combine_sequential(std::span<const Bpa> boes);

// m'(A) = sum_i w_i m_i(A). Weights must be nonnegative and sum to 1.
Bpa weighted_average(std::span<const Bpa> boes, std::span<const double> weights);

// Dempster combination of k copies of m.
CombinationTrace self_combine_traced(const Bpa& m, std::size_t k);
Bpa self_combine(const Bpa& m, std::size_t k);

}  // namespace qds
