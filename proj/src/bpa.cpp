#include "qdsfusion/bpa.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "qdsfusion/error.hpp"

namespace qds {
namespace {

void require_same_frame(const Frame& a, const Frame& b) {
  if (!a.same_as(b)) {
    throw Error(ErrorKind::FrameMismatch, "bodies of evidence are defined on different frames");
  }
}

void check_mass_value(const Frame& frame, FocalSet set, double mass) {
  if (!std::isfinite(mass) || mass < 0.0) {
    throw Error(ErrorKind::NegativeMass,
                fmt::format("mass {} on {{{}}} is not a nonnegative number", mass,
                            frame.format(set)));
  }
  if (set.empty() && mass > 0.0) {
    throw Error(ErrorKind::EmptyFocalSet, "the empty set cannot carry mass");
  }
  if ((set.bits & ~frame.universe().bits) != 0) {
    throw Error(ErrorKind::InvalidArgument, "subset mask exceeds the frame");
  }
}

Bpa::MassMap finalize(Bpa::MassMap masses) {
  std::erase_if(masses, [](const auto& kv) { return kv.second == 0.0; });
  double total = 0.0;
  for (const auto& [set, m] : masses) total += m;
  if (std::abs(total - 1.0) > kMassSumTolerance) {
    throw Error(ErrorKind::MassSumViolation,
                fmt::format("masses sum to {}, expected 1 within {}", total, kMassSumTolerance));
  }
  return masses;
}

}  // namespace

Bpa Bpa::create(Frame frame, std::span<const MassEntry> entries) {
  MassMap masses;
  for (const auto& entry : entries) {
    const FocalSet set = frame.subset(entry.labels);
    check_mass_value(frame, set, entry.mass);
    if (entry.mass > 0.0) masses[set] += entry.mass;
  }
  auto checked = finalize(std::move(masses));
  return Bpa(std::move(frame), std::move(checked));
}

Bpa Bpa::from_masses(Frame frame, const MassMap& masses) {
  for (const auto& [set, m] : masses) check_mass_value(frame, set, m);
  auto checked = finalize(masses);
  return Bpa(std::move(frame), std::move(checked));
}

Bpa Bpa::vacuous(Frame frame) {
  MassMap masses{{frame.universe(), 1.0}};
  return Bpa(std::move(frame), std::move(masses));
}

Bpa Bpa::from_combination(Frame frame, MassMap masses) {
  std::erase_if(masses, [](const auto& kv) { return !(kv.second > 0.0); });
  return Bpa(std::move(frame), std::move(masses));
}

double Bpa::mass(FocalSet set) const noexcept {
  const auto it = masses_.find(set);
  return it == masses_.end() ? 0.0 : it->second;
}

double Bpa::total() const noexcept {
  double sum = 0.0;
  for (const auto& [set, m] : masses_) sum += m;
  return sum;
}

double max_abs_difference(const Bpa& a, const Bpa& b) {
  require_same_frame(a.frame(), b.frame());
  double worst = 0.0;
  for (const auto& [set, m] : a.masses()) worst = std::max(worst, std::abs(m - b.mass(set)));
  for (const auto& [set, m] : b.masses()) worst = std::max(worst, std::abs(m - a.mass(set)));
  return worst;
}

double conflict(const Bpa& m1, const Bpa& m2) {
  require_same_frame(m1.frame(), m2.frame());
  double k = 0.0;
  for (const auto& [b, mb] : m1.masses()) {
    for (const auto& [c, mc] : m2.masses()) {
      if ((b & c).empty()) k += mb * mc;
    }
  }
  return k;
}

namespace {

// Returns the combined BPA together with its conflict coefficient.
std::pair<Bpa, double> dempster_step(const Bpa& m1, const Bpa& m2) {
  require_same_frame(m1.frame(), m2.frame());
  Bpa::MassMap joint;
  double k = 0.0;
  for (const auto& [b, mb] : m1.masses()) {
    for (const auto& [c, mc] : m2.masses()) {
      const FocalSet a = b & c;
      if (a.empty()) {
        k += mb * mc;
      } else {
        joint[a] += mb * mc;
      }
    }
  }
  if (k >= 1.0 - kTotalConflictMargin) {
    throw Error(ErrorKind::TotalConflict,
                fmt::format("conflict coefficient K = {} leaves no mass to renormalize", k));
  }
  const double norm = 1.0 - k;
  for (auto& [set, m] : joint) m /= norm;
  return {Bpa::from_combination(m1.frame(), std::move(joint)), k};
}

}  // namespace

Bpa combine_dempster(const Bpa& m1, const Bpa& m2) { return dempster_step(m1, m2).first; }

CombinationTrace combine_sequential_traced(std::span<const Bpa> boes) {
  if (boes.empty()) {
    throw Error(ErrorKind::InvalidArgument, "cannot combine an empty list of evidence");
  }
  CombinationTrace trace{boes.front(), {}};
  for (std::size_t i = 1; i < boes.size(); ++i) {
    try {
      auto [next, k] = dempster_step(trace.result, boes[i]);
      trace.result = std::move(next);
      trace.conflicts.push_back(k);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TotalConflict) throw;
      throw Error(ErrorKind::TotalConflict,
                  fmt::format("step {} (combining evidence #{}): {}", i, i, e.what()), i);
    }
  }
  return trace;
}

Bpa combine_sequential(std::span<const Bpa> boes) {
  return combine_sequential_traced(boes).result;
}

Bpa weighted_average(std::span<const Bpa> boes, std::span<const double> weights) {
  if (boes.empty()) {
    throw Error(ErrorKind::InvalidArgument, "cannot average an empty list of evidence");
  }
  if (boes.size() != weights.size()) {
    throw Error(ErrorKind::InvalidArgument,
                fmt::format("{} bodies of evidence but {} weights", boes.size(), weights.size()));
  }
  double weight_sum = 0.0;
  for (const double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw Error(ErrorKind::WeightSumViolation, fmt::format("weight {} is negative", w));
    }
    weight_sum += w;
  }
  if (std::abs(weight_sum - 1.0) > kMassSumTolerance) {
    throw Error(ErrorKind::WeightSumViolation,
                fmt::format("weights sum to {}, expected 1", weight_sum));
  }
  const Frame& frame = boes.front().frame();
  Bpa::MassMap out;
  for (std::size_t i = 0; i < boes.size(); ++i) {
    require_same_frame(frame, boes[i].frame());
    for (const auto& [set, m] : boes[i].masses()) out[set] += weights[i] * m;
  }
  return Bpa::from_combination(frame, std::move(out));
}

CombinationTrace self_combine_traced(const Bpa& m, std::size_t k) {
  if (k == 0) {
    throw Error(ErrorKind::InvalidArgument, "self-combination count must be at least 1");
  }
  CombinationTrace trace{m, {}};
  for (std::size_t i = 1; i < k; ++i) {
    try {
      auto [next, conflict_k] = dempster_step(trace.result, m);
      trace.result = std::move(next);
      trace.conflicts.push_back(conflict_k);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TotalConflict) throw;
      throw Error(ErrorKind::TotalConflict,
                  fmt::format("self-combination step {}: {}", i, e.what()), i);
    }
  }
  return trace;
}

Bpa self_combine(const Bpa& m, std::size_t k) { return self_combine_traced(m, k).result; }

}  // namespace qds
