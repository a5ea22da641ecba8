// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status
// when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "qdsfusion/bessel.hpp"
#include "qdsfusion/bpa.hpp"
#include "qdsfusion/confidence_curve.hpp"
#include "qdsfusion/error.hpp"
#include "qdsfusion/fusion.hpp"
#include "qdsfusion/scenario.hpp"
#include "random_bpa.hpp"

namespace {

using namespace qds;
using Clock = std::chrono::steady_clock;

constexpr double kPi = std::numbers::pi;
constexpr double kTableTolerance = 1e-3;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Scenario five_sensor_scenario() { return load_scenario(std::string(QDS_DATA_DIR) + "/section4.json"); }

// Compares m(A), m(B), m(C) against a Table 2 row.
void check_row(const Bpa& fused, const double (&expected)[3], Outcome& out) {
  const char* labels[] = {"A", "B", "C"};
  std::string values;
  for (int i = 0; i < 3; ++i) {
    const double got = fused.mass(labels[i]);
    values += fmt::format("{}m({})={:.4f}", i ? " " : "", labels[i], got);
    if (std::abs(got - expected[i]) > kTableTolerance) {
      out.fail(fmt::format("m({}) = {:.6f}, expected {:.4f} +/- {}", labels[i], got, expected[i],
                           kTableTolerance));
    }
  }
  if (out.pass) out.detail = values;
}

Outcome classical_row() {
  Outcome out;
  const auto start = Clock::now();
  const auto scenario = five_sensor_scenario();
  const auto result = fuse(scenario.reports, Strategy::Classical);
  const double elapsed = seconds_since(start);
  check_row(result.fused, {0.0, 0.9057, 0.0943}, out);
  if (elapsed >= 1.0) out.fail(fmt::format("took {:.3f} s", elapsed));
  return out;
}

Outcome murphy_row() {
  Outcome out;
  const auto result = fuse(five_sensor_scenario().reports, Strategy::Murphy);
  if (result.conflicts.size() != 4) out.fail("expected 4 self-combinations");
  check_row(result.fused, {0.7971, 0.2011, 0.0018}, out);
  return out;
}

Outcome reliability_row() {
  Outcome out;
  const auto scenario = five_sensor_scenario();
  const double mus[] = {0.55, 0.6, 0.25, 0.45, 0.5};
  for (std::size_t i = 0; i < 5; ++i) {
    if (scenario.reports[i].reliability != mus[i]) out.fail("fixture reliabilities differ");
  }
  const auto result = fuse(scenario.reports, Strategy::ReliabilityWeighted);
  if (result.conflicts.size() != 4) out.fail("expected 4 self-combinations");
  check_row(result.fused, {0.9373, 0.0609, 0.0018}, out);
  return out;
}

Outcome bessel_identities() {
  Outcome out;
  double worst_closed = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double z = 0.1 + (30.0 - 0.1) * i / 999.0;
    const double s = std::sqrt(2.0 / (kPi * z));
    worst_closed = std::max(worst_closed, std::abs(bessel_j(0.5, z) - s * std::sin(z)));
    worst_closed = std::max(worst_closed, std::abs(bessel_y(0.5, z) + s * std::cos(z)));
  }
  if (worst_closed > 1e-10) out.fail(fmt::format("half-order error {:.2e} > 1e-10", worst_closed));

  std::mt19937_64 rng(2017);
  std::uniform_real_distribution<double> order(kMinBesselOrder, kMaxBesselOrder);
  std::uniform_real_distribution<double> arg(0.1, 30.0);
  double worst_w = 0.0;
  for (int t = 0; t < 100; ++t) {
    const double a = order(rng);
    const double z = arg(rng);
    const double h = 1e-5 * std::min(1.0, z);
    const double dj = (bessel_j(a, z + h) - bessel_j(a, z - h)) / (2 * h);
    const double dy = (bessel_y(a, z + h) - bessel_y(a, z - h)) / (2 * h);
    const double w = bessel_j(a, z) * dy - dj * bessel_y(a, z);
    worst_w = std::max(worst_w, std::abs(w - 2.0 / (kPi * z)));
  }
  if (worst_w > 1e-8) out.fail(fmt::format("Wronskian error {:.2e} > 1e-8", worst_w));
  if (out.pass) {
    out.detail = fmt::format("closed-form max err {:.1e}, Wronskian max err {:.1e}",
                             worst_closed, worst_w);
  }
  return out;
}

Outcome ode_residual_and_shape() {
  struct Row {
    const char* name;
    double c, big_l, x_r;
  };
  const Row rows[] = {{"a", 10, 0.7, 14}, {"b", 10, 0.8, 12}, {"c", 10, 1.0, 10},
                      {"d", 10, 1.1, 13}, {"e", 10, 1.3, 6}};
  Outcome out;
  double worst = 0.0;
  for (const auto& row : rows) {
    const auto params = CurveParams::create(row.c, row.big_l, 0.0, row.x_r);
    const auto curve = confidence_curve(params);
    const WaveFunction wave(params);
    const auto xs = curve.xs();
    const std::size_t n = xs.size();
    const double h = row.x_r * 1e-4;

    double psi_scale = 0.0;
    for (const double x : xs) psi_scale = std::max(psi_scale, std::abs(wave.amplitude(x)));
    for (std::size_t i = n / 100; i < n - n / 100; ++i) {
      const double x = xs[i];
      const double mid = wave.amplitude(x);
      const double d2 = (wave.amplitude(x + h) - 2 * mid + wave.amplitude(x - h)) / (h * h);
      const double kinetic = params.c() * params.c() * d2;
      const double potential = params.gamma() / (x * x) * mid;
      const double residual = -kinetic - potential - params.big_l() * mid;
      const double scale =
          std::abs(kinetic) + std::abs(potential) + params.big_l() * psi_scale;
      worst = std::max(worst, std::abs(residual) / scale);
    }

    const auto mus = curve.mus();
    const auto peak = std::max_element(mus.begin(), mus.end());
    if (*peak != 1.0) out.fail(fmt::format("radar {}: max mu = {}", row.name, *peak));
    if (std::count(mus.begin(), mus.end(), 1.0) != 1) {
      out.fail(fmt::format("radar {}: argmax not unique", row.name));
    }
    if (!std::all_of(mus.begin(), mus.end(), [](double m) { return m >= 0.0 && m <= 1.0; })) {
      out.fail(fmt::format("radar {}: mu outside [0, 1]", row.name));
    }
    if (!(curve.x0() > 0.0 && curve.x0() < row.x_r)) {
      out.fail(fmt::format("radar {}: x0 = {} not inside (0, x_r)", row.name, curve.x0()));
    }
    for (const double beyond : {row.x_r * (1 + 1e-12), row.x_r * 1.5, row.x_r * 100}) {
      if (curve.reliability_at(beyond) != 0.0 || psi(params, beyond) != 0.0) {
        out.fail(fmt::format("radar {}: nonzero beyond x_r", row.name));
      }
    }
  }
  if (worst >= 1e-4) out.fail(fmt::format("max relative ODE residual {:.2e} >= 1e-4", worst));
  if (out.pass) out.detail = fmt::format("max relative ODE residual {:.1e}", worst);
  return out;
}

Outcome property_suites() {
  Outcome out;
  const auto start = Clock::now();
  std::mt19937_64 rng(1729);
  int oracle_checked = 0;
  for (int t = 0; t < 10'000; ++t) {
    const Frame frame = testing::random_frame(rng);
    const Bpa m1 = testing::random_bpa(rng, frame);
    const Bpa m2 = testing::random_bpa(rng, frame);
    const Bpa v = Bpa::vacuous(frame);
    if (max_abs_difference(combine_dempster(m1, v), m1) > 1e-12) {
      out.fail(fmt::format("trial {}: vacuous not neutral", t));
      break;
    }
    // Naive 2^N x 2^N enumeration.
    const std::size_t subsets = std::size_t{1} << frame.size();
    std::vector<double> joint(subsets, 0.0);
    double k = 0.0;
    for (std::size_t b = 1; b < subsets; ++b) {
      for (std::size_t c = 1; c < subsets; ++c) {
        const double p = m1.mass(FocalSet{b}) * m2.mass(FocalSet{c});
        if ((b & c) == 0) {
          k += p;
        } else {
          joint[b & c] += p;
        }
      }
    }
    if (std::abs(conflict(m1, m2) - conflict(m2, m1)) > 1e-15 || std::abs(conflict(m1, m2) - k) > 1e-12) {
      out.fail(fmt::format("trial {}: conflict mismatch", t));
      break;
    }
    if (k >= 1.0 - kTotalConflictMargin) continue;
    const Bpa r12 = combine_dempster(m1, m2);
    const Bpa r21 = combine_dempster(m2, m1);
    if (max_abs_difference(r12, r21) > 1e-12) {
      out.fail(fmt::format("trial {}: not commutative", t));
      break;
    }
    double worst = 0.0;
    for (std::size_t s = 1; s < subsets; ++s) {
      worst = std::max(worst, std::abs(r12.mass(FocalSet{s}) - joint[s] / (1.0 - k)));
    }
    if (worst > 1e-12 || std::abs(r12.total() - 1.0) > 1e-9) {
      out.fail(fmt::format("trial {}: oracle mismatch {:.2e}", t, worst));
      break;
    }
    ++oracle_checked;
  }

  std::uniform_int_distribution<std::size_t> count(1, 5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int fusion_checked = 0;
  for (int t = 0; t < 1'000 && out.pass; ++t) {
    const Frame frame = testing::random_frame(rng);
    std::vector<SensorReport> reports;
    const std::size_t n = count(rng);
    for (std::size_t i = 0; i < n; ++i) {
      reports.push_back({"r" + std::to_string(i), testing::random_bpa(rng, frame),
                         0.05 + 0.95 * unit(rng), std::nullopt});
    }
    const double scale = 0.01 + unit(rng);
    auto scaled = reports;
    for (auto& r : scaled) *r.reliability *= scale;
    auto with_silent = reports;
    with_silent.push_back({"silent", testing::random_bpa(rng, frame), 0.0, std::nullopt});
    try {
      const auto base = fuse(reports, Strategy::ReliabilityWeighted);
      const auto rescaled = fuse(scaled, Strategy::ReliabilityWeighted);
      if (max_abs_difference(base.fused, rescaled.fused) > 1e-9) {
        out.fail(fmt::format("trial {}: not scale invariant", t));
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(base.credibilities[i].second - rescaled.credibilities[i].second) > 1e-12) {
          out.fail(fmt::format("trial {}: credibility changed under scaling", t));
        }
      }
      // The silent report adds one self-combination; compare against the
      // average of the others combined the same number of times.
      std::vector<Bpa> boes;
      std::vector<double> mus;
      for (const auto& r : reports) {
        boes.push_back(r.bpa);
        mus.push_back(*r.reliability);
      }
      const Bpa expected = self_combine(weighted_average(boes, credibility(mus)), n + 1);
      const auto silent = fuse(with_silent, Strategy::ReliabilityWeighted);
      if (max_abs_difference(silent.fused, expected) > 1e-12) {
        out.fail(fmt::format("trial {}: zero-reliability report changed the result", t));
      }
      ++fusion_checked;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TotalConflict) throw;
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 60.0) out.fail(fmt::format("took {:.1f} s", elapsed));
  if (out.pass) {
    out.detail = fmt::format("{} oracle trials, {} fusion trials, {:.2f} s", oracle_checked,
                             fusion_checked, elapsed);
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"1 classical Dempster row", classical_row},
      {"2 Murphy row", murphy_row},
      {"3 reliability-weighted row", reliability_row},
      {"4 Bessel closed forms and Wronskian", bessel_identities},
      {"5 ODE residual and curve shape", ode_residual_and_shape},
      {"6 randomized property suites", property_suites},
  };
  const auto start = Clock::now();
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += o.pass ? 0 : 1;
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed in %.2f s\n", static_cast<int>(std::size(criteria)) - failures,
              std::size(criteria), seconds_since(start));
  return failures == 0 ? 0 : 1;
}
