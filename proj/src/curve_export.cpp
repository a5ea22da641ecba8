#include "qdsfusion/curve_export.hpp"

#include <fmt/format.h>

namespace qds {

std::string export_curve_csv(const ConfidenceCurve& curve) {
  const auto& p = curve.params();
  std::string out;
  auto it = std::back_inserter(out);
  fmt::format_to(it, "# confidence coefficient curve\n");
  fmt::format_to(it, "# c={:.17g}\n# L={:.17g}\n# gamma={:.17g}\n# x_r={:.17g}\n", p.c(),
                 p.big_l(), p.gamma(), p.x_r());
  fmt::format_to(it, "# mode={}\n# points={}\n", to_string(p.mode()), curve.xs().size());
  fmt::format_to(it, "# alpha={:.17g}\n# x0={:.17g}\n# norm={:.17g}\n", p.alpha(), curve.x0(),
                 curve.norm());
  out += "x,P,mu\n";
  const auto xs = curve.xs();
  const auto ps = curve.densities();
  const auto mus = curve.mus();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    fmt::format_to(it, "{:.17g},{:.17g},{:.17g}\n", xs[i], ps[i], mus[i]);
  }
  return out;
}

}  // namespace qds
