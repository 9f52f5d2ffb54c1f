#pragma once

// Analysis reports produced by the CLI, shaped by docs/report.schema.json.

#include "tropmech/io.hpp"

namespace tropmech {

// Subdivision, complex facets, nondegeneracy, sensitivities, regularity
// witness, and a zero-cycle audit over all short cycles.
Json analyze_mechanism_report(const Mechanism& mech);

Json analyze_affine_report(const AffineMaximizer& am);

struct EnumerateReportOptions {
  bool regular_only = false;
  std::string orbits = "none";  // none | sym | full
  bool long_running = false;
  int threads = 1;
  std::size_t max_representatives = 64;
};
Json enumerate_report(const PointConfiguration& cfg, const EnumerateReportOptions& opts);

}  // namespace tropmech
