#pragma once

#include "qfed/config.hpp"
#include "qfed/table.hpp"
#include "qfed/verify.hpp"

namespace qfed {

// Full identity battery on one stack at one frequency. Integral-based checks
// run on the delta-floored stack; reciprocity runs on the exact one.
std::vector<CheckReport> verify_battery(const Stack& stack, double omega,
                                        double delta,
                                        const QuadratureSpec& quad,
                                        const PhysicalConstants& pc = {});

// Evaluates the configured quantity over the (omega, x) grid. Rows are
// ordered omega-major then x; point evaluations run on `workers` threads and
// assembly is deterministic. Solver errors are rethrown with the offending
// (energy, position) attached.
ResultTable run_sweep(const RunConfig& config, int workers = 1,
                      const PhysicalConstants& pc = {});

}  // namespace qfed
