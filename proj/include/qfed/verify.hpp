#pragma once

#include <string>
#include <vector>

#include "qfed/observables.hpp"

namespace qfed {

struct CheckReport {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool applicable = true;  // false means the check did not apply (not run)
  std::string context;
};

CheckReport make_report(std::string name, double residual, double tolerance,
                        std::string context);

// Green's function integral identity for one family at a (x, x') pair:
// k0^2 * Int[eps_i |G_jj G_jj*| + ...] dy against Im G_jj(x, x').
CheckReport check_green_identity(const Stack& stack,
                                 const FrequencySample& freq, double x,
                                 double xp, Family family,
                                 const QuadratureSpec& quad,
                                 const PhysicalConstants& pc = {});

// Max reciprocity residual of g_ee, g_mm and the exchange relation over
// `pairs` seeded random (x, x') samples drawn from [x_lo, x_hi].
CheckReport check_reciprocity(const Stack& stack, const FrequencySample& freq,
                              double x_lo, double x_hi, int pairs,
                              unsigned seed, const PhysicalConstants& pc = {});

// |Int rho_IF dx'| against its L1 mass at field point x.
CheckReport check_ifdos_zero(const Stack& stack, const FrequencySample& freq,
                             double x, const QuadratureSpec& quad,
                             const PhysicalConstants& pc = {});

// Uniform-temperature battery: photon numbers equal the source occupation,
// flux and net emission vanish, on every grid point. Not applicable when the
// stack temperatures are nonuniform.
CheckReport check_equilibrium(const Stack& stack, const FrequencySample& freq,
                              std::span<const double> grid,
                              const QuadratureSpec& quad,
                              const PhysicalConstants& pc = {});

// Two-sided Poynting flux mismatch at every interface.
CheckReport check_poynting_continuity(const Stack& stack,
                                      const FrequencySample& freq,
                                      const QuadratureSpec& quad,
                                      const PhysicalConstants& pc = {});

}  // namespace qfed
