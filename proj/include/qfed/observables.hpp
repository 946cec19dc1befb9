#pragma once

#include "qfed/dos.hpp"

namespace qfed {

enum class FieldType { e, m, tot };

// Everything the integral route yields at one (x, omega) sample, computed in
// a single pass over the source axis. Densities of states are the
// integral-route values, so the photon numbers and the net emission are
// internally consistent with them.
struct SpectralPoint {
  double rho_e = 0.0, rho_m = 0.0, rho_tot = 0.0;  // [s/m^2]
  double n_e = 0.0, n_m = 0.0, n_tot = 0.0;        // photon numbers
  double s = 0.0;   // spectral Poynting flux [W/m^2 per rad/s]
  double q = 0.0;   // spectral net emission density [W/m^3 per rad/s]
  double eta = 0.0; // local source occupation at x
};

// field_layer = -1 locates the field layer from x; passing an explicit layer
// evaluates the one-sided limit at an interface.
SpectralPoint evaluate_point(const Stack& stack, const FrequencySample& freq,
                             double x, const QuadratureSpec& quad,
                             const PhysicalConstants& pc = {},
                             int field_layer = -1);

double photon_number(const Stack& stack, const FrequencySample& freq, double x,
                     FieldType j, const QuadratureSpec& quad,
                     const PhysicalConstants& pc = {});

struct FluctuationSample {
  double e_sq = 0.0;  // [V^2/m^2 per rad/s]
  double h_sq = 0.0;  // [A^2/m^2 per rad/s]
  double u = 0.0;     // [J/m^3 per rad/s]
};

FluctuationSample fluctuations(const Stack& stack, const FrequencySample& freq,
                               double x, const QuadratureSpec& quad,
                               const PhysicalConstants& pc = {});

double poynting(const Stack& stack, const FrequencySample& freq, double x,
                const QuadratureSpec& quad, const PhysicalConstants& pc = {});

double net_emission(const Stack& stack, const FrequencySample& freq, double x,
                    const QuadratureSpec& quad,
                    const PhysicalConstants& pc = {});

// Nonnegative ladder-operator weight profiles w_e(x'), w_m(x') for field
// type j at (x, omega); integral of w_e^2 + w_m^2 over sources is 1.
class LadderKernel {
 public:
  LadderKernel(const Stack& stack, const FrequencySample& freq, double x,
               FieldType j, const QuadratureSpec& quad,
               const PhysicalConstants& pc = {});

  double rho() const { return rho_; }
  // {w_e(xp), w_m(xp)}
  std::pair<double, double> weights(double xp) const;

 private:
  Stack stack_;
  FrequencySample freq_;
  CoefficientLadder ladder_;
  PhysicalConstants pc_;
  double x_;
  int field_layer_;
  FieldType j_;
  double rho_;
};

// Temperature of the probe layer at which its band-integrated net emission
// vanishes, found by bisection on [1 K, 1e4 K].
double steady_state_temperature(const Stack& stack, int probe_layer,
                                double omega_min, double omega_max,
                                const QuadratureSpec& quad,
                                const PhysicalConstants& pc = {},
                                double tol_kelvin = 1e-3);

}  // namespace qfed
