#pragma once

#include "qfed/greens.hpp"
#include "qfed/source_integral.hpp"

namespace qfed {

// Generalized nonlocal density of states contributions at (x, omega, x'),
// split by source channel. Units: s/m^2 per unit source length.
struct NldosSample {
  double e_from_e = 0.0, e_from_m = 0.0;
  double m_from_e = 0.0, m_from_m = 0.0;
  double tot_from_e = 0.0, tot_from_m = 0.0;

  double e() const { return e_from_e + e_from_m; }
  double m() const { return m_from_e + m_from_m; }
  double tot() const { return tot_from_e + tot_from_m; }
};

NldosSample nldos(const GreensSample& g, cdouble eps_field, cdouble mu_field,
                  cdouble eps_source, cdouble mu_source, double omega,
                  const PhysicalConstants& pc = {});

enum class LdosRoute { imaginary_part, integral };

struct LdosSample {
  double rho_e = 0.0, rho_m = 0.0, rho_tot = 0.0;  // [s/m^2]
  LdosRoute source = LdosRoute::imaginary_part;
};

// Imaginary-part route (exact material parameters, no source integral).
LdosSample ldos(const Stack& stack, const FrequencySample& freq, double x,
                const PhysicalConstants& pc = {});

// Integral route: LDOS as the source integral of the NLDOS. Requires
// convergent lead tails (loss floor on lossless leads).
LdosSample ldos_integral(const Stack& stack, const FrequencySample& freq,
                         double x, const QuadratureSpec& quad,
                         const PhysicalConstants& pc = {});

// Interference density of states at (x, omega, x'); signed.
struct IfdosSample {
  double value = 0.0;
  double e_part = 0.0, m_part = 0.0;
};

IfdosSample ifdos(const GreensSample& g, cdouble eps_source, cdouble mu_source,
                  double omega, double n_r_field,
                  const PhysicalConstants& pc = {});

// The IFDOS divided by n_r(x); this is the quantity whose eta-weighted
// source integral (times hbar*omega*c) gives the Poynting flux, with the
// energy-velocity prefactor cancelled analytically.
double ifdos_core(const GreensSample& g, cdouble eps_source, cdouble mu_source,
                  double omega, const PhysicalConstants& pc = {});

}  // namespace qfed
