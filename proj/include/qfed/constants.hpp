#pragma once

namespace qfed {

// SI values; eps0 is derived from mu0 and c so that c^2*eps0*mu0 = 1 holds
// to machine precision.
struct PhysicalConstants {
  double c = 299792458.0;                 // speed of light [m/s]
  double hbar = 1.054571817e-34;          // reduced Planck constant [J s]
  double mu0 = 1.25663706143591730e-6;    // vacuum permeability [H/m]
  double eps0 = 8.85418781762038985e-12;  // vacuum permittivity [F/m]
  double kB = 1.380649e-23;               // Boltzmann constant [J/K]
  double S = 1.0;                         // quantization area [m^2]
};

inline constexpr double kElectronVolt = 1.602176634e-19;  // [J]

}  // namespace qfed
