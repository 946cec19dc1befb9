#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfed/constants.hpp"

namespace qfed {

using cdouble = std::complex<double>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationError : Error {
  using Error::Error;
};
struct ResonancePoleError : Error {
  using Error::Error;
};
struct QuadratureError : Error {
  using Error::Error;
};
struct DegenerateDosError : Error {
  using Error::Error;
};
struct PreconditionError : Error {
  using Error::Error;
};

// One material slab. The first and last layers of a Stack are semi-infinite
// and their thickness field is ignored (kept at 0).
struct Layer {
  double thickness = 0.0;  // [m], > 0 for interior layers
  cdouble epsilon{1.0, 0.0};
  cdouble mu{1.0, 0.0};
  double temperature = 0.0;  // [K]
};

// Layered structure: N interfaces separate N+1 layers. Layer indices are
// 1-based (layer 1 and layer N+1 are the semi-infinite leads), matching the
// interface index convention where interface l sits between layers l and l+1.
class Stack {
 public:
  Stack(std::vector<Layer> layers, std::vector<double> interfaces);

  // Builds interface positions from interior thicknesses; the first interface
  // is placed at `origin`. Lead thicknesses are ignored.
  static Stack from_layers(std::vector<Layer> layers, double origin = 0.0);

  int num_interfaces() const { return static_cast<int>(interfaces_.size()); }
  int num_layers() const { return static_cast<int>(layers_.size()); }

  const Layer& layer(int l) const { return layers_[static_cast<size_t>(l - 1)]; }
  Layer& layer(int l) { return layers_[static_cast<size_t>(l - 1)]; }
  double interface(int l) const { return interfaces_[static_cast<size_t>(l - 1)]; }

  // Thickness d_l = x_l - x_{l-1} for interior layers; 0 for the leads.
  double thickness(int l) const;

  // Layer index owning position x. A point exactly on an interface belongs
  // to the layer on its left.
  int locate(double x) const;

  const std::vector<double>& interfaces() const { return interfaces_; }
  const std::vector<Layer>& layers() const { return layers_; }

 private:
  std::vector<Layer> layers_;
  std::vector<double> interfaces_;
};

// Returns a copy with an imaginary loss floor `delta` added to epsilon and mu
// of any lead that is lossless in the corresponding channel. Interior layers
// are never modified.
Stack with_lead_loss_floor(const Stack& stack, double delta);

// epsilon <-> mu swap in every layer (duality transformation).
Stack with_swapped_eps_mu(const Stack& stack);

// Branch-selected refractive index: n^2 = eps*mu with Im(n) >= 0, and
// Re(n) > 0 when Im(n) = 0.
cdouble refractive_index(cdouble epsilon, cdouble mu);

// Bose-Einstein occupation 1/(exp(hbar*omega/(kB*T)) - 1); 0 at T = 0.
double bose_einstein(double omega, double temperature,
                     const PhysicalConstants& pc = {});

double omega_from_ev(double energy_ev, const PhysicalConstants& pc = {});
double ev_from_omega(double omega, const PhysicalConstants& pc = {});

// Per-layer refractive indices, wavenumbers and energy propagation
// velocities at one frequency. Arrays are 1-based; index 0 is unused.
struct FrequencySample {
  double omega = 0.0;
  double k0 = 0.0;
  std::vector<cdouble> n;
  std::vector<cdouble> k;
  std::vector<double> v;
};

FrequencySample make_frequency_sample(const Stack& stack, double omega,
                                      const PhysicalConstants& pc = {});

// Noise current amplitudes of the two bosonic source channels.
struct NoiseNormalization {
  double j0e = 0.0;
  double j0m = 0.0;
};

NoiseNormalization make_noise_normalization(const Layer& layer, double omega,
                                            const PhysicalConstants& pc = {});

}  // namespace qfed
