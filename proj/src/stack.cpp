#include "qfed/stack.hpp"

#include <algorithm>
#include <cmath>

namespace qfed {

Stack::Stack(std::vector<Layer> layers, std::vector<double> interfaces)
    : layers_(std::move(layers)), interfaces_(std::move(interfaces)) {
  const int n_if = static_cast<int>(interfaces_.size());
  if (static_cast<int>(layers_.size()) != n_if + 1) {
    throw ValidationError("stack needs exactly one more layer than interfaces");
  }
  for (int i = 1; i < n_if; ++i) {
    if (!(interfaces_[i] > interfaces_[i - 1])) {
      throw ValidationError("interface positions must be strictly increasing");
    }
  }
  for (size_t i = 0; i < layers_.size(); ++i) {
    Layer& lay = layers_[i];
    const std::string tag = "layer " + std::to_string(i + 1) + ": ";
    if (lay.epsilon == cdouble(0.0, 0.0) || lay.mu == cdouble(0.0, 0.0)) {
      throw ValidationError(tag + "epsilon and mu must be nonzero");
    }
    if (lay.epsilon.imag() < 0.0 || lay.mu.imag() < 0.0) {
      throw ValidationError(tag + "passive media require Im(eps) >= 0 and Im(mu) >= 0");
    }
    if (lay.temperature < 0.0) {
      throw ValidationError(tag + "temperature must be nonnegative");
    }
    const bool lead = (i == 0 || i + 1 == layers_.size());
    if (lead) {
      lay.thickness = 0.0;
    } else {
      lay.thickness = interfaces_[i] - interfaces_[i - 1];
      if (!(lay.thickness > 0.0)) {
        throw ValidationError(tag + "interior thickness must be positive");
      }
    }
  }
}

Stack Stack::from_layers(std::vector<Layer> layers, double origin) {
  if (layers.empty()) throw ValidationError("stack needs at least one layer");
  std::vector<double> interfaces;
  if (layers.size() > 1) {
    interfaces.push_back(origin);
    for (size_t i = 1; i + 1 < layers.size(); ++i) {
      if (!(layers[i].thickness > 0.0)) {
        throw ValidationError("layer " + std::to_string(i + 1) +
                              ": interior thickness must be positive");
      }
      interfaces.push_back(interfaces.back() + layers[i].thickness);
    }
  }
  return Stack(std::move(layers), std::move(interfaces));
}

double Stack::thickness(int l) const {
  if (l <= 1 || l >= num_layers()) return 0.0;
  return interface(l) - interface(l - 1);
}

int Stack::locate(double x) const {
  auto it = std::lower_bound(interfaces_.begin(), interfaces_.end(), x);
  return static_cast<int>(it - interfaces_.begin()) + 1;
}

Stack with_lead_loss_floor(const Stack& stack, double delta) {
  std::vector<Layer> layers = stack.layers();
  for (size_t i : {size_t{0}, layers.size() - 1}) {
    if (layers[i].epsilon.imag() == 0.0) layers[i].epsilon += cdouble(0.0, delta);
    if (layers[i].mu.imag() == 0.0) layers[i].mu += cdouble(0.0, delta);
  }
  return Stack(std::move(layers), stack.interfaces());
}

Stack with_swapped_eps_mu(const Stack& stack) {
  std::vector<Layer> layers = stack.layers();
  for (Layer& lay : layers) std::swap(lay.epsilon, lay.mu);
  return Stack(std::move(layers), stack.interfaces());
}

cdouble refractive_index(cdouble epsilon, cdouble mu) {
  if (epsilon == cdouble(0.0, 0.0) || mu == cdouble(0.0, 0.0)) {
    throw ValidationError("degenerate medium: epsilon and mu must be nonzero");
  }
  cdouble n = std::sqrt(epsilon * mu);
  if (n.imag() < 0.0) n = -n;
  if (n.imag() == 0.0 && n.real() < 0.0) n = -n;
  return n;
}

double bose_einstein(double omega, double temperature,
                     const PhysicalConstants& pc) {
  if (temperature <= 0.0) return 0.0;
  const double x = pc.hbar * omega / (pc.kB * temperature);
  if (x > 700.0) return 0.0;
  return 1.0 / std::expm1(x);
}

double omega_from_ev(double energy_ev, const PhysicalConstants& pc) {
  return energy_ev * kElectronVolt / pc.hbar;
}

double ev_from_omega(double omega, const PhysicalConstants& pc) {
  return omega * pc.hbar / kElectronVolt;
}

FrequencySample make_frequency_sample(const Stack& stack, double omega,
                                      const PhysicalConstants& pc) {
  FrequencySample fs;
  fs.omega = omega;
  fs.k0 = omega / pc.c;
  const int nl = stack.num_layers();
  fs.n.resize(static_cast<size_t>(nl) + 1);
  fs.k.resize(static_cast<size_t>(nl) + 1);
  fs.v.resize(static_cast<size_t>(nl) + 1);
  for (int l = 1; l <= nl; ++l) {
    const Layer& lay = stack.layer(l);
    fs.n[l] = refractive_index(lay.epsilon, lay.mu);
    fs.k[l] = fs.k0 * fs.n[l];
    fs.v[l] = pc.c / fs.n[l].real();
  }
  return fs;
}

NoiseNormalization make_noise_normalization(const Layer& layer, double omega,
                                            const PhysicalConstants& pc) {
  const double re = 4.0 * M_PI * pc.hbar * omega * omega * pc.eps0 *
                    layer.epsilon.imag() / pc.S;
  const double rm = 4.0 * M_PI * pc.hbar * omega * omega * pc.mu0 *
                    layer.mu.imag() / pc.S;
  if (re < 0.0 || rm < 0.0) {
    throw ValidationError("negative noise normalization radicand");
  }
  return {std::sqrt(re), std::sqrt(rm)};
}

}  // namespace qfed
