#include "qfed/observables.hpp"

#include <cmath>

namespace qfed {

namespace {

constexpr double kRhoFloor = 1e-300;

double pick(const NldosSample& nl, FieldType j) {
  switch (j) {
    case FieldType::e:
      return nl.e();
    case FieldType::m:
      return nl.m();
    default:
      return nl.tot();
  }
}

}  // namespace

SpectralPoint evaluate_point(const Stack& stack, const FrequencySample& freq,
                             double x, const QuadratureSpec& quad,
                             const PhysicalConstants& pc, int field_layer) {
  const CoefficientLadder ladder = build_ladder(stack, freq);
  const int l_fld = (field_layer > 0) ? field_layer : stack.locate(x);
  const Layer& fld = stack.layer(l_fld);

  // Components: rho_e, rho_e*eta, rho_m, rho_m*eta, ifdos/n_r, (ifdos/n_r)*eta
  auto f = [&](double xp, int lp, std::span<double> out) {
    const GreensSample g =
        greens_tensor_in_layers(stack, ladder, freq, l_fld, x, lp, xp);
    const Layer& src = stack.layer(lp);
    const NldosSample nl = nldos(g, fld.epsilon, fld.mu, src.epsilon, src.mu,
                                 freq.omega, pc);
    const double core = ifdos_core(g, src.epsilon, src.mu, freq.omega, pc);
    const double eta = bose_einstein(freq.omega, src.temperature, pc);
    out[0] = nl.e();
    out[1] = nl.e() * eta;
    out[2] = nl.m();
    out[3] = nl.m() * eta;
    out[4] = core;
    out[5] = core * eta;
  };
  const double fp[1] = {x};
  const std::vector<double> I = integrate_sources(stack, freq, fp, 6, f, quad);

  SpectralPoint p;
  p.rho_e = I[0];
  p.rho_m = I[2];
  const double we = 0.5 * std::abs(fld.epsilon);
  const double wm = 0.5 * std::abs(fld.mu);
  p.rho_tot = we * p.rho_e + wm * p.rho_m;
  if (p.rho_e < kRhoFloor || p.rho_m < kRhoFloor || p.rho_tot < kRhoFloor) {
    throw DegenerateDosError(
        "photon number denominator underflows (no reachable sources)");
  }
  p.n_e = I[1] / p.rho_e;
  p.n_m = I[3] / p.rho_m;
  p.n_tot = (we * I[1] + wm * I[3]) / p.rho_tot;
  p.s = pc.hbar * freq.omega * pc.c * I[5];
  p.eta = bose_einstein(freq.omega, fld.temperature, pc);
  const double w2 = pc.hbar * freq.omega * freq.omega;
  p.q = w2 * fld.epsilon.imag() * p.rho_e * (p.eta - p.n_e) +
        w2 * fld.mu.imag() * p.rho_m * (p.eta - p.n_m);
  return p;
}

double photon_number(const Stack& stack, const FrequencySample& freq, double x,
                     FieldType j, const QuadratureSpec& quad,
                     const PhysicalConstants& pc) {
  const SpectralPoint p = evaluate_point(stack, freq, x, quad, pc);
  switch (j) {
    case FieldType::e:
      return p.n_e;
    case FieldType::m:
      return p.n_m;
    default:
      return p.n_tot;
  }
}

FluctuationSample fluctuations(const Stack& stack, const FrequencySample& freq,
                               double x, const QuadratureSpec& quad,
                               const PhysicalConstants& pc) {
  const SpectralPoint p = evaluate_point(stack, freq, x, quad, pc);
  const double hw = pc.hbar * freq.omega;
  FluctuationSample s;
  s.e_sq = hw / pc.eps0 * p.rho_e * (p.n_e + 0.5);
  s.h_sq = hw / pc.mu0 * p.rho_m * (p.n_m + 0.5);
  s.u = hw * p.rho_tot * (p.n_tot + 0.5);
  return s;
}

double poynting(const Stack& stack, const FrequencySample& freq, double x,
                const QuadratureSpec& quad, const PhysicalConstants& pc) {
  return evaluate_point(stack, freq, x, quad, pc).s;
}

double net_emission(const Stack& stack, const FrequencySample& freq, double x,
                    const QuadratureSpec& quad, const PhysicalConstants& pc) {
  return evaluate_point(stack, freq, x, quad, pc).q;
}

LadderKernel::LadderKernel(const Stack& stack, const FrequencySample& freq,
                           double x, FieldType j, const QuadratureSpec& quad,
                           const PhysicalConstants& pc)
    : stack_(stack),
      freq_(freq),
      ladder_(build_ladder(stack, freq)),
      pc_(pc),
      x_(x),
      field_layer_(stack.locate(x)),
      j_(j) {
  const Layer& fld = stack_.layer(field_layer_);
  auto f = [&](double xp, int lp, std::span<double> out) {
    const GreensSample g =
        greens_tensor_in_layers(stack_, ladder_, freq_, field_layer_, x_, lp, xp);
    const Layer& src = stack_.layer(lp);
    out[0] = pick(nldos(g, fld.epsilon, fld.mu, src.epsilon, src.mu,
                        freq_.omega, pc_),
                  j_);
  };
  const double fp[1] = {x};
  rho_ = integrate_sources(stack_, freq_, fp, 1, f, quad)[0];
  if (rho_ < kRhoFloor) {
    throw DegenerateDosError("ladder kernel normalization underflows");
  }
}

std::pair<double, double> LadderKernel::weights(double xp) const {
  const int lp = stack_.locate(xp);
  const Layer& src = stack_.layer(lp);
  const Layer& fld = stack_.layer(field_layer_);
  const GreensSample g =
      greens_tensor_in_layers(stack_, ladder_, freq_, field_layer_, x_, lp, xp);
  const NldosSample nl =
      nldos(g, fld.epsilon, fld.mu, src.epsilon, src.mu, freq_.omega, pc_);
  double num_e = 0.0, num_m = 0.0;
  switch (j_) {
    case FieldType::e:
      num_e = nl.e_from_e;
      num_m = nl.e_from_m;
      break;
    case FieldType::m:
      num_e = nl.m_from_e;
      num_m = nl.m_from_m;
      break;
    default:
      num_e = nl.tot_from_e;
      num_m = nl.tot_from_m;
      break;
  }
  return {std::sqrt(num_e / rho_), std::sqrt(num_m / rho_)};
}

double steady_state_temperature(const Stack& stack, int probe_layer,
                                double omega_min, double omega_max,
                                const QuadratureSpec& quad,
                                const PhysicalConstants& pc,
                                double tol_kelvin) {
  if (probe_layer < 1 || probe_layer > stack.num_layers()) {
    throw ValidationError("invalid probe layer index");
  }
  const Layer& probe = stack.layer(probe_layer);
  if (probe.epsilon.imag() == 0.0 && probe.mu.imag() == 0.0) {
    throw PreconditionError("probe layer has no thermal coupling (zero loss)");
  }
  if (probe_layer == 1 || probe_layer == stack.num_layers()) {
    throw ValidationError("probe layer must be an interior layer");
  }
  if (!(omega_max > omega_min) || !(omega_min > 0.0)) {
    throw ValidationError("invalid spectral band");
  }

  const double xa = stack.interface(probe_layer - 1);
  const double xb = stack.interface(probe_layer);

  // Residual evaluations dominate the solve; a looser inner tolerance is
  // enough to locate the balance root.
  QuadratureSpec inner = quad;
  inner.rel_tol = std::max(quad.rel_tol, 1e-6);

  auto residual = [&](double temperature) {
    Stack trial = stack;
    trial.layer(probe_layer).temperature = temperature;
    auto band = [&](double omega, std::span<double> out) {
      const FrequencySample freq = make_frequency_sample(trial, omega, pc);
      auto over_layer = [&](double x, std::span<double> qv) {
        qv[0] = evaluate_point(trial, freq, x, inner, pc).q;
      };
      const std::pair<double, double> seg[1] = {{xa, xb}};
      QuadratureSpec xspec = inner;
      xspec.max_intervals = 64;
      out[0] = integrate_adaptive(over_layer, 1, seg, xspec)[0];
    };
    const std::pair<double, double> band_seg[1] = {{omega_min, omega_max}};
    QuadratureSpec wspec = inner;
    wspec.max_intervals = 256;
    return integrate_adaptive(band, 1, band_seg, wspec)[0];
  };

  double lo = 1.0, hi = 1e4;
  double f_lo = residual(lo), f_hi = residual(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (f_lo * f_hi > 0.0) {
    throw Error("steady-state bracket has no sign change on [1, 1e4] K");
  }
  while (hi - lo > tol_kelvin) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = residual(mid);
    if (f_mid == 0.0) return mid;
    if (f_mid * f_lo < 0.0) {
      hi = mid;
      f_hi = f_mid;
    } else {
      lo = mid;
      f_lo = f_mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace qfed
