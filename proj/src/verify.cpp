#include "qfed/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace qfed {

CheckReport make_report(std::string name, double residual, double tolerance,
                        std::string context) {
  CheckReport r;
  r.name = std::move(name);
  r.residual = residual;
  r.tolerance = tolerance;
  r.passed = residual <= tolerance;
  r.context = std::move(context);
  return r;
}

CheckReport check_green_identity(const Stack& stack,
                                 const FrequencySample& freq, double x,
                                 double xp, Family family,
                                 const QuadratureSpec& quad,
                                 const PhysicalConstants& pc) {
  const CoefficientLadder ladder = build_ladder(stack, freq);
  const double k02 = freq.k0 * freq.k0;
  const int lx = stack.locate(x);
  const int lxp = stack.locate(xp);

  auto f = [&](double y, int ly, std::span<double> out) {
    const GreensSample ga =
        greens_tensor_in_layers(stack, ladder, freq, lx, x, ly, y);
    const GreensSample gb =
        greens_tensor_in_layers(stack, ladder, freq, lxp, xp, ly, y);
    const Layer& src = stack.layer(ly);
    cdouble val;
    if (family == Family::e) {
      val = src.epsilon.imag() * ga.g_ee * std::conj(gb.g_ee) +
            src.mu.imag() * ga.g_em * std::conj(gb.g_em);
    } else {
      val = src.mu.imag() * ga.g_mm * std::conj(gb.g_mm) +
            src.epsilon.imag() * ga.g_me * std::conj(gb.g_me);
    }
    val *= k02;
    out[0] = val.real();
    out[1] = val.imag();
  };
  const double fps[2] = {x, xp};
  const std::vector<double> I = integrate_sources(stack, freq, fps, 2, f, quad);

  const GreensSample g = greens_tensor(stack, ladder, freq, x, xp);
  const double rhs =
      (family == Family::e) ? g.g_ee.imag() : g.g_mm.imag();
  const double residual =
      std::abs(cdouble(I[0], I[1]) - rhs) / std::max(std::abs(rhs), 1e-300);

  std::ostringstream ctx;
  ctx << "family=" << (family == Family::e ? "e" : "m") << " x=" << x
      << " x'=" << xp << " omega=" << freq.omega;
  return make_report("green-identity", residual, 1e-6, ctx.str());
}

CheckReport check_reciprocity(const Stack& stack, const FrequencySample& freq,
                              double x_lo, double x_hi, int pairs,
                              unsigned seed, const PhysicalConstants& pc) {
  (void)pc;
  const CoefficientLadder ladder = build_ladder(stack, freq);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(x_lo, x_hi);
  double worst = 0.0;
  for (int i = 0; i < pairs; ++i) {
    double a = u(rng), b = u(rng);
    if (a == b) continue;
    const GreensSample gab = greens_tensor(stack, ladder, freq, a, b);
    const GreensSample gba = greens_tensor(stack, ladder, freq, b, a);
    const double r1 = std::abs(gab.g_ee - gba.g_ee) /
                      std::max(std::abs(gab.g_ee), 1e-300);
    const double r2 = std::abs(gab.g_mm - gba.g_mm) /
                      std::max(std::abs(gab.g_mm), 1e-300);
    const double r3 =
        std::abs(gab.g_me + gba.g_em) /
        std::max({std::abs(gab.g_me), std::abs(gba.g_em), 1e-300});
    worst = std::max({worst, r1, r2, r3});
  }
  std::ostringstream ctx;
  ctx << pairs << " pairs on [" << x_lo << ", " << x_hi << "] seed=" << seed;
  return make_report("reciprocity", worst, 1e-10, ctx.str());
}

CheckReport check_ifdos_zero(const Stack& stack, const FrequencySample& freq,
                             double x, const QuadratureSpec& quad,
                             const PhysicalConstants& pc) {
  const CoefficientLadder ladder = build_ladder(stack, freq);
  const int lx = stack.locate(x);
  const double n_r = freq.n[lx].real();
  auto f = [&](double xp, int lp, std::span<double> out) {
    const GreensSample g =
        greens_tensor_in_layers(stack, ladder, freq, lx, x, lp, xp);
    const Layer& src = stack.layer(lp);
    const IfdosSample s = ifdos(g, src.epsilon, src.mu, freq.omega, n_r, pc);
    out[0] = s.value;
    out[1] = std::abs(s.value);
  };
  const double fp[1] = {x};
  const std::vector<double> I = integrate_sources(stack, freq, fp, 2, f, quad);
  const double residual = std::abs(I[0]) / std::max(I[1], 1e-300);
  std::ostringstream ctx;
  ctx << "x=" << x << " omega=" << freq.omega;
  return make_report("ifdos-zero-integral", residual, 1e-8, ctx.str());
}

CheckReport check_equilibrium(const Stack& stack, const FrequencySample& freq,
                              std::span<const double> grid,
                              const QuadratureSpec& quad,
                              const PhysicalConstants& pc) {
  const double t0 = stack.layer(1).temperature;
  for (int l = 1; l <= stack.num_layers(); ++l) {
    if (stack.layer(l).temperature != t0) {
      CheckReport r = make_report("equilibrium", 0.0, 1e-6,
                                  "nonuniform temperatures");
      r.applicable = false;
      r.passed = false;
      return r;
    }
  }
  const double eta0 = bose_einstein(freq.omega, t0, pc);
  double worst = 0.0;
  double smax = 0.0, qmax = 0.0, s_scale = 0.0, q_scale = 0.0;
  for (double x : grid) {
    const SpectralPoint p = evaluate_point(stack, freq, x, quad, pc);
    const double scale_n = std::max(eta0, 1e-300);
    worst = std::max({worst, std::abs(p.n_e - eta0) / scale_n,
                      std::abs(p.n_m - eta0) / scale_n,
                      std::abs(p.n_tot - eta0) / scale_n});
    smax = std::max(smax, std::abs(p.s));
    qmax = std::max(qmax, std::abs(p.q));
    s_scale = std::max(s_scale, pc.hbar * freq.omega * pc.c *
                                    (p.rho_tot * eta0 + 1e-300));
    const Layer& lay = stack.layer(stack.locate(x));
    q_scale = std::max(q_scale,
                       pc.hbar * freq.omega * freq.omega *
                           (lay.epsilon.imag() * p.rho_e +
                            lay.mu.imag() * p.rho_m) *
                           std::max(eta0, 1.0));
  }
  if (s_scale > 0.0) worst = std::max(worst, smax / s_scale);
  if (q_scale > 0.0) worst = std::max(worst, qmax / q_scale);
  std::ostringstream ctx;
  ctx << grid.size() << " grid points, T=" << t0 << " K, omega=" << freq.omega;
  return make_report("equilibrium", worst, 1e-6, ctx.str());
}

CheckReport check_poynting_continuity(const Stack& stack,
                                      const FrequencySample& freq,
                                      const QuadratureSpec& quad,
                                      const PhysicalConstants& pc) {
  const int n_if = stack.num_interfaces();
  if (n_if == 0) {
    return make_report("poynting-continuity", 0.0, 1e-8, "no interfaces");
  }
  std::vector<double> left(static_cast<size_t>(n_if)),
      right(static_cast<size_t>(n_if));
  double smax = 0.0;
  for (int l = 1; l <= n_if; ++l) {
    const double x = stack.interface(l);
    left[static_cast<size_t>(l - 1)] =
        evaluate_point(stack, freq, x, quad, pc, l).s;
    right[static_cast<size_t>(l - 1)] =
        evaluate_point(stack, freq, x, quad, pc, l + 1).s;
    smax = std::max({smax, std::abs(left[static_cast<size_t>(l - 1)]),
                     std::abs(right[static_cast<size_t>(l - 1)])});
  }
  double worst = 0.0;
  for (int i = 0; i < n_if; ++i) {
    const double sl = left[static_cast<size_t>(i)];
    const double sr = right[static_cast<size_t>(i)];
    const double denom =
        std::max({std::abs(sl), std::abs(sr), 1e-6 * smax, 1e-300});
    worst = std::max(worst, std::abs(sl - sr) / denom);
  }
  std::ostringstream ctx;
  ctx << n_if << " interfaces, omega=" << freq.omega;
  return make_report("poynting-continuity", worst, 1e-8, ctx.str());
}

}  // namespace qfed
