#include "qfed/dos.hpp"

#include <cmath>

namespace qfed {

NldosSample nldos(const GreensSample& g, cdouble eps_field, cdouble mu_field,
                  cdouble eps_source, cdouble mu_source, double omega,
                  const PhysicalConstants& pc) {
  const double pref =
      2.0 * omega * omega * omega / (M_PI * pc.c * pc.c * pc.c * pc.c * pc.S);
  const double ei = eps_source.imag();
  const double mi = mu_source.imag();
  NldosSample s;
  s.e_from_e = pref * ei * std::norm(g.g_ee);
  s.e_from_m = pref * mi * std::norm(g.g_em);
  s.m_from_e = pref * ei * std::norm(g.g_me);
  s.m_from_m = pref * mi * std::norm(g.g_mm);
  const double we = 0.5 * std::abs(eps_field);
  const double wm = 0.5 * std::abs(mu_field);
  s.tot_from_e = we * s.e_from_e + wm * s.m_from_e;
  s.tot_from_m = we * s.e_from_m + wm * s.m_from_m;
  return s;
}

LdosSample ldos(const Stack& stack, const FrequencySample& freq, double x,
                const PhysicalConstants& pc) {
  const GreensSample g = greens_tensor(stack, freq, x, x);
  const double pref = 2.0 * freq.omega / (M_PI * pc.c * pc.c * pc.S);
  const Layer& lay = stack.layer(stack.locate(x));
  LdosSample s;
  s.source = LdosRoute::imaginary_part;
  s.rho_e = pref * g.g_ee.imag();
  s.rho_m = pref * g.g_mm.imag();
  s.rho_tot = 0.5 * std::abs(lay.epsilon) * s.rho_e +
              0.5 * std::abs(lay.mu) * s.rho_m;
  return s;
}

LdosSample ldos_integral(const Stack& stack, const FrequencySample& freq,
                         double x, const QuadratureSpec& quad,
                         const PhysicalConstants& pc) {
  const CoefficientLadder ladder = build_ladder(stack, freq);
  const Layer& fld = stack.layer(stack.locate(x));
  auto f = [&](double xp, int lp, std::span<double> out) {
    const GreensSample g =
        greens_tensor_in_layers(stack, ladder, freq, stack.locate(x), x, lp, xp);
    const Layer& src = stack.layer(lp);
    const NldosSample nl = nldos(g, fld.epsilon, fld.mu, src.epsilon, src.mu,
                                 freq.omega, pc);
    out[0] = nl.e();
    out[1] = nl.m();
  };
  const double fp[1] = {x};
  const std::vector<double> I = integrate_sources(stack, freq, fp, 2, f, quad);
  LdosSample s;
  s.source = LdosRoute::integral;
  s.rho_e = I[0];
  s.rho_m = I[1];
  s.rho_tot = 0.5 * std::abs(fld.epsilon) * s.rho_e +
              0.5 * std::abs(fld.mu) * s.rho_m;
  return s;
}

double ifdos_core(const GreensSample& g, cdouble eps_source, cdouble mu_source,
                  double omega, const PhysicalConstants& pc) {
  const double pref =
      2.0 * omega * omega / (M_PI * pc.c * pc.c * pc.c * pc.c * pc.S);
  const cdouble iw(0.0, omega);
  const double e_part =
      pref * eps_source.imag() * (iw * g.g_ee * std::conj(g.g_me)).real();
  const double m_part =
      pref * mu_source.imag() * (iw * g.g_mm * std::conj(g.g_em)).real();
  return e_part + m_part;
}

IfdosSample ifdos(const GreensSample& g, cdouble eps_source, cdouble mu_source,
                  double omega, double n_r_field, const PhysicalConstants& pc) {
  const double pref =
      2.0 * omega * omega * n_r_field /
      (M_PI * pc.c * pc.c * pc.c * pc.c * pc.S);
  const cdouble iw(0.0, omega);
  IfdosSample s;
  s.e_part = pref * eps_source.imag() * (iw * g.g_ee * std::conj(g.g_me)).real();
  s.m_part = pref * mu_source.imag() * (iw * g.g_mm * std::conj(g.g_em)).real();
  s.value = s.e_part + s.m_part;
  return s;
}

}  // namespace qfed
