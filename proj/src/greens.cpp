#include "qfed/greens.hpp"

#include <array>
#include <cmath>

namespace qfed {

namespace {

constexpr cdouble kI{0.0, 1.0};

// One expansion term amp * exp(i*(ax*x + axp*xp)).
struct XiTerm {
  cdouble amp, ax, axp;
};

struct XiTerms {
  std::array<XiTerm, 6> t{};
  int count = 0;

  void add(cdouble amp, cdouble ax, cdouble axp) {
    if (amp == cdouble(0.0, 0.0)) return;
    t[static_cast<size_t>(count++)] = {amp, ax, axp};
  }
};

}  // namespace

ScaledGreens xi_in_layers(const Stack& stack, const CoefficientLadder& ladder,
                          const FrequencySample& freq, int l, double x, int lp,
                          double xp, Family j) {
  const FamilyLadder& fam = ladder.family(j);
  const int n_lay = stack.num_layers();
  const cdouble klp = freq.k[lp];
  const cdouble pref = kI / (2.0 * klp);

  ScaledGreens out;
  out.family = j;
  XiTerms terms;

  if (l == lp) {
    const cdouble nu = fam.nu[lp];
    const cdouble Rr = fam.R[lp];        // 0 for lp = N+1
    const cdouble Rl = fam.Rp[lp - 1];   // 0 for lp = 1
    const double xl = (lp <= n_lay - 1) ? stack.interface(lp) : 0.0;
    const double xlm1 = (lp >= 2) ? stack.interface(lp - 1) : 0.0;
    const cdouble e2d = ladder.phase[lp] * ladder.phase[lp];

    // Reflection-originating components of the source-layer solution.
    terms.add(pref * nu * Rr * std::exp(cdouble(0.0, 1.0) * (2.0 * xl) * klp),
              -klp, -klp);
    terms.add(pref * nu * Rr * Rl * e2d, -klp, klp);
    terms.add(pref * nu * Rl * std::exp(cdouble(0.0, 1.0) * (-2.0 * xlm1) * klp),
              klp, klp);
    terms.add(pref * nu * Rl * Rr * e2d, klp, -klp);

    // Homogeneous-space component i e^{ik|x-x'|}/(2k); at x = x' the first
    // derivatives use the symmetric principal-value convention.
    const double s = (x > xp) ? 1.0 : (x < xp ? -1.0 : 0.0);
    if (s == 0.0) {
      out.coincident = true;
      out.value += pref;
      out.d2_dxdxprime += klp * klp * pref;
    } else {
      terms.add(pref, s * klp, -s * klp);
    }
  } else if (l > lp) {
    const cdouble Tcum = cumulative_transmission(ladder, l, lp, j);
    const cdouble kl = freq.k[l];
    const cdouble nu = fam.nu[lp];
    const double xlp = stack.interface(lp);
    const double xlpm1 = (lp >= 2) ? stack.interface(lp - 1) : 0.0;
    const double dlp = stack.thickness(lp);
    const double xlm1 = stack.interface(l - 1);
    const double dl = stack.thickness(l);

    std::array<XiTerm, 3> src{};
    int nsrc = 0;
    src[nsrc++] = {std::exp(kI * klp * xlp), 0.0, -klp};
    const cdouble a2 = nu * fam.Rp[lp - 1] * std::exp(kI * klp * (dlp - xlpm1));
    if (a2 != cdouble(0.0, 0.0)) src[nsrc++] = {a2, 0.0, klp};
    const cdouble a3 =
        nu * fam.Rp[lp - 1] * fam.R[lp] * std::exp(kI * klp * (2.0 * dlp + xlp));
    if (a3 != cdouble(0.0, 0.0)) src[nsrc++] = {a3, 0.0, -klp};

    std::array<XiTerm, 2> fld{};
    int nfld = 0;
    fld[nfld++] = {std::exp(kI * kl * (-xlm1)), kl, 0.0};
    const cdouble b2 = fam.R[l] * std::exp(kI * kl * (xlm1 + 2.0 * dl));
    if (b2 != cdouble(0.0, 0.0)) fld[nfld++] = {b2, -kl, 0.0};

    for (int a = 0; a < nsrc; ++a)
      for (int b = 0; b < nfld; ++b)
        terms.add(pref * Tcum * src[a].amp * fld[b].amp, fld[b].ax, src[a].axp);
  } else {  // l < lp
    const cdouble Tcum = cumulative_transmission(ladder, l, lp, j);
    const cdouble kl = freq.k[l];
    const cdouble nu = fam.nu[lp];
    const double xlpm1 = stack.interface(lp - 1);
    const double dlp = stack.thickness(lp);
    const double xl = stack.interface(l);
    const double xlm1 = (l >= 2) ? stack.interface(l - 1) : 0.0;
    const double dl = stack.thickness(l);

    std::array<XiTerm, 3> src{};
    int nsrc = 0;
    src[nsrc++] = {std::exp(kI * klp * (-xlpm1)), 0.0, klp};
    const cdouble a2 =
        nu * fam.R[lp] * std::exp(kI * klp * (xlpm1 + 2.0 * dlp));
    if (a2 != cdouble(0.0, 0.0)) src[nsrc++] = {a2, 0.0, -klp};
    const cdouble a3 = nu * fam.R[lp] * fam.Rp[lp - 1] *
                       std::exp(kI * klp * (2.0 * dlp - xlpm1));
    if (a3 != cdouble(0.0, 0.0)) src[nsrc++] = {a3, 0.0, klp};

    std::array<XiTerm, 2> fld{};
    int nfld = 0;
    fld[nfld++] = {std::exp(kI * kl * xl), -kl, 0.0};
    const cdouble b2 = fam.Rp[l - 1] * std::exp(kI * kl * (dl - xlm1));
    if (b2 != cdouble(0.0, 0.0)) fld[nfld++] = {b2, kl, 0.0};

    for (int a = 0; a < nsrc; ++a)
      for (int b = 0; b < nfld; ++b)
        terms.add(pref * Tcum * src[a].amp * fld[b].amp, fld[b].ax, src[a].axp);
  }

  for (int i = 0; i < terms.count; ++i) {
    const XiTerm& t = terms.t[static_cast<size_t>(i)];
    const cdouble val = t.amp * std::exp(kI * (t.ax * x + t.axp * xp));
    out.value += val;
    out.d_dx += kI * t.ax * val;
    out.d_dxprime += kI * t.axp * val;
    out.d2_dxdxprime += -t.ax * t.axp * val;
  }
  return out;
}

ScaledGreens xi(const Stack& stack, const CoefficientLadder& ladder,
                const FrequencySample& freq, double x, double xp, Family j) {
  return xi_in_layers(stack, ladder, freq, stack.locate(x), x, stack.locate(xp),
                      xp, j);
}

GreensSample greens_tensor_in_layers(const Stack& stack,
                                     const CoefficientLadder& ladder,
                                     const FrequencySample& freq, int l,
                                     double x, int lp, double xp) {
  const cdouble mu_src = stack.layer(lp).mu;
  const cdouble mu_fld = stack.layer(l).mu;
  const cdouble eps_src = stack.layer(lp).epsilon;
  const ScaledGreens xe = xi_in_layers(stack, ladder, freq, l, x, lp, xp, Family::e);
  const ScaledGreens xm = xi_in_layers(stack, ladder, freq, l, x, lp, xp, Family::m);

  GreensSample g;
  g.coincident = xe.coincident;
  g.g_ee = mu_src * xe.value;
  g.g_em = -xe.d_dxprime / freq.k0;
  g.g_me = mu_src * xe.d_dx / (freq.k0 * mu_fld);
  g.g_mm = eps_src * xm.value;
  return g;
}

GreensSample greens_tensor(const Stack& stack, const CoefficientLadder& ladder,
                           const FrequencySample& freq, double x, double xp) {
  return greens_tensor_in_layers(stack, ladder, freq, stack.locate(x), x,
                                 stack.locate(xp), xp);
}

GreensSample greens_tensor(const Stack& stack, const FrequencySample& freq,
                           double x, double xp) {
  const CoefficientLadder ladder = build_ladder(stack, freq);
  return greens_tensor(stack, ladder, freq, x, xp);
}

}  // namespace qfed
