#include "qfed/coefficients.hpp"

#include <cmath>

namespace qfed {

namespace {

struct RT {
  cdouble r, t;
};

RT interface_coeffs(cdouble w1, cdouble n1, cdouble w2, cdouble n2) {
  // w is mu for the e family and epsilon for the m family.
  const cdouble den = w2 * n1 + w1 * n2;
  if (den == cdouble(0.0, 0.0)) {
    throw ValidationError("degenerate interface: vanishing Fresnel denominator");
  }
  return {(w2 * n1 - w1 * n2) / den, 2.0 * w2 * n1 / den};
}

}  // namespace

SingleInterfaceCoeffs fresnel(const Layer& left, const Layer& right) {
  const cdouble n1 = refractive_index(left.epsilon, left.mu);
  const cdouble n2 = refractive_index(right.epsilon, right.mu);
  SingleInterfaceCoeffs c;
  const RT e = interface_coeffs(left.mu, n1, right.mu, n2);
  const RT m = interface_coeffs(left.epsilon, n1, right.epsilon, n2);
  const RT ep = interface_coeffs(right.mu, n2, left.mu, n1);
  const RT mp = interface_coeffs(right.epsilon, n2, left.epsilon, n1);
  c.r_e = e.r;
  c.t_e = e.t;
  c.r_m = m.r;
  c.t_m = m.t;
  c.r_e_p = ep.r;
  c.t_e_p = ep.t;
  c.r_m_p = mp.r;
  c.t_m_p = mp.t;
  return c;
}

CoefficientLadder build_ladder(const Stack& stack, const FrequencySample& freq) {
  const int n_if = stack.num_interfaces();
  const int n_lay = n_if + 1;
  CoefficientLadder lad;
  lad.phase.assign(static_cast<size_t>(n_lay) + 1, cdouble(1.0, 0.0));
  for (int l = 2; l < n_lay; ++l) {
    lad.phase[l] = std::exp(cdouble(0.0, 1.0) * freq.k[l] * stack.thickness(l));
  }

  // Single-interface coefficients, index l = 1..N.
  std::vector<cdouble> r[2], rp[2], t[2], tp[2];
  for (int f = 0; f < 2; ++f) {
    r[f].assign(n_if + 1, 0.0);
    rp[f].assign(n_if + 1, 0.0);
    t[f].assign(n_if + 1, 0.0);
    tp[f].assign(n_if + 1, 0.0);
  }
  for (int l = 1; l <= n_if; ++l) {
    const SingleInterfaceCoeffs c = fresnel(stack.layer(l), stack.layer(l + 1));
    r[0][l] = c.r_e;
    t[0][l] = c.t_e;
    rp[0][l] = c.r_e_p;
    tp[0][l] = c.t_e_p;
    r[1][l] = c.r_m;
    t[1][l] = c.t_m;
    rp[1][l] = c.r_m_p;
    tp[1][l] = c.t_m_p;
  }

  for (int f = 0; f < 2; ++f) {
    FamilyLadder& fam = (f == 0) ? lad.e : lad.m;
    fam.R.assign(static_cast<size_t>(n_lay) + 1, 0.0);
    fam.Rp.assign(static_cast<size_t>(n_lay) + 1, 0.0);
    fam.T.assign(static_cast<size_t>(n_lay) + 1, 0.0);
    fam.Tp.assign(static_cast<size_t>(n_lay) + 1, 0.0);
    fam.nu.assign(static_cast<size_t>(n_lay) + 1, cdouble(1.0, 0.0));

    // R right-to-left from R[N+1] = 0; Rp left-to-right from Rp[0] = 0.
    for (int l = n_if; l >= 1; --l) {
      const cdouble e2 = lad.phase[l + 1] * lad.phase[l + 1];
      const cdouble q = fam.R[l + 1] * e2;
      fam.R[l] = (r[f][l] + q) / (1.0 + r[f][l] * q);
    }
    for (int l = 1; l <= n_if; ++l) {
      const cdouble e2 = lad.phase[l] * lad.phase[l];
      const cdouble q = fam.Rp[l - 1] * e2;
      fam.Rp[l] = (rp[f][l] + q) / (1.0 + rp[f][l] * q);
    }

    for (int l = 1; l <= n_lay; ++l) {
      const cdouble e2 = lad.phase[l] * lad.phase[l];
      const cdouble den = 1.0 - fam.Rp[l - 1] * fam.R[l] * e2;
      if (std::abs(den) < 1e-14) {
        const Layer& lay = stack.layer(l);
        if (lay.epsilon.imag() == 0.0 && lay.mu.imag() == 0.0) {
          throw ResonancePoleError(
              "lossless-cavity resonance pole in layer " + std::to_string(l));
        }
      }
      fam.nu[l] = 1.0 / den;
    }

    for (int l = 1; l <= n_if; ++l) {
      const cdouble e2l = lad.phase[l] * lad.phase[l];
      fam.T[l] = t[f][l] * fam.nu[l + 1] /
                 (fam.nu[l] * (1.0 - fam.Rp[l - 1] * r[f][l] * e2l));
      const cdouble e2r = lad.phase[l + 1] * lad.phase[l + 1];
      fam.Tp[l] = tp[f][l] * fam.nu[l] /
                  (fam.nu[l + 1] * (1.0 - fam.R[l + 1] * rp[f][l] * e2r));
    }
  }
  return lad;
}

cdouble cumulative_transmission(const CoefficientLadder& ladder, int l, int lp,
                                Family j) {
  const FamilyLadder& fam = ladder.family(j);
  const int n_lay = static_cast<int>(ladder.phase.size()) - 1;
  if (l < 1 || l > n_lay || lp < 1 || lp > n_lay || l == lp) {
    throw ValidationError("cumulative_transmission: invalid layer pair");
  }
  cdouble acc;
  if (l > lp) {
    acc = fam.T[lp];
    for (int m = lp + 2; m <= l; ++m) acc *= fam.T[m - 1] * ladder.phase[m - 1];
  } else {
    acc = fam.Tp[lp - 1];
    for (int m = lp - 2; m >= l; --m) acc *= fam.Tp[m] * ladder.phase[m + 1];
  }
  return acc;
}

}  // namespace qfed
