#pragma once

#include "qfed/coefficients.hpp"

namespace qfed {

// Scaled Green's function value with its analytic first derivatives and the
// mixed second derivative, all obtained term-wise from the exponential
// expansion.
struct ScaledGreens {
  cdouble value{};
  cdouble d_dx{};
  cdouble d_dxprime{};
  cdouble d2_dxdxprime{};
  Family family = Family::e;
  bool coincident = false;
};

ScaledGreens xi(const Stack& stack, const CoefficientLadder& ladder,
                const FrequencySample& freq, double x, double xp, Family j);

// Same, with the field and source layers fixed explicitly (used for
// two-sided interface limits).
ScaledGreens xi_in_layers(const Stack& stack, const CoefficientLadder& ladder,
                          const FrequencySample& freq, int l, double x, int lp,
                          double xp, Family j);

// The four coupled Green's functions at one (x, omega, x') sample.
// At x = x' the exchange functions carry the symmetric average of the two
// one-sided limits and `coincident` is set; g_mm is taken from the m-family
// ladder and is continuous there.
struct GreensSample {
  cdouble g_ee{}, g_em{}, g_me{}, g_mm{};
  bool coincident = false;
};

GreensSample greens_tensor(const Stack& stack, const CoefficientLadder& ladder,
                           const FrequencySample& freq, double x, double xp);

GreensSample greens_tensor_in_layers(const Stack& stack,
                                     const CoefficientLadder& ladder,
                                     const FrequencySample& freq, int l,
                                     double x, int lp, double xp);

// Convenience overload building the ladder internally.
GreensSample greens_tensor(const Stack& stack, const FrequencySample& freq,
                           double x, double xp);

}  // namespace qfed
