#include "qfed/source_integral.hpp"

#include <algorithm>
#include <cmath>

namespace qfed {

namespace {

bool lossless_both(const Layer& lay) {
  return lay.epsilon.imag() == 0.0 && lay.mu.imag() == 0.0;
}

}  // namespace

std::vector<double> integrate_sources(const Stack& stack,
                                      const FrequencySample& freq,
                                      std::span<const double> field_points,
                                      int dim, const SourceIntegrand& f,
                                      const QuadratureSpec& spec,
                                      std::vector<double>* l1) {
  const int n_lay = stack.num_layers();
  bool any_lossy = false;
  for (int l = 1; l <= n_lay; ++l) {
    if (!lossless_both(stack.layer(l))) any_lossy = true;
  }
  if (!any_lossy) {
    throw PreconditionError(
        "source integral over a fully lossless structure is degenerate; "
        "apply a lead loss floor");
  }
  std::vector<double> breaks(stack.interfaces());
  breaks.insert(breaks.end(), field_points.begin(), field_points.end());
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  if (breaks.empty()) {
    throw PreconditionError("source integral needs at least one breakpoint");
  }

  // Finite segments between consecutive breakpoints, seeded at half-wavelength
  // resolution so the fixed-order rule starts from resolved oscillations.
  std::vector<std::pair<double, double>> segments;
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i], b = breaks[i + 1];
    const int lay = stack.locate(0.5 * (a + b));
    if (lossless_both(stack.layer(lay))) continue;
    const double kmag = std::max(std::abs(freq.k[lay]), 1e-6 * freq.k0);
    const double chunk = M_PI / kmag;  // half wavelength
    const int n = std::clamp(static_cast<int>(std::ceil((b - a) / chunk)), 1, 2000);
    for (int j = 0; j < n; ++j) {
      segments.emplace_back(a + (b - a) * j / n, a + (b - a) * (j + 1) / n);
    }
  }

  auto wrapped = [&](double x, std::span<double> out) {
    f(x, stack.locate(x), out);
  };
  std::vector<double> total =
      integrate_adaptive(wrapped, dim, segments, spec, l1);
  if (l1 && l1->empty()) l1->assign(static_cast<size_t>(dim), 0.0);
  if (total.empty()) total.assign(static_cast<size_t>(dim), 0.0);

  // Closed-form lead tails beyond the outermost breakpoints. Every supported
  // integrand is a constant times exp(-2 Im(k) s) there, with s the depth
  // past the tail start.
  const double off = 1e-12 * 2.0 * M_PI / freq.k0;
  std::vector<double> buf(static_cast<size_t>(dim));
  auto add_tail = [&](int lay, double start, double direction) {
    if (lossless_both(stack.layer(lay))) return;
    const double im_k = freq.k[lay].imag();
    if (!(im_k > 0.0)) {
      throw PreconditionError(
          "lossy source integral over a lead with Im(k) = 0; "
          "apply a lead loss floor");
    }
    f(start + direction * off, lay, buf);
    for (size_t d = 0; d < static_cast<size_t>(dim); ++d) {
      const double t = buf[d] / (2.0 * im_k);
      total[d] += t;
      if (l1) (*l1)[d] += std::abs(t);
    }
  };
  add_tail(1, breaks.front(), -1.0);
  add_tail(n_lay, breaks.back(), +1.0);

  return total;
}

}  // namespace qfed
