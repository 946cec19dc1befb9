#pragma once

#include "qfed/quadrature.hpp"

namespace qfed {

// Integrand over the source axis; `layer` is the layer owning xp.
using SourceIntegrand =
    std::function<void(double xp, int layer, std::span<double> out)>;

// Integrates f over the whole source axis for a fixed set of field points.
// Interior layers are handled by adaptive quadrature with forced breakpoints
// at every interface and field point; layers that are lossless in both
// channels are skipped (all supported integrands vanish there). The
// semi-infinite lead tails beyond the outermost breakpoints are integrated in
// closed form using the single outgoing exponential of the lead solution,
// which makes every supported integrand decay as exp(-2 Im(k_lead) s).
//
// Throws PreconditionError when a lossy-channel lead has Im(k) = 0 (lossless
// lead without a loss floor).
std::vector<double> integrate_sources(const Stack& stack,
                                      const FrequencySample& freq,
                                      std::span<const double> field_points,
                                      int dim, const SourceIntegrand& f,
                                      const QuadratureSpec& spec,
                                      std::vector<double>* l1 = nullptr);

}  // namespace qfed
