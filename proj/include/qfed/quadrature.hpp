#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "qfed/stack.hpp"

namespace qfed {

struct QuadratureSpec {
  double rel_tol = 1e-8;
  double abs_tol = 1e-30;
  int max_intervals = 40000;
};

// Vector-valued integrand: fills out[0..dim) at position x.
using VectorIntegrand = std::function<void(double x, std::span<double> out)>;

// Globally adaptive Gauss-Kronrod 7-15 over a union of finite segments.
// Error control is per component against rel_tol * (sum of per-interval
// |integral|) + abs_tol. Throws QuadratureError when the interval budget is
// exhausted. If l1 is given it receives the per-component interval-level L1
// mass.
std::vector<double> integrate_adaptive(
    const VectorIntegrand& f, int dim,
    std::span<const std::pair<double, double>> segments,
    const QuadratureSpec& spec, std::vector<double>* l1 = nullptr);

}  // namespace qfed
