#include "qfed/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <queue>

namespace qfed {

namespace {

// Gauss-Kronrod 7-15 abscissae (positive half) and weights (QUADPACK).
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {0.1294849661688697, 0.2797053914892767,
                           0.3818300505051189, 0.4179591836734694};

struct Interval {
  double a = 0.0, b = 0.0;
  double max_err = 0.0;  // max over components of the raw error
  std::vector<double> integral;
  std::vector<double> err;
};

void gk15(const VectorIntegrand& f, int dim, double a, double b, Interval& out) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  out.a = a;
  out.b = b;
  out.integral.assign(static_cast<size_t>(dim), 0.0);
  out.err.assign(static_cast<size_t>(dim), 0.0);
  std::vector<double> gauss(static_cast<size_t>(dim), 0.0);
  std::vector<double> buf(static_cast<size_t>(dim));
  for (int i = 0; i < 8; ++i) {
    const int reps = (i == 7) ? 1 : 2;
    for (int sgn = 0; sgn < reps; ++sgn) {
      const double x = c + (sgn == 0 ? 1.0 : -1.0) * h * kXgk[i];
      f(x, buf);
      for (size_t d = 0; d < static_cast<size_t>(dim); ++d) {
        out.integral[d] += kWgk[i] * buf[d];
        if (i % 2 == 1) gauss[d] += kWg[i / 2] * buf[d];
      }
    }
  }
  out.max_err = 0.0;
  for (size_t d = 0; d < static_cast<size_t>(dim); ++d) {
    out.integral[d] *= h;
    gauss[d] *= h;
    out.err[d] = std::abs(out.integral[d] - gauss[d]);
    out.max_err = std::max(out.max_err, out.err[d]);
  }
}

}  // namespace

std::vector<double> integrate_adaptive(
    const VectorIntegrand& f, int dim,
    std::span<const std::pair<double, double>> segments,
    const QuadratureSpec& spec, std::vector<double>* l1) {
  const size_t sdim = static_cast<size_t>(dim);
  std::vector<double> total(sdim, 0.0), mass(sdim, 0.0), err(sdim, 0.0);

  auto cmp = [](const std::unique_ptr<Interval>& x,
                const std::unique_ptr<Interval>& y) {
    return x->max_err < y->max_err;
  };
  std::priority_queue<std::unique_ptr<Interval>,
                      std::vector<std::unique_ptr<Interval>>, decltype(cmp)>
      heap(cmp);

  auto add = [&](double a, double b) {
    auto iv = std::make_unique<Interval>();
    gk15(f, dim, a, b, *iv);
    for (size_t d = 0; d < sdim; ++d) {
      total[d] += iv->integral[d];
      mass[d] += std::abs(iv->integral[d]);
      err[d] += iv->err[d];
    }
    heap.push(std::move(iv));
  };

  int count = 0;
  for (const auto& [a, b] : segments) {
    if (!(b > a)) continue;
    add(a, b);
    ++count;
  }

  auto converged = [&]() {
    for (size_t d = 0; d < sdim; ++d) {
      if (err[d] > std::max(spec.abs_tol, spec.rel_tol * mass[d])) return false;
    }
    return true;
  };

  while (!heap.empty() && !converged()) {
    if (count >= spec.max_intervals) {
      throw QuadratureError("adaptive quadrature exceeded interval budget");
    }
    const Interval& top = *heap.top();
    const double a = top.a, b = top.b;
    const double m = 0.5 * (a + b);
    if (!(m > a && m < b)) {
      throw QuadratureError("adaptive quadrature interval underflow");
    }
    for (size_t d = 0; d < sdim; ++d) {
      total[d] -= top.integral[d];
      mass[d] -= std::abs(top.integral[d]);
      err[d] -= top.err[d];
    }
    heap.pop();
    add(a, m);
    add(m, b);
    ++count;
  }

  if (l1) *l1 = mass;
  return total;
}

}  // namespace qfed
