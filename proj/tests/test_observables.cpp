#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "qfed/fixtures.hpp"
#include "qfed/observables.hpp"
#include "qfed/source_integral.hpp"

using namespace qfed;

namespace {
const double kOmega = omega_from_ev(0.119);
const PhysicalConstants kPc;
const QuadratureSpec kQuad;
}  // namespace

TEST_CASE("uniform temperature gives the source occupation everywhere") {
  Stack s = fixtures::homogeneous_lossy();
  FrequencySample f = make_frequency_sample(s, kOmega);
  const double eta = bose_einstein(kOmega, 300.0);
  for (double x : {-2e-6, 0.0, 1.3e-6}) {
    SpectralPoint p = evaluate_point(s, f, x, kQuad);
    CHECK(p.n_e == doctest::Approx(eta).epsilon(1e-10));
    CHECK(p.n_m == doctest::Approx(eta).epsilon(1e-10));
    CHECK(p.n_tot == doctest::Approx(eta).epsilon(1e-10));
    CHECK(std::abs(p.s) < 1e-10 * kPc.hbar * kOmega * kPc.c * p.rho_tot * eta);
    const double q_scale = kPc.hbar * kOmega * kOmega * p.rho_tot * eta;
    CHECK(std::abs(p.q) < 1e-8 * q_scale);
  }
}

TEST_CASE("zero temperature gives exact zeros") {
  Layer lay;
  lay.epsilon = {2.0, 0.3};
  lay.mu = {1.5, 0.2};
  Stack s({lay}, {});
  FrequencySample f = make_frequency_sample(s, kOmega);
  SpectralPoint p = evaluate_point(s, f, 0.0, kQuad);
  CHECK(p.n_e == 0.0);
  CHECK(p.n_m == 0.0);
  CHECK(p.s == 0.0);
  CHECK(p.q == 0.0);
  CHECK(p.rho_e > 0.0);
}

TEST_CASE("photon numbers interpolate between two reservoir temperatures") {
  // hot left lead, cold right lead
  Layer hot, mid, cold;
  hot.epsilon = {2.0, 0.3};
  hot.temperature = 400.0;
  mid.thickness = 1e-6;
  mid.epsilon = {1.5, 0.05};
  mid.temperature = 0.0;
  cold.epsilon = {2.0, 0.3};
  cold.temperature = 100.0;
  Stack s = Stack::from_layers({hot, mid, cold});
  FrequencySample f = make_frequency_sample(s, kOmega);
  const double eta_hot = bose_einstein(kOmega, 400.0);
  const double eta_cold = bose_einstein(kOmega, 100.0);
  SpectralPoint p = evaluate_point(s, f, 0.5e-6, kQuad);
  CHECK(p.n_tot > eta_cold);
  CHECK(p.n_tot < eta_hot);
  // deep in the hot lead the field thermalizes to the lead temperature
  SpectralPoint ph = evaluate_point(s, f, -40e-6, kQuad);
  CHECK(ph.n_tot == doctest::Approx(eta_hot).epsilon(1e-3));
}

TEST_CASE("fluctuations carry the zero-point term") {
  Stack s = fixtures::homogeneous_lossy();
  FrequencySample f = make_frequency_sample(s, kOmega);
  FluctuationSample fl = fluctuations(s, f, 0.0, kQuad);
  SpectralPoint p = evaluate_point(s, f, 0.0, kQuad);
  const double hw = kPc.hbar * kOmega;
  CHECK(fl.e_sq ==
        doctest::Approx(hw / kPc.eps0 * p.rho_e * (p.n_e + 0.5)).epsilon(1e-12));
  CHECK(fl.u > 0.5 * hw * p.rho_tot);  // never below the vacuum floor
}

TEST_CASE("hot emitter radiates outward") {
  Stack s = with_lead_loss_floor(
      fixtures::cavity_with_emitter(fixtures::EmitterKind::electric), 1e-9);
  FrequencySample f = make_frequency_sample(s, kOmega);
  const double s_right = poynting(s, f, 14e-6, kQuad);
  const double s_left = poynting(s, f, -2e-6, kQuad);
  CHECK(s_right > 0.0);
  CHECK(s_left < 0.0);
  // mirror symmetry of the fixture
  CHECK(s_right == doctest::Approx(-s_left).epsilon(1e-6));
  // emitter loses energy on net
  const double q_mid = net_emission(s, f, 6e-6, kQuad);
  CHECK(q_mid > 0.0);
}

TEST_CASE("flux divergence matches the net emission density") {
  Stack s = with_lead_loss_floor(
      fixtures::cavity_with_emitter(fixtures::EmitterKind::electric), 1e-9);
  FrequencySample f = make_frequency_sample(s, kOmega);
  const double lambda = 2.0 * M_PI / f.k0;
  const double h = lambda / 2000.0;
  for (double x : {5.8e-6, 6.2e-6}) {  // inside the emitter layer
    const double sp = poynting(s, f, x + h, kQuad);
    const double sm = poynting(s, f, x - h, kQuad);
    const double q = net_emission(s, f, x, kQuad);
    CHECK((sp - sm) / (2.0 * h) == doctest::Approx(q).epsilon(1e-3));
  }
}

TEST_CASE("ladder kernel weights normalize to one") {
  Stack s = with_lead_loss_floor(
      fixtures::cavity_with_emitter(fixtures::EmitterKind::electric), 1e-9);
  FrequencySample f = make_frequency_sample(s, kOmega);
  for (FieldType j : {FieldType::e, FieldType::m, FieldType::tot}) {
    LadderKernel kern(s, f, 6e-6, j, kQuad);
    auto integrand = [&](double xp, int, std::span<double> out) {
      auto [we, wm] = kern.weights(xp);
      out[0] = we * we + wm * wm;
    };
    const double fp[1] = {6e-6};
    const double norm = integrate_sources(s, f, fp, 1, integrand, kQuad)[0];
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("degenerate dos raises instead of dividing by zero") {
  Stack s = fixtures::cavity();  // fully lossless, no floor
  FrequencySample f = make_frequency_sample(s, kOmega);
  CHECK_THROWS_AS(evaluate_point(s, f, 6e-6, kQuad), Error);
}

TEST_CASE("steady state temperature sits inside the reservoir range") {
  Stack s = fixtures::random_lossy(11, 3);
  QuadratureSpec quad;
  quad.rel_tol = 1e-5;
  const double t = steady_state_temperature(s, 3, omega_from_ev(0.05),
                                            omega_from_ev(0.3), quad, kPc, 0.5);
  double tmin = 1e9, tmax = 0.0;
  for (int l = 1; l <= s.num_layers(); ++l) {
    if (l == 3) continue;
    tmin = std::min(tmin, s.layer(l).temperature);
    tmax = std::max(tmax, s.layer(l).temperature);
  }
  CHECK(t > tmin);
  CHECK(t < tmax);
}

TEST_CASE("steady state temperature of an equilibrium bath is the bath value") {
  // everything at 300 K: the probe balances exactly at 300 K
  Stack s = fixtures::homogeneous_lossy();
  std::vector<Layer> layers;
  Layer lead = s.layer(1);
  Layer mid = s.layer(1);
  mid.thickness = 1e-6;
  layers = {lead, mid, lead};
  Stack eq = Stack::from_layers(layers);
  QuadratureSpec quad;
  quad.rel_tol = 1e-5;
  const double t = steady_state_temperature(eq, 2, omega_from_ev(0.08),
                                            omega_from_ev(0.2), quad, kPc, 0.1);
  CHECK(t == doctest::Approx(300.0).epsilon(1e-2));
}

TEST_CASE("steady state validation") {
  Stack s = fixtures::random_lossy(11, 3);
  QuadratureSpec quad;
  CHECK_THROWS_AS(steady_state_temperature(s, 1, 1e14, 2e14, quad),
                  ValidationError);
  CHECK_THROWS_AS(steady_state_temperature(s, 3, 2e14, 1e14, quad),
                  ValidationError);
  Layer lead;
  lead.epsilon = {2.0, 0.3};
  Layer lossless;
  lossless.thickness = 1e-6;
  Stack s2 = Stack::from_layers({lead, lossless, lead});
  CHECK_THROWS_AS(steady_state_temperature(s2, 2, 1e14, 2e14, quad),
                  PreconditionError);
}
