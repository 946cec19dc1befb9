#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "qfed/stack.hpp"

using namespace qfed;

TEST_CASE("homogeneous stack has no interfaces") {
  Layer vac;
  Stack s({vac}, {});
  CHECK(s.num_layers() == 1);
  CHECK(s.num_interfaces() == 0);
  CHECK(s.locate(-5.0) == 1);
  CHECK(s.locate(5.0) == 1);
}

TEST_CASE("from_layers places interfaces from interior thicknesses") {
  Layer lead, a, b;
  a.thickness = 1e-6;
  b.thickness = 2.5e-6;
  Stack s = Stack::from_layers({lead, a, b, lead});
  REQUIRE(s.num_interfaces() == 3);
  CHECK(s.interface(1) == doctest::Approx(0.0));
  CHECK(s.interface(2) == doctest::Approx(1e-6));
  CHECK(s.interface(3) == doctest::Approx(3.5e-6));
  CHECK(s.thickness(2) == doctest::Approx(1e-6));
  CHECK(s.thickness(3) == doctest::Approx(2.5e-6));
  CHECK(s.thickness(1) == 0.0);
  CHECK(s.thickness(4) == 0.0);
}

TEST_CASE("locate assigns interface points to the left layer") {
  Layer lead, a;
  a.thickness = 1e-6;
  Stack s = Stack::from_layers({lead, a, lead});
  CHECK(s.locate(-1e-9) == 1);
  CHECK(s.locate(0.0) == 1);
  CHECK(s.locate(0.5e-6) == 2);
  CHECK(s.locate(1e-6) == 2);
  CHECK(s.locate(1e-6 + 1e-12) == 3);
}

TEST_CASE("validation rejects bad structures") {
  Layer lead;
  Layer bad;
  SUBCASE("zero interior thickness") {
    bad.thickness = 0.0;
    CHECK_THROWS_AS(Stack::from_layers({lead, bad, lead}), ValidationError);
  }
  SUBCASE("negative interior thickness") {
    bad.thickness = -1e-6;
    CHECK_THROWS_AS(Stack::from_layers({lead, bad, lead}), ValidationError);
  }
  SUBCASE("active medium") {
    bad.thickness = 1e-6;
    bad.epsilon = {2.0, -0.1};
    CHECK_THROWS_AS(Stack::from_layers({lead, bad, lead}), ValidationError);
  }
  SUBCASE("negative temperature") {
    bad.thickness = 1e-6;
    bad.temperature = -1.0;
    CHECK_THROWS_AS(Stack::from_layers({lead, bad, lead}), ValidationError);
  }
  SUBCASE("zero epsilon") {
    bad.thickness = 1e-6;
    bad.epsilon = {0.0, 0.0};
    CHECK_THROWS_AS(Stack::from_layers({lead, bad, lead}), ValidationError);
  }
  SUBCASE("non-increasing interfaces") {
    CHECK_THROWS_AS(Stack({lead, bad, lead}, {1e-6, 1e-6}), ValidationError);
  }
}

TEST_CASE("refractive index branch selection") {
  SUBCASE("lossless dielectric") {
    cdouble n = refractive_index({10.0, 0.0}, {1.0, 0.0});
    CHECK(n.real() == doctest::Approx(std::sqrt(10.0)));
    CHECK(n.imag() == 0.0);
  }
  SUBCASE("lossy medium has Im n > 0") {
    cdouble n = refractive_index({2.0, 0.3}, {1.5, 0.2});
    CHECK(n.imag() > 0.0);
    cdouble n2 = n * n;
    cdouble em = cdouble(2.0, 0.3) * cdouble(1.5, 0.2);
    CHECK(std::abs(n2 - em) < 1e-12 * std::abs(em));
  }
  SUBCASE("double-negative medium still has Im n >= 0") {
    cdouble n = refractive_index({-2.0, 0.01}, {-1.5, 0.01});
    CHECK(n.imag() >= 0.0);
  }
  SUBCASE("lossless double-negative picks Re n > 0") {
    cdouble n = refractive_index({-2.0, 0.0}, {-1.5, 0.0});
    CHECK(n.imag() == 0.0);
    CHECK(n.real() > 0.0);
  }
}

TEST_CASE("loss floor applies only to lossless lead channels") {
  Layer lossy_lead;
  lossy_lead.epsilon = {2.0, 0.1};
  Layer mid;
  mid.thickness = 1e-6;
  mid.epsilon = {3.0, 0.0};
  Layer vac_lead;
  Stack s = Stack::from_layers({lossy_lead, mid, vac_lead});
  Stack f = with_lead_loss_floor(s, 1e-9);
  CHECK(f.layer(1).epsilon.imag() == doctest::Approx(0.1));  // already lossy
  CHECK(f.layer(1).mu.imag() == doctest::Approx(1e-9));
  CHECK(f.layer(2).epsilon.imag() == 0.0);  // interior untouched
  CHECK(f.layer(3).epsilon.imag() == doctest::Approx(1e-9));
  CHECK(f.layer(3).mu.imag() == doctest::Approx(1e-9));
}

TEST_CASE("eps-mu swap is an involution") {
  Layer lead;
  Layer mid;
  mid.thickness = 1e-6;
  mid.epsilon = {2.0, 0.3};
  mid.mu = {1.5, 0.2};
  Stack s = Stack::from_layers({lead, mid, lead});
  Stack d = with_swapped_eps_mu(s);
  CHECK(d.layer(2).epsilon == mid.mu);
  CHECK(d.layer(2).mu == mid.epsilon);
  Stack dd = with_swapped_eps_mu(d);
  CHECK(dd.layer(2).epsilon == mid.epsilon);
}

TEST_CASE("bose einstein occupation") {
  PhysicalConstants pc;
  CHECK(bose_einstein(1e14, 0.0) == 0.0);
  // hbar*omega = 0.119 eV at 300 K
  const double omega = omega_from_ev(0.119);
  const double x = pc.hbar * omega / (pc.kB * 300.0);
  CHECK(bose_einstein(omega, 300.0) ==
        doctest::Approx(1.0 / std::expm1(x)).epsilon(1e-12));
  CHECK(bose_einstein(omega, 300.0) == doctest::Approx(0.010123).epsilon(1e-3));
  // classical limit
  CHECK(bose_einstein(1e10, 300.0) ==
        doctest::Approx(pc.kB * 300.0 / (pc.hbar * 1e10)).epsilon(1e-3));
}

TEST_CASE("energy conversions round-trip") {
  const double omega = omega_from_ev(0.119);
  CHECK(ev_from_omega(omega) == doctest::Approx(0.119).epsilon(1e-14));
}

TEST_CASE("frequency sample arrays are one-based and sized") {
  Layer lead;
  Layer mid;
  mid.thickness = 1e-6;
  mid.epsilon = {4.0, 0.0};
  Stack s = Stack::from_layers({lead, mid, lead});
  FrequencySample f = make_frequency_sample(s, omega_from_ev(1.0));
  REQUIRE(f.n.size() == 4);  // index 0 unused
  CHECK(f.n[2].real() == doctest::Approx(2.0));
  CHECK(std::abs(f.k[2] - f.n[2] * f.k0) < 1e-18);
  CHECK(f.v[1] == doctest::Approx(PhysicalConstants{}.c));
  CHECK(f.v[2] == doctest::Approx(PhysicalConstants{}.c / 2.0));
}

TEST_CASE("noise normalization scales with loss") {
  Layer lay;
  lay.epsilon = {2.0, 0.3};
  lay.mu = {1.5, 0.2};
  const double omega = omega_from_ev(0.119);
  NoiseNormalization nn = make_noise_normalization(lay, omega);
  CHECK(nn.j0e > 0.0);
  CHECK(nn.j0m > 0.0);
  Layer lossless;
  NoiseNormalization zero = make_noise_normalization(lossless, omega);
  CHECK(zero.j0e == 0.0);
  CHECK(zero.j0m == 0.0);
}
