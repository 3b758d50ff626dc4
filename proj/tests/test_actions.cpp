#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "clifflab/actions.hpp"
#include "clifflab/rng.hpp"

using namespace clifflab;
using Catch::Approx;
using cd = std::complex<double>;

namespace {

Mv random_mv(const Algebra& a, Rng& rng) {
  Mv m(a);
  for (unsigned i = 0; i < a.size(); ++i) m.at(i) = rng.uniform(-1.0, 1.0);
  return m;
}

}  // namespace

TEST_CASE("rotor in the e12 plane turns the e1 e2 frame") {
  Algebra p = pauli_algebra();
  Mv e1 = Mv::generator(p, 0), e2 = Mv::generator(p, 1), e3 = Mv::generator(p, 2);
  Mv plane = e1 * e2;
  for (double th : {0.0, 0.3, 1.2, -2.5}) {
    Mv g = rotor(plane, th);
    Mv r1 = sandwich(g, e1);
    Mv r2 = sandwich(g, e2);
    Mv want1 = e1 * std::cos(th) - e2 * std::sin(th);
    Mv want2 = e1 * std::sin(th) + e2 * std::cos(th);
    REQUIRE((r1 - want1).norm() < 1e-12);
    REQUIRE((r2 - want2).norm() < 1e-12);
    REQUIRE((sandwich(g, e3) - e3).norm() < 1e-12);
    REQUIRE((g * g.reversed() - Mv::scalar(p, 1.0)).norm() < 1e-12);
  }
}

TEST_CASE("sandwich action is an algebra automorphism") {
  Algebra p = pauli_algebra();
  Mv g = rotor(Mv::basis(p, 0b011), 0.77) * rotor(Mv::basis(p, 0b110), -0.41);
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Mv a = random_mv(p, rng), b = random_mv(p, rng);
    Mv lhs = sandwich(g, a * b);
    Mv rhs = sandwich(g, a) * sandwich(g, b);
    REQUIRE((lhs - rhs).norm() < 1e-10);
    // vectors stay vectors with the same length
    Mv v = a.grade(1);
    Mv w = sandwich(g, v);
    REQUIRE((w - w.grade(1)).norm() < 1e-10);
    REQUIRE(w.norm() == Approx(v.norm()).margin(1e-10));
  }
}

TEST_CASE("rotor rejects planes that do not square to a scalar") {
  Algebra p = pauli_algebra();
  Algebra d = dirac_algebra();
  REQUIRE_THROWS_AS(rotor(Mv::generator(p, 0), 1.0), std::invalid_argument);
  REQUIRE_THROWS_AS(rotor(Mv::scalar(p, 1.0), 1.0), std::invalid_argument);
  // e01 + e23 squares to a 4-blade, not a scalar
  Mv bad = Mv::basis(d, 0b0011) + Mv::basis(d, 0b1100);
  REQUIRE_THROWS_AS(rotor(bad, 1.0), std::invalid_argument);
  // a timelike plane is fine and exponentiates hyperbolically
  Mv g = rotor(Mv::basis(d, 0b0011), 0.5);
  REQUIRE(g.at(0) == Approx(std::cosh(0.25)));
}

TEST_CASE("boost scales the two light rays by reciprocal factors") {
  Algebra st = spacetime_plane();
  Mv e0 = Mv::generator(st, 0), e1 = Mv::generator(st, 1);
  Mv u = e0 + e1, w = e0 - e1;
  double v = 0.6;
  REQUIRE(k_factor(v) == Approx(2.0));
  Mv g = boost(v);
  REQUIRE((sandwich(g, u) - u * 0.5).norm() < 1e-12);
  REQUIRE((sandwich(g, w) - w * 2.0).norm() < 1e-12);

  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    double t = rng.uniform(-2, 2), x = rng.uniform(-2, 2);
    Mv b = sandwich(g, e0 * t + e1 * x);
    double tp = b.at(0b01), xp = b.at(0b10);
    REQUIRE(tp * tp - xp * xp == Approx(t * t - x * x).margin(1e-12));
  }
}

TEST_CASE("scale factors compose through velocity addition") {
  for (auto [v1, v2] : {std::pair{0.6, 0.3}, {0.1, -0.5}, {-0.9, 0.7}}) {
    double sum = velocity_add(v1, v2);
    REQUIRE(k_factor(v1) * k_factor(v2) == Approx(k_factor(sum)));
    REQUIRE((boost(v1) * boost(v2) - boost(sum)).norm() < 1e-12);
  }
  REQUIRE_THROWS_AS(k_factor(1.0), std::domain_error);
  REQUIRE_THROWS_AS(k_factor(-1.3), std::domain_error);
}

TEST_CASE("radar times recover an event and ride the boost") {
  double t = 3.7, x = 1.2;
  auto [u, w] = lightcone_coords(t, x);
  REQUIRE(u == Approx(t + x));
  REQUIRE(w == Approx(t - x));
  // emission at t-x, echo at t+x locates the event
  auto [tr, xr] = radar_events(t - x, t + x);
  REQUIRE(tr == Approx(t));
  REQUIRE(xr == Approx(x));

  double v = 0.28;
  auto [ub, wb] = boost_lightcone(u, w, v);
  REQUIRE(ub == Approx(u / k_factor(v)));
  REQUIRE(wb == Approx(w * k_factor(v)));
  REQUIRE(ub * wb == Approx(u * w));  // interval survives

  // the algebra and the coordinate rule tell the same story
  Algebra st = spacetime_plane();
  Mv b = sandwich(boost(v), Mv::generator(st, 0) * t + Mv::generator(st, 1) * x);
  auto [ua, wa] = lightcone_coords(b.at(0b01), b.at(0b10));
  REQUIRE(ua == Approx(ub));
  REQUIRE(wa == Approx(wb));
}

TEST_CASE("spinor bilinears are null vectors") {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    auto x = spinor_bilinears(rng.normal_complex(), rng.normal_complex());
    REQUIRE(x[0] * x[0] ==
            Approx(x[1] * x[1] + x[2] * x[2] + x[3] * x[3]).margin(1e-12));
    auto y = conjugate_bilinears(rng.normal_complex(), rng.normal_complex());
    REQUIRE(y[0] * y[0] ==
            Approx(y[1] * y[1] + y[2] * y[2] + y[3] * y[3]).margin(1e-12));
    REQUIRE(y[0] <= 0.0);
  }
}

TEST_CASE("infinitesimal spin transformations induce the vector generator") {
  Rng rng(11);
  const double eps = 1e-6;
  for (int trial = 0; trial < 50; ++trial) {
    cd al = rng.normal_complex(), be = rng.normal_complex(), ga = rng.normal_complex();
    Sl2Params p{al, be, ga, -al};  // traceless
    auto om = infinitesimal_lorentz(p);
    cd xi = rng.normal_complex(), eta = rng.normal_complex();
    auto x = spinor_bilinears(xi, eta);

    auto transported = [&](double e) {
      CMatrix lam{{1.0 + e * al, e * be}, {e * ga, 1.0 - e * al}};
      auto s = lam.apply({xi, eta});
      return spinor_bilinears(s[0], s[1]);
    };
    auto xp = transported(eps), xm = transported(-eps);
    for (int mu = 0; mu < 4; ++mu) {
      double dx = (xp[mu] - xm[mu]) / (2.0 * eps);
      double want = 0.0;
      for (int nu = 0; nu < 4; ++nu) want += om[mu][nu] * x[nu];
      INFO("trial " << trial << " component " << mu);
      REQUIRE(dx == Approx(want).margin(1e-8));
    }
  }
}

TEST_CASE("dotted spinors ride the adjoint-inverse flow with the paired generator") {
  Rng rng(13);
  const double eps = 1e-6;
  for (int trial = 0; trial < 50; ++trial) {
    cd al = rng.normal_complex(), be = rng.normal_complex(), ga = rng.normal_complex();
    Sl2Params p{al, be, ga, -al};
    auto om = infinitesimal_lorentz(p, SpinorRep::fundamental);
    auto omc = infinitesimal_lorentz(p, SpinorRep::conjugate);

    // the paired generator matrix is -(M adjoint)
    CMatrix m = sl2_matrix(p);
    CMatrix n = sl2_matrix(conjugate_params(p));
    REQUIRE(max_abs_diff(n, -m.adjoint()) < 1e-14);

    // the two vector generators agree after flipping the time axis
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        double flip = ((mu == 0) != (nu == 0)) ? -1.0 : 1.0;
        REQUIRE(omc[mu][nu] == Approx(flip * om[mu][nu]).margin(1e-12));
      }

    cd sg = rng.normal_complex(), ta = rng.normal_complex();
    auto y = conjugate_bilinears(sg, ta);
    auto transported = [&](double e) {
      CMatrix lam{{1.0 + e * al, e * be}, {e * ga, 1.0 - e * al}};
      CMatrix lam2 = lam.adjoint().inverse();
      auto s = lam2.apply({sg, ta});
      return conjugate_bilinears(s[0], s[1]);
    };
    // the flipped time axis in the dotted bilinears undoes the T.T
    // conjugation, so both families of bilinears move under one matrix
    auto yp = transported(eps), ym = transported(-eps);
    for (int mu = 0; mu < 4; ++mu) {
      double dy = (yp[mu] - ym[mu]) / (2.0 * eps);
      double want = 0.0;
      for (int nu = 0; nu < 4; ++nu) want += om[mu][nu] * y[nu];
      INFO("trial " << trial << " component " << mu);
      REQUIRE(dy == Approx(want).margin(1e-8));
    }
  }
}

TEST_CASE("finite unimodular spin maps preserve the interval") {
  Rng rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    cd a = rng.normal_complex(), b = rng.normal_complex(), c = rng.normal_complex();
    if (std::abs(a) < 0.1) a += 1.0;
    cd d = (1.0 + b * c) / a;  // det = 1
    CMatrix lam{{a, b}, {c, d}};

    double x0 = rng.uniform(-2, 2), x1 = rng.uniform(-2, 2);
    double x2 = rng.uniform(-2, 2), x3 = rng.uniform(-2, 2);
    CMatrix X = x0 * CMatrix::identity(2) + x1 * sigma_x() + x2 * sigma_y() +
                x3 * sigma_z();
    CMatrix Xp = lam * X * lam.adjoint();
    auto comp = [&](const CMatrix& s) { return 0.5 * (Xp * s).trace(); };
    double y0 = comp(CMatrix::identity(2)).real();
    double y1 = comp(sigma_x()).real(), y2 = comp(sigma_y()).real();
    double y3 = comp(sigma_z()).real();
    REQUIRE(y0 * y0 - y1 * y1 - y2 * y2 - y3 * y3 ==
            Approx(x0 * x0 - x1 * x1 - x2 * x2 - x3 * x3).margin(1e-9));
    // the hermitian matrix of a spinor's bilinears is twice its outer square
    cd xi = rng.normal_complex(), eta = rng.normal_complex();
    auto xb = spinor_bilinears(xi, eta);
    CMatrix B = xb[0] * CMatrix::identity(2) + xb[1] * sigma_x() +
                xb[2] * sigma_y() + xb[3] * sigma_z();
    CMatrix outer{{xi * std::conj(xi), xi * std::conj(eta)},
                  {eta * std::conj(xi), eta * std::conj(eta)}};
    REQUIRE(max_abs_diff(B, 2.0 * outer) < 1e-12);
  }
}
