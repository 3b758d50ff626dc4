#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "clifflab/bohm.hpp"
#include "clifflab/rng.hpp"

using namespace clifflab;
using Catch::Approx;
using cd = std::complex<double>;

namespace {

double vec_interior_max(const std::vector<double>& v, int skirt = 2) {
  double m = 0;
  for (int i = skirt; i + skirt < int(v.size()); ++i)
    m = std::max(m, std::abs(v[i]));
  return m;
}

struct Slices {
  FieldGrid before, mid, after;
  PolarField pb, pm, pa;
};

Slices sample_slices(const WaveFunction& psi, int nx, double x0, double h,
                     double t, double dt) {
  Slices s{sample_wave(psi, nx, x0, h, t - dt), sample_wave(psi, nx, x0, h, t),
           sample_wave(psi, nx, x0, h, t + dt), {}, {}, {}};
  s.pb = decompose_polar(s.before);
  s.pm = decompose_polar(s.mid);
  s.pa = decompose_polar(s.after);
  return s;
}

}  // namespace

TEST_CASE("stencils differentiate polynomials exactly") {
  Algebra sch = schrodinger_algebra();
  int nx = 41;
  FieldGrid f = FieldGrid::line(sch, nx, -2.0, 0.1);
  FieldGrid g = f.like(), c = f.like();
  for (int i = 0; i < nx; ++i) {
    double x = f.position(0, i);
    f.site(i).at(0) = x;
    g.site(i).at(0) = x * x;
    c.site(i).at(0) = 3.5;
  }
  FieldGrid df = f.central_diff(0), lg = g.laplacian(), dc = c.central_diff(0);
  REQUIRE(dc.max_norm() < 1e-13);
  for (int i = 1; i + 1 < nx; ++i) {
    REQUIRE(df.site(i).at(0) == Approx(1.0).margin(1e-12));
    REQUIRE(lg.site(i).at(0) == Approx(2.0).margin(1e-10));
  }
  // linear field through either Dirac operator produces the generator
  FieldGrid lf = dirac_left(f, {0});
  FieldGrid rf = dirac_right(f, {0});
  REQUIRE(lf.site(nx / 2).at(0b1) == Approx(1.0).margin(1e-12));
  REQUIRE(lf.site(nx / 2).at(0b0) == Approx(0.0).margin(1e-12));
  REQUIRE((rf.site(nx / 2) - lf.site(nx / 2)).norm() < 1e-12);
  REQUIRE_THROWS_AS(dirac_left(f, {0, 1}), std::invalid_argument);
}

TEST_CASE("dirac operators square to the metric-weighted laplacian") {
  Rng rng(61);
  // three-generator algebra on a periodic box
  Algebra p = pauli_algebra();
  FieldGrid f(p, 3, {8, 8, 8}, 0.25, FieldGrid::Boundary::periodic);
  for (std::size_t s = 0; s < f.count(); ++s)
    for (unsigned m = 0; m < p.size(); ++m) f.flat(s).at(m) = rng.uniform(-1, 1);

  FieldGrid dd = dirac_left(dirac_left(f, {0, 1, 2}), {0, 1, 2});
  // oracle: the doubled-step laplacian, one axis at a time
  FieldGrid wide = f.like();
  double h = f.spacing();
  for (std::size_t s = 0; s < f.count(); ++s) {
    auto c = f.coords(s);
    Mv acc(p);
    for (int ax = 0; ax < 3; ++ax) {
      auto up = c, dn = c;
      int n = f.extent(ax);
      up[ax] = (c[ax] + 2) % n;
      dn[ax] = (c[ax] + n - 2) % n;
      acc += (f.site(up[0], up[1], up[2]) + f.site(dn[0], dn[1], dn[2]) -
              f.flat(s) * 2.0) *
             (1.0 / (4.0 * h * h));
    }
    wide.flat(s) = acc;
  }
  for (std::size_t s = 0; s < f.count(); ++s)
    REQUIRE((dd.flat(s) - wide.flat(s)).norm() < 1e-12);

  // with a generator squaring to -1 the sign flips
  Algebra sch = schrodinger_algebra();
  FieldGrid g(sch, 1, {32, 1, 1}, 0.2, FieldGrid::Boundary::periodic);
  for (std::size_t s = 0; s < g.count(); ++s) {
    g.flat(s).at(0) = rng.uniform(-1, 1);
    g.flat(s).at(1) = rng.uniform(-1, 1);
  }
  FieldGrid gg = dirac_left(dirac_left(g, {0}), {0});
  for (int i = 0; i < 32; ++i) {
    int up = (i + 2) % 32, dn = (i + 30) % 32;
    Mv want = (g.site(up) + g.site(dn) - g.site(i) * 2.0) *
              (-1.0 / (4.0 * 0.2 * 0.2));
    REQUIRE((gg.site(i) - want).norm() < 1e-12);
  }
}

TEST_CASE("plane wave phases and amplitudes come out exactly") {
  double k = 0.9, t = 0.37, h = 1e-3;
  int nx = 16001;
  FieldGrid f = sample_wave(plane_wave(k), nx, -8.0, h, t);
  PolarField p = decompose_polar(f);
  for (int i = 0; i < nx; i += 997) {
    REQUIRE(p.R[i] == Approx(1.0).margin(1e-13));
    REQUIRE(p.S[i] - p.S[0] == Approx(k * h * i).margin(1e-9));
  }
  auto mom = bohm_momentum(p);
  for (int i = 1; i + 1 < nx; i += 499)
    REQUIRE(mom[i] == Approx(k).margin(1e-10));

  double dt = 1e-3, w = 0.5 * k * k;
  PolarField pb = decompose_polar(sample_wave(plane_wave(k), nx, -8.0, h, t - dt));
  PolarField pa = decompose_polar(sample_wave(plane_wave(k), nx, -8.0, h, t + dt));
  auto en = bohm_energy(pb, pa, dt);
  for (int i = 0; i < nx; i += 499)
    REQUIRE(en[i] == Approx(w).margin(1e-10));
}

TEST_CASE("gaussian packet envelope matches the closed form") {
  double sigma = 1.2, k0 = 0.6, m = 1.0, t = 0.4, h = 4e-3;
  int nx = 4001;
  FieldGrid f = sample_wave(gaussian_packet(sigma, k0, m), nx, -8.0, h, t);
  PolarField p = decompose_polar(f);
  double gam = t / (2.0 * m * sigma * sigma);
  for (int i = 0; i < nx; i += 97) {
    double x = f.position(0, i) - k0 * t / m;
    double want = std::pow(2.0 * std::numbers::pi * sigma * sigma, -0.25) *
                  std::pow(1.0 + gam * gam, -0.25) *
                  std::exp(-x * x / (4.0 * sigma * sigma * (1.0 + gam * gam)));
    REQUIRE(p.R[i] == Approx(want).margin(1e-12));
  }
  // drifting packet carries its drift momentum at the center
  auto mom = bohm_momentum(p);
  int center = int(std::round((k0 * t / m + 8.0) / h));
  REQUIRE(mom[center] == Approx(k0).margin(1e-6));
}

TEST_CASE("bilinear and polar routes give the same energy and momentum") {
  double h = 1e-3, dt = 1e-5;
  int nx = 16001;
  struct Case {
    WaveFunction psi;
    double t;
  };
  std::array<Case, 2> cases = {Case{plane_wave(0.7), 0.31},
                               Case{gaussian_packet(1.0, 0.8), 0.25}};
  for (const auto& c : cases) {
    Slices s = sample_slices(c.psi, nx, -8.0, h, c.t, dt);
    auto rhoE = bohm_energy_density(s.before, s.mid, s.after, dt);
    auto E = bohm_energy(s.pb, s.pa, dt);
    auto rhoP = bohm_momentum_density(s.mid);
    auto P = bohm_momentum(s.pm);
    for (int i = 2; i + 2 < nx; i += 61) {
      double rho = s.pm.R[i] * s.pm.R[i];
      REQUIRE(rhoE[i] - rho * E[i] == Approx(0.0).margin(1e-10));
      REQUIRE(rhoP[i] - rho * P[i] == Approx(0.0).margin(1e-6));
    }
  }
}

TEST_CASE("plane wave leaves no residuals at the benchmark step") {
  double k = 0.9, t = 0.37, h = 1e-3, dt = 1e-3;
  int nx = 16001;
  Slices s = sample_slices(plane_wave(k), nx, -8.0, h, t, dt);
  auto cont = continuity_residual(s.pb, s.pm, s.pa, 1.0, dt);
  auto qhj = qhj_residual(s.pb, s.pm, s.pa, free_potential(), 1.0, dt);
  REQUIRE(vec_interior_max(cont) < 1e-8);
  REQUIRE(vec_interior_max(qhj) < 1e-8);

  FieldGrid lio = liouville_residual(s.before, s.mid, s.after, 1.0,
                                     free_potential(), dt);
  REQUIRE(lio.interior_max_norm() < 1e-8);
  // the bracket form has no scalar component at all
  for (int i = 1; i + 1 < nx; i += 157)
    REQUIRE(std::abs(lio.site(i).at(0b0)) < 1e-13);
}

TEST_CASE("free packet and coherent state converge at second order") {
  struct Setup {
    WaveFunction psi;
    std::function<double(double)> V;
    double t;
  };
  double m = 1.0, w = 1.3;
  std::array<Setup, 2> setups = {
      Setup{gaussian_packet(1.0, 0.8, m), free_potential(), 0.3},
      Setup{coherent_state(m, w, 0.7), harmonic_potential(m, w), 0.4}};
  for (const auto& su : setups) {
    std::vector<double> conts, qhjs;
    for (double h : {0.04, 0.02, 0.01}) {
      int nx = int(std::round(16.0 / h)) + 1;
      double dt = h / 10.0;
      Slices s = sample_slices(su.psi, nx, -8.0, h, su.t, dt);
      conts.push_back(vec_interior_max(continuity_residual(s.pb, s.pm, s.pa, m, dt)));
      qhjs.push_back(vec_interior_max(qhj_residual(s.pb, s.pm, s.pa, su.V, m, dt)));
    }
    for (int r = 0; r + 1 < 3; ++r) {
      double fc = conts[r] / conts[r + 1];
      double fq = qhjs[r] / qhjs[r + 1];
      INFO("refinement " << r << " factors " << fc << " " << fq);
      REQUIRE((fc > 3.2 && fc < 4.8));
      REQUIRE((fq > 3.2 && fq < 4.8));
    }
  }
}

TEST_CASE("probability is conserved along the analytic evolution") {
  double h = 1e-3;
  int nx = 16001;
  WaveFunction psi = gaussian_packet(1.0, 0.8);
  double p0 = probability(sample_wave(psi, nx, -8.0, h, 0.0));
  double p1 = probability(sample_wave(psi, nx, -8.0, h, 0.5));
  REQUIRE(p0 == Approx(1.0).margin(1e-6));
  REQUIRE(std::abs(p1 - p0) < 1e-8);
}

TEST_CASE("nodes are flagged and excluded") {
  Algebra sch = schrodinger_algebra();
  int nx = 21;
  FieldGrid f = FieldGrid::line(sch, nx, -1.0, 0.1);
  for (int i = 0; i < nx; ++i) f.site(i).at(0) = f.position(0, i);
  PolarField p = decompose_polar(f);
  REQUIRE(p.node[10] == 1);  // x = 0 site
  REQUIRE(p.S[10] == 0.0);
  auto mom = bohm_momentum(p);
  REQUIRE(mom[10] == 0.0);
  REQUIRE(mom[11] == 0.0);  // neighbor of a node is masked too
  REQUIRE(mom[5] == Approx(0.0).margin(1e-12));  // real field has flat phase

  FieldGrid plane(sch, 2, {4, 4, 1}, 0.1);
  REQUIRE_THROWS_AS(decompose_polar(plane), std::invalid_argument);
}
