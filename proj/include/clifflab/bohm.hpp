#pragma once
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "clifflab/grid.hpp"

namespace clifflab {

// ------------------------------------------------------------------
// Analytic reference states.  Everything downstream samples these and
// verifies the dynamical equations as residuals; nothing time-steps.
// ------------------------------------------------------------------

using WaveFunction = std::function<std::complex<double>(double x, double t)>;

inline WaveFunction plane_wave(double k, double m = 1.0) {
  return [k, m](double x, double t) {
    return std::exp(std::complex<double>(0.0, k * x - 0.5 * k * k * t / m));
  };
}

// free packet with initial width sigma and drift momentum k0
inline WaveFunction gaussian_packet(double sigma, double k0, double m = 1.0) {
  return [sigma, k0, m](double x, double t) {
    std::complex<double> spread(1.0, t / (2.0 * m * sigma * sigma));
    std::complex<double> norm =
        std::pow(2.0 * std::numbers::pi * sigma * sigma, -0.25) /
        std::sqrt(spread);
    double xd = x - k0 * t / m;
    std::complex<double> phase(0.0, k0 * x - 0.5 * k0 * k0 * t / m);
    return norm * std::exp(-xd * xd / (4.0 * sigma * sigma * spread) + phase);
  };
}

// ground-width packet swinging in the harmonic well with amplitude x0
inline WaveFunction coherent_state(double m, double w, double x0) {
  return [m, w, x0](double x, double t) {
    double xc = x0 * std::cos(w * t);
    double pc = -m * w * x0 * std::sin(w * t);
    std::complex<double> arg(-0.5 * m * w * (x - xc) * (x - xc),
                             pc * x - 0.5 * w * t - 0.5 * pc * xc);
    return std::pow(m * w / std::numbers::pi, 0.25) * std::exp(arg);
  };
}

inline std::function<double(double)> free_potential() {
  return [](double) { return 0.0; };
}

inline std::function<double(double)> harmonic_potential(double m, double w) {
  return [m, w](double x) { return 0.5 * m * w * w * x * x; };
}

// sample onto a line grid over the one-generator algebra, where the
// generator squares to -1 and plays the imaginary unit
inline FieldGrid sample_wave(const WaveFunction& psi, int nx, double x0, double h,
                             double t,
                             FieldGrid::Boundary bc = FieldGrid::Boundary::clamped) {
  FieldGrid f = FieldGrid::line(schrodinger_algebra(), nx, x0, h, bc);
  for (int i = 0; i < nx; ++i) {
    auto z = psi(f.position(0, i), t);
    f.site(i).at(0b0) = z.real();
    f.site(i).at(0b1) = z.imag();
  }
  return f;
}

// ------------------------------------------------------------------
// Polar form a + eb = R exp(eS) with S unwrapped along the axis.
// Nodes (R ~ 0) are flagged and excluded from every derived quantity.
// ------------------------------------------------------------------

struct PolarField {
  std::vector<double> R, S;
  std::vector<unsigned char> node;
  double h = 0.0, x0 = 0.0;
  int size() const { return int(R.size()); }
};

inline PolarField decompose_polar(const FieldGrid& f, double node_eps = 1e-12) {
  if (f.dim() != 1)
    throw std::invalid_argument("polar decomposition expects a line grid");
  const double two_pi = 2.0 * std::numbers::pi;
  PolarField p;
  p.h = f.spacing();
  p.x0 = f.position(0, 0);
  int nx = f.extent(0);
  p.R.resize(nx);
  p.S.resize(nx);
  p.node.resize(nx);
  double prev = 0.0;
  bool have_prev = false;
  for (int i = 0; i < nx; ++i) {
    double a = f.site(i).coefficient(0b0), b = f.site(i).coefficient(0b1);
    p.R[i] = std::hypot(a, b);
    p.node[i] = p.R[i] <= node_eps;
    if (p.node[i]) {
      p.S[i] = 0.0;
      continue;
    }
    double raw = std::atan2(b, a);
    if (have_prev) raw += two_pi * std::round((prev - raw) / two_pi);
    p.S[i] = raw;
    prev = raw;
    have_prev = true;
  }
  return p;
}

// slide a whole slice by 2 pi k so its phase branch matches the
// reference at the first shared non-node site
inline void align_phase(PolarField& p, const PolarField& ref) {
  if (p.size() != ref.size())
    throw std::invalid_argument("phase alignment needs equal grids");
  const double two_pi = 2.0 * std::numbers::pi;
  for (int i = 0; i < p.size(); ++i) {
    if (p.node[i] || ref.node[i]) continue;
    double shift = two_pi * std::round((ref.S[i] - p.S[i]) / two_pi);
    for (int j = 0; j < p.size(); ++j)
      if (!p.node[j]) p.S[j] += shift;
    return;
  }
}

// P = dS/dx on interior sites; nodes and edges report zero
inline std::vector<double> bohm_momentum(const PolarField& p) {
  int n = p.size();
  std::vector<double> out(n, 0.0);
  for (int i = 1; i + 1 < n; ++i)
    if (!p.node[i - 1] && !p.node[i] && !p.node[i + 1])
      out[i] = (p.S[i + 1] - p.S[i - 1]) / (2.0 * p.h);
  return out;
}

// E = -dS/dt from two slices at t -+ dt
inline std::vector<double> bohm_energy(PolarField before, PolarField after,
                                       double dt) {
  align_phase(after, before);
  int n = before.size();
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i)
    if (!before.node[i] && !after.node[i])
      out[i] = -(after.S[i] - before.S[i]) / (2.0 * dt);
  return out;
}

// ------------------------------------------------------------------
// The same two observables straight from the field bilinears, without
// going polar: 2 rho E = e[(dt psi) psi~ - (dt psi~) psi] and
// 2 rho P = -e[(dx psi) psi~ - (dx psi~) psi].
// ------------------------------------------------------------------

inline std::vector<double> bohm_energy_density(const FieldGrid& before,
                                               const FieldGrid& mid,
                                               const FieldGrid& after, double dt) {
  int n = mid.extent(0);
  std::vector<double> out(n, 0.0);
  Mv e = Mv::generator(mid.algebra(), 0);
  for (int i = 0; i < n; ++i) {
    Mv dpsi = (after.site(i) - before.site(i)) * (0.5 / dt);
    Mv val = e * (dpsi * mid.site(i).conjugated() -
                  dpsi.conjugated() * mid.site(i));
    out[i] = 0.5 * val.scalar_part();
  }
  return out;
}

inline std::vector<double> bohm_momentum_density(const FieldGrid& f) {
  FieldGrid d = f.central_diff(0);
  int n = f.extent(0);
  std::vector<double> out(n, 0.0);
  Mv e = Mv::generator(f.algebra(), 0);
  for (int i = 0; i < n; ++i) {
    Mv val = e * (d.site(i) * f.site(i).conjugated() -
                  d.site(i).conjugated() * f.site(i));
    out[i] = -0.5 * val.scalar_part();
  }
  return out;
}

// Q = -(lap R) / (2 m R), masked where R is too small to divide by
inline std::vector<double> quantum_potential(const PolarField& p, double m,
                                             double mask_eps = 1e-12) {
  int n = p.size();
  std::vector<double> out(n, 0.0);
  for (int i = 1; i + 1 < n; ++i) {
    if (p.R[i] <= mask_eps || p.node[i - 1] || p.node[i] || p.node[i + 1])
      continue;
    double lap = (p.R[i + 1] - 2.0 * p.R[i] + p.R[i - 1]) / (p.h * p.h);
    out[i] = -lap / (2.0 * m * p.R[i]);
  }
  return out;
}

// dt rho + div(rho dS / m), centered on the middle slice; only R is
// differenced in time, so no phase alignment enters
inline std::vector<double> continuity_residual(const PolarField& before,
                                               const PolarField& mid,
                                               const PolarField& after, double m,
                                               double dt) {
  int n = mid.size();
  std::vector<double> flux(n, 0.0), out(n, 0.0);
  for (int i = 1; i + 1 < n; ++i)
    if (!mid.node[i - 1] && !mid.node[i] && !mid.node[i + 1])
      flux[i] = mid.R[i] * mid.R[i] * (mid.S[i + 1] - mid.S[i - 1]) /
                (2.0 * mid.h) / m;
  for (int i = 2; i + 2 < n; ++i) {
    if (mid.node[i]) continue;
    double drho = (after.R[i] * after.R[i] - before.R[i] * before.R[i]) /
                  (2.0 * dt);
    out[i] = drho + (flux[i + 1] - flux[i - 1]) / (2.0 * mid.h);
  }
  return out;
}

// dt S + (dx S)^2 / 2m + Q + V on the middle slice
inline std::vector<double> qhj_residual(PolarField before, const PolarField& mid,
                                        PolarField after,
                                        const std::function<double(double)>& V,
                                        double m, double dt) {
  align_phase(before, mid);
  align_phase(after, mid);
  auto Q = quantum_potential(mid, m);
  int n = mid.size();
  std::vector<double> out(n, 0.0);
  for (int i = 1; i + 1 < n; ++i) {
    if (mid.node[i - 1] || mid.node[i] || mid.node[i + 1] || before.node[i] ||
        after.node[i])
      continue;
    double dtS = (after.S[i] - before.S[i]) / (2.0 * dt);
    double dxS = (mid.S[i + 1] - mid.S[i - 1]) / (2.0 * mid.h);
    out[i] = dtS + dxS * dxS / (2.0 * m) + Q[i] + V(mid.x0 + i * mid.h);
  }
  return out;
}

// e dt rho - [(H psi_L) psi_R - psi_L (H psi_R)] as a multivector
// field; psi_R is the conjugated field and H = -lap/2m + V
inline FieldGrid liouville_residual(const FieldGrid& before, const FieldGrid& mid,
                                    const FieldGrid& after, double m,
                                    const std::function<double(double)>& V,
                                    double dt) {
  Mv e = Mv::generator(mid.algebra(), 0);
  FieldGrid hpsi = mid.laplacian();
  int n = mid.extent(0);
  for (int i = 0; i < n; ++i)
    hpsi.site(i) = hpsi.site(i) * (-0.5 / m) + mid.site(i) * V(mid.position(0, i));
  FieldGrid out = mid.like();
  for (int i = 0; i < n; ++i) {
    Mv rho_b = before.site(i) * before.site(i).conjugated();
    Mv rho_a = after.site(i) * after.site(i).conjugated();
    Mv drho = (rho_a - rho_b) * (0.5 / dt);
    Mv bracket = hpsi.site(i) * mid.site(i).conjugated() -
                 mid.site(i) * hpsi.site(i).conjugated();
    out.site(i) = e * drho - bracket;
  }
  return out;
}

// total probability sum rho h, the discrete norm the evolutions conserve
inline double probability(const FieldGrid& f) {
  double sum = 0.0;
  for (std::size_t s = 0; s < f.count(); ++s)
    sum += (f.flat(s) * f.flat(s).conjugated()).scalar_part();
  return sum * f.spacing();
}

}  // namespace clifflab
