#pragma once
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

#include "clifflab/algebra.hpp"
#include "clifflab/matrix.hpp"

namespace clifflab {

// ------------------------------------------------------------------
// Rotors and boosts.  A bivector plane with plane^2 = -1 exponentiates
// with cos/sin, plane^2 = +1 with cosh/sinh (angle is then rapidity).
// ------------------------------------------------------------------

inline Mv rotor(const Mv& plane, double angle) {
  if (plane.grade(2).norm() != plane.norm() || plane.norm() == 0.0)
    throw std::invalid_argument("rotor: plane must be a grade-2 element");
  Mv sq = plane * plane;
  double s = sq.scalar_part();
  Mv nonscalar = sq - Mv::scalar(plane.algebra(), s);
  if (nonscalar.norm() > 1e-12 || std::abs(std::abs(s) - 1.0) > 1e-12)
    throw std::invalid_argument("rotor: plane must square to +1 or -1");
  if (s < 0.0)
    return Mv::scalar(plane.algebra(), std::cos(angle / 2)) + plane * std::sin(angle / 2);
  return Mv::scalar(plane.algebra(), std::cosh(angle / 2)) + plane * std::sinh(angle / 2);
}

template <class T>
inline Multivector<T> sandwich(const Multivector<T>& g, const Multivector<T>& a) {
  return g * a * g.versor_inverse();
}

// ------------------------------------------------------------------
// k-calculus on the light cone of C(1,1).
// ------------------------------------------------------------------

inline double k_factor(double v) {
  if (std::abs(v) >= 1.0) throw std::domain_error("k_factor: |v| < 1 required");
  return std::sqrt((1.0 + v) / (1.0 - v));
}

inline double velocity_add(double v1, double v2) { return (v1 + v2) / (1.0 + v1 * v2); }

// boost in the e01 plane of C(1,1) with velocity v; e01 is the
// positive velocity direction, so sandwiching scales e0+e1 by k^-1
// and e0-e1 by k
inline Mv boost(double v) {
  Algebra st = spacetime_plane();
  double lambda = std::log(k_factor(v));  // rapidity
  Mv e01 = Mv::basis(st, 0b11);
  return rotor(e01, lambda);  // cosh(lambda/2) + e01 sinh(lambda/2)
}

inline std::pair<double, double> lightcone_coords(double t, double x) {
  return {t + x, t - x};
}
inline std::pair<double, double> radar_events(double t1, double t2) {
  return {(t2 + t1) / 2.0, (t2 - t1) / 2.0};
}
// a boost scales the two light-ray coordinates reciprocally
inline std::pair<double, double> boost_lightcone(double u, double w, double v) {
  double k = k_factor(v);
  return {u / k, w * k};
}

// ------------------------------------------------------------------
// Infinitesimal Lorentz transformations from sl(2,C) parameters.
// The parameter matrix [[alpha, beta], [gamma, delta]] acts on spin
// space; the induced first-order generator on the vector bilinears is
// assembled from six real combinations.  Only traceless parameter
// sets produce a pure Lorentz generator, hence the precondition.
// ------------------------------------------------------------------

struct Sl2Params {
  std::complex<double> alpha, beta, gamma, delta;
};

enum class SpinorRep { fundamental, conjugate };

// the conjugate representation acts on dotted spinors; its parameter
// matrix is -(M adjoint), written out entrywise
inline Sl2Params conjugate_params(const Sl2Params& p) {
  return {std::conj(p.delta), -std::conj(p.gamma), -std::conj(p.beta), std::conj(p.alpha)};
}

inline std::array<std::array<double, 4>, 4> infinitesimal_lorentz(
    const Sl2Params& p, SpinorRep rep = SpinorRep::fundamental) {
  using cd = std::complex<double>;
  Sl2Params q = (rep == SpinorRep::fundamental) ? p : conjugate_params(p);
  const cd I{0.0, 1.0};
  cd a1 = I * (-q.beta + std::conj(q.beta) - q.gamma + std::conj(q.gamma)) / 2.0;
  cd a2 = (q.beta + std::conj(q.beta) - q.gamma - std::conj(q.gamma)) / 2.0;
  cd a3 = I * (-q.alpha + std::conj(q.alpha) + q.delta - std::conj(q.delta)) / 2.0;
  cd a4 = (-q.beta - std::conj(q.beta) - q.gamma - std::conj(q.gamma)) / 2.0;
  cd a5 = I * (-q.beta + std::conj(q.beta) + q.gamma - std::conj(q.gamma)) / 2.0;
  cd a6 = (-q.alpha - std::conj(q.alpha) + q.delta + std::conj(q.delta)) / 2.0;
  double b1 = a1.real(), b2 = a2.real(), b3 = a3.real();
  double b4 = a4.real(), b5 = a5.real(), b6 = a6.real();
  return {{{0, -b4, -b5, -b6},
           {-b4, 0, b3, -b2},
           {-b5, -b3, 0, b1},
           {-b6, b2, -b1, 0}}};
}

// vector bilinears of an undotted spinor (xi, eta):
//   x0 = |xi|^2 + |eta|^2, x1 = xi eta~ + xi~ eta,
//   x2 = i(xi eta~ - xi~ eta), x3 = |xi|^2 - |eta|^2
inline std::array<double, 4> spinor_bilinears(std::complex<double> xi,
                                              std::complex<double> eta) {
  using cd = std::complex<double>;
  cd cross = xi * std::conj(eta);
  return {std::norm(xi) + std::norm(eta), 2.0 * cross.real(), -2.0 * cross.imag(),
          std::norm(xi) - std::norm(eta)};
}

// dotted-spinor bilinears carry the opposite time component sign
inline std::array<double, 4> conjugate_bilinears(std::complex<double> sg,
                                                 std::complex<double> ta) {
  using cd = std::complex<double>;
  cd cross = sg * std::conj(ta);
  return {-(std::norm(sg) + std::norm(ta)), 2.0 * cross.real(), -2.0 * cross.imag(),
          std::norm(sg) - std::norm(ta)};
}

inline CMatrix sl2_matrix(const Sl2Params& p) {
  return CMatrix{{p.alpha, p.beta}, {p.gamma, p.delta}};
}

}  // namespace clifflab
