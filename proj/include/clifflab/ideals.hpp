#pragma once
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "clifflab/algebra.hpp"
#include "clifflab/matrix.hpp"

namespace clifflab {

// (1 + u)/2 for a unit direction with u^2 = +1; idempotency is exact
inline Mv make_idempotent(const Mv& direction, double tol = 1e-12) {
  Mv sq = direction * direction;
  Mv dev = sq - Mv::scalar(direction.algebra(), 1.0);
  if (dev.norm() > tol)
    throw std::invalid_argument("make_idempotent: direction^2 must be +1");
  return (Mv::scalar(direction.algebra(), 1.0) + direction) / 2.0;
}

// ------------------------------------------------------------------
// Elements of a minimal left ideal: Psi_L = core * eps.  The partner
// right element is Psi_R = eps * adj(core), the matrix adjoint of
// Psi_L, so that the density element rho = Psi_L Psi_R represents the
// projector onto the state.  On even cores and in the one-generator
// algebra the adjoint coincides with Clifford conjugation, but they
// part ways on grade-mixed cores and only the adjoint keeps the
// density's scalar part equal to rho / rep_dim.
// ------------------------------------------------------------------

struct IdealPair {
  Mv left;
  Mv right;
};

inline IdealPair ideal_pair(const Mv& core, const Mv& eps) {
  return {core * eps, eps * core.adjointed()};
}

inline Mv density(const Mv& core, const Mv& eps) {
  return core * eps * core.adjointed();
}

// ------------------------------------------------------------------
// Hopf map: the even Pauli element psi = g0 + g1 e23 + g2 e31 + g3 e12
// pushed through V = psi (1+e3) rev(psi).  The scalar part and vector
// part of V give a point on the null cone: v0^2 = v1^2+v2^2+v3^2.
// ------------------------------------------------------------------

inline Mv pauli_even(double g0, double g1, double g2, double g3) {
  Algebra p3 = pauli_algebra();
  Mv m(p3);
  m.at(0b000) = g0;
  m.at(0b110) = g1;   // e23
  m.at(0b101) = -g2;  // e31 = -e13
  m.at(0b011) = g3;   // e12
  return m;
}

inline std::array<double, 4> hopf_map(double g0, double g1, double g2, double g3) {
  Algebra p3 = pauli_algebra();
  Mv psi = pauli_even(g0, g1, g2, g3);
  Mv one_plus_e3 = Mv::scalar(p3, 1.0) + Mv::generator(p3, 2);
  Mv v = psi * one_plus_e3 * psi.reversed();
  return {v.coefficient(0b000), v.coefficient(0b001), v.coefficient(0b010),
          v.coefficient(0b100)};
}

// closed forms the product expansion must reproduce
inline std::array<double, 4> hopf_closed_form(double g0, double g1, double g2, double g3) {
  return {g0 * g0 + g1 * g1 + g2 * g2 + g3 * g3,
          2.0 * (g1 * g3 - g0 * g2),
          2.0 * (g0 * g1 + g2 * g3),
          g0 * g0 - g1 * g1 - g2 * g2 + g3 * g3};
}

// lift a null quadruple into the (-,+,+,+) algebra, where it squares to zero
inline Mv lift_null_vector(const std::array<double, 4>& v, double tol = 1e-10) {
  double residual = v[0] * v[0] - v[1] * v[1] - v[2] * v[2] - v[3] * v[3];
  if (std::abs(residual) > tol * std::max(1.0, v[0] * v[0]))
    throw std::invalid_argument("lift_null_vector: not null, residual " +
                                std::to_string(residual));
  Algebra lc = lightcone_algebra();
  Mv m(lc);
  for (int i = 0; i < 4; ++i) m.at(1u << i) = v[i];
  return m;
}

// ------------------------------------------------------------------
// Matrix representation plumbing.  A multivector maps to the product
// of generator matrices per blade; linearity does the rest.
// ------------------------------------------------------------------

template <class T>
inline CMatrix matrix_rep(const Multivector<T>& a, const std::vector<CMatrix>& gens) {
  std::size_t n = gens.empty() ? 1 : gens[0].rows();
  CMatrix out(n, n);
  for (unsigned m = 0; m < a.size(); ++m) {
    T c = a.coefficient(m);
    if (c == T{}) continue;
    CMatrix blade = CMatrix::identity(n);
    for (int i = 0; i < a.algebra().dim(); ++i)
      if (m >> i & 1u) blade = blade * gens[i];
    out += blade * std::complex<double>(c);
  }
  return out;
}

inline std::vector<CMatrix> pauli_rep_generators() {
  return {sigma_x(), sigma_y(), sigma_z()};
}

// The spinor hiding inside a left-ideal element: represent
// Psi_L = core (1+e3)/2 with the Pauli matrices and read the
// surviving column.  This computes the component identification
// instead of postulating it.
inline std::pair<std::complex<double>, std::complex<double>> ideal_to_spinor(const Mv& core) {
  Algebra p3 = pauli_algebra();
  Mv eps = make_idempotent(Mv::generator(p3, 2));
  CMatrix m = matrix_rep(core * eps, pauli_rep_generators());
  return {m(0, 0), m(1, 0)};
}

// Penrose's light-ray matrix: the Hermitian rank-one |psi><psi| read
// as a null four-vector
inline std::array<double, 4> penrose_matrix(std::complex<double> p1, std::complex<double> p2) {
  std::complex<double> cross = p1 * std::conj(p2);
  return {std::norm(p1) + std::norm(p2), 2.0 * cross.real(), -2.0 * cross.imag(),
          std::norm(p1) - std::norm(p2)};
}

// ------------------------------------------------------------------
// Chirality in the complexified C(1,3): e5 = e0123 squares to -1, so
// i e5 squares to +1 and splits the algebra into two eigenspaces.
// ------------------------------------------------------------------

inline CMv dirac_e5(const Algebra& d = dirac_algebra()) { return CMv::basis(d, 0b1111); }

inline CMv chirality_projector(int sign, const Algebra& d = dirac_algebra()) {
  using cd = std::complex<double>;
  if (sign != 1 && sign != -1) throw std::invalid_argument("chirality sign must be +-1");
  CMv p = CMv::scalar(d, cd{1.0});
  p += dirac_e5(d) * cd{0.0, static_cast<double>(sign)};
  return p / cd{2.0};
}

inline CMv chirality_project(const CMv& a, int sign) {
  return chirality_projector(sign, a.algebra()) * a;
}

}  // namespace clifflab
