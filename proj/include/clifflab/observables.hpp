#pragma once
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "clifflab/algebra.hpp"
#include "clifflab/ideals.hpp"

namespace clifflab {

// ------------------------------------------------------------------
// Trace-based state readout.  A state enters as a density element
// rho = Psi_L Psi_R and every number we can ask of it is a trace of
// the form tr(B rho); the blade coefficients recovered that way are
// the state's bilinear invariants.
// ------------------------------------------------------------------

// every blade coefficient of an element, recovered through the trace
// functional and bundled so the element can be rebuilt
struct InvariantSet {
  Algebra alg;
  std::vector<double> coeff;

  Mv reconstruct() const {
    Mv out(alg);
    for (unsigned m = 0; m < coeff.size(); ++m) out.at(m) = coeff[m];
    return out;
  }
};

inline InvariantSet bilinear_invariants(const Mv& rho) {
  InvariantSet s{rho.algebra(), std::vector<double>(rho.size(), 0.0)};
  for (unsigned m = 0; m < rho.size(); ++m) s.coeff[m] = rho.extract(m);
  return s;
}

// <B> = tr(B rho), divided by tr(rho) unless normalization is waived
inline double expectation(const Mv& B, const Mv& rho, bool normalize = true) {
  double num = (B * rho).trace();
  if (!normalize) return num;
  double den = rho.trace();
  if (std::abs(den) <= 1e-14 * std::max(1.0, rho.norm()))
    throw std::domain_error("expectation: density element has zero trace");
  return num / den;
}

// ------------------------------------------------------------------
// Spin readout in the three-generator algebra.  The reference
// idempotent is (1 + e3)/2; the components below are tabulated
// against it, so any other idempotent is rejected rather than
// silently reinterpreted.
// ------------------------------------------------------------------

inline Mv spin_idempotent(const Algebra& a) {
  return make_idempotent(Mv::generator(a, 2));
}

namespace detail {
inline void require_spin_frame(const Mv& core, const Mv& eps) {
  const Algebra& a = core.algebra();
  if (a.dim() != 3 || a.square(0) != 1 || a.square(1) != 1 || a.square(2) != 1)
    throw std::invalid_argument("spin readout needs the three-generator algebra");
  if ((eps - spin_idempotent(a)).norm() > 1e-12)
    throw std::invalid_argument("spin components are tabulated against (1+e3)/2");
}
}  // namespace detail

// rho S_j = tr(e_j rho), the unnormalized spin vector of the state
inline std::array<double, 3> spin_vector(const Mv& core, const Mv& eps) {
  detail::require_spin_frame(core, eps);
  Mv rho = density(core, eps);
  std::array<double, 3> s{};
  for (int j = 0; j < 3; ++j)
    s[j] = expectation(Mv::generator(core.algebra(), j), rho, false);
  return s;
}

inline std::array<double, 3> spin_vector(const Mv& core) {
  return spin_vector(core, spin_idempotent(core.algebra()));
}

// <S_j> = rho S_j / (2 rho): the halving makes the readout land on
// +-1/2 for the axis states, which is what pins the convention
inline std::array<double, 3> spin_expectation(const Mv& core) {
  const Algebra& a = core.algebra();
  Mv eps = spin_idempotent(a);
  detail::require_spin_frame(core, eps);
  Mv rho = density(core, eps);
  double tr = rho.trace();
  if (std::abs(tr) <= 1e-14 * std::max(1.0, rho.norm()))
    throw std::domain_error("spin expectation: state has zero norm");
  auto s = spin_vector(core, eps);
  for (double& v : s) v /= 2.0 * tr;
  return s;
}

// ------------------------------------------------------------------
// Mean values of differential elements B*d.  Differentiation acts
// from both sides, giving a symmetric and an antisymmetric pairing:
//   2<P>+- = tr[B (d psi) eps psi_R] +- tr[adj(B) psi eps (d psi_R)]
// with psi_R = adj(psi), d psi_R = adj(d psi).  Suppressing d (passing
// dpsi = psi) reduces the + form to tr(B rho) whenever B is
// self-adjoint; the - form isolates the anti-self-adjoint part.
// ------------------------------------------------------------------

inline double differential_expectation(const Mv& B, const Mv& dpsi, const Mv& psi,
                                       const Mv& eps, int sign = +1) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("pairing sign must be +1 or -1");
  double lhs = (B * dpsi * eps * psi.adjointed()).trace();
  double rhs = (B.adjointed() * psi * eps * dpsi.adjointed()).trace();
  return 0.5 * (lhs + sign * rhs);
}

}  // namespace clifflab
