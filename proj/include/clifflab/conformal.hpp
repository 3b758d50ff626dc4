#pragma once
#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

#include "clifflab/matrix.hpp"

namespace clifflab {

// ------------------------------------------------------------------
// Chiral-basis gamma matrices.  gamma5 = g0 g1 g2 g3 comes out as
// i * diag(I, -I) and squares to -1; that sign is what makes the
// tensor products below hit the (+,-,-,-,-,+) metric.
// ------------------------------------------------------------------

inline std::array<CMatrix, 4> gamma_matrices() {
  CMatrix i2 = CMatrix::identity(2);
  auto off = [](const CMatrix& up, const CMatrix& dn) {
    CMatrix m(4, 4);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) {
        m(r, c + 2) = up(r, c);
        m(r + 2, c) = dn(r, c);
      }
    return m;
  };
  return {off(i2, i2), off(sigma_x(), -sigma_x()), off(sigma_y(), -sigma_y()),
          off(sigma_z(), -sigma_z())};
}

inline CMatrix gamma5() {
  auto g = gamma_matrices();
  return g[0] * g[1] * g[2] * g[3];
}

// the six generators of the (+,-,-,-,-,+) algebra as 8x8 tensor
// products: beta_mu = 1 (x) gamma_mu, beta_4 = s1 (x) gamma5,
// beta_5 = s1 s3 (x) gamma5
inline std::vector<CMatrix> beta_matrices() {
  CMatrix i2 = CMatrix::identity(2);
  CMatrix g5 = gamma5();
  auto g = gamma_matrices();
  std::vector<CMatrix> b;
  for (int mu = 0; mu < 4; ++mu) b.push_back(kron(i2, g[mu]));
  b.push_back(kron(sigma_x(), g5));
  b.push_back(kron(sigma_x() * sigma_z(), g5));
  return b;
}

// ------------------------------------------------------------------
// Bi-twistors: four Weyl blocks.  The 8-component column the beta
// representation acts on stacks them as (rho2, lambda2, rho1, lambda1);
// that ordering is forced by matching the matrix action of the
// translation operator against its block form.
// ------------------------------------------------------------------

struct BiTwistor {
  using Block = std::array<std::complex<double>, 2>;
  Block lambda1{}, lambda2{}, rho1{}, rho2{};

  std::vector<std::complex<double>> to_vector() const {
    return {rho2[0],    rho2[1],    lambda2[0], lambda2[1],
            rho1[0],    rho1[1],    lambda1[0], lambda1[1]};
  }
  static BiTwistor from_vector(const std::vector<std::complex<double>>& v) {
    if (v.size() != 8) throw std::invalid_argument("bi-twistor needs 8 components");
    BiTwistor t;
    t.rho2 = {v[0], v[1]};
    t.lambda2 = {v[2], v[3]};
    t.rho1 = {v[4], v[5]};
    t.lambda1 = {v[6], v[7]};
    return t;
  }
};

inline CMatrix pauli_dot(double x1, double x2, double x3) {
  return x1 * sigma_x() + x2 * sigma_y() + x3 * sigma_z();
}

// P_mu = beta_mu (beta_4 - beta_5) / 2; all products P_mu P_nu vanish,
// so the exponential series for a translation stops after one term
inline std::vector<CMatrix> translation_generators() {
  auto b = beta_matrices();
  CMatrix tail = (b[4] - b[5]) * std::complex<double>(0.5);
  std::vector<CMatrix> p;
  for (int mu = 0; mu < 4; ++mu) p.push_back(b[mu] * tail);
  return p;
}

inline CMatrix translation_operator(const std::array<double, 4>& dx) {
  auto p = translation_generators();
  CMatrix u = CMatrix::identity(8);
  for (int mu = 0; mu < 4; ++mu) u -= p[mu] * std::complex<double>(dx[mu]);
  return u;
}

// the block form of U(dx): the first cone's blocks feed the second,
// lambda1 and rho1 ride along unchanged
inline BiTwistor translate_bitwistor(const std::array<double, 4>& dx,
                                     const BiTwistor& t) {
  std::complex<double> I{0.0, 1.0};
  CMatrix plus = dx[0] * CMatrix::identity(2) + pauli_dot(dx[1], dx[2], dx[3]);
  CMatrix minus = dx[0] * CMatrix::identity(2) - pauli_dot(dx[1], dx[2], dx[3]);
  auto shift = [&](const BiTwistor::Block& base, const CMatrix& m,
                   std::complex<double> phase, const BiTwistor::Block& src) {
    auto out = base;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) out[r] += phase * m(r, c) * src[c];
    return out;
  };
  BiTwistor out = t;
  out.lambda2 = shift(t.lambda2, minus, -I, t.rho1);
  out.rho2 = shift(t.rho2, plus, I, t.lambda1);
  return out;
}

// ------------------------------------------------------------------
// Six-vectors and the projective drop to Minkowski coordinates.
// ------------------------------------------------------------------

using SixVector = std::array<double, 6>;

inline std::array<double, 4> projective_coords(const SixVector& xi) {
  double denom = xi[4] + xi[5];
  if (denom == 0.0)
    throw std::domain_error("projective_coords: point at infinity");
  return {xi[0] / denom, xi[1] / denom, xi[2] / denom, xi[3] / denom};
}

inline CMatrix six_contraction(const SixVector& xi) {
  auto b = beta_matrices();
  CMatrix m(8, 8);
  for (int a = 0; a < 6; ++a) m += b[a] * std::complex<double>(xi[a]);
  return m;
}

// largest residual of the four block equations equivalent to
// (xi^A beta_A) Psi = 0
inline double incidence_residual(const SixVector& xi, const BiTwistor& t) {
  std::complex<double> I{0.0, 1.0};
  CMatrix plus = xi[0] * CMatrix::identity(2) + pauli_dot(xi[1], xi[2], xi[3]);
  CMatrix minus = xi[0] * CMatrix::identity(2) - pauli_dot(xi[1], xi[2], xi[3]);
  double sum45 = xi[4] + xi[5], dif45 = xi[4] - xi[5];
  auto apply = [](const CMatrix& m, const BiTwistor::Block& v) {
    BiTwistor::Block out{};
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) out[r] += m(r, c) * v[c];
    return out;
  };
  auto resid = [](const BiTwistor::Block& lhs, const BiTwistor::Block& rhs) {
    return std::max(std::abs(lhs[0] - rhs[0]), std::abs(lhs[1] - rhs[1]));
  };
  auto scale = [](double s, const BiTwistor::Block& v) {
    return BiTwistor::Block{s * v[0], s * v[1]};
  };
  auto mul = [](std::complex<double> s, const BiTwistor::Block& v) {
    return BiTwistor::Block{s * v[0], s * v[1]};
  };
  double worst = 0.0;
  worst = std::max(worst, resid(scale(sum45, t.lambda2), mul(-I, apply(minus, t.rho1))));
  worst = std::max(worst, resid(scale(dif45, t.lambda1), mul(-I, apply(minus, t.rho2))));
  worst = std::max(worst, resid(scale(sum45, t.rho2), mul(I, apply(plus, t.lambda1))));
  worst = std::max(worst, resid(scale(dif45, t.rho1), mul(I, apply(plus, t.lambda2))));
  return worst;
}

// a bi-twistor carries one twistor per cone: (lambda1, rho2) for the
// reference cone and (lambda2, rho1) for the displaced one
inline std::pair<std::array<std::complex<double>, 4>,
                 std::array<std::complex<double>, 4>>
split_twistors(const BiTwistor& t) {
  return {{t.lambda1[0], t.lambda1[1], t.rho2[0], t.rho2[1]},
          {t.lambda2[0], t.lambda2[1], t.rho1[0], t.rho1[1]}};
}

inline BiTwistor merge_twistors(const std::array<std::complex<double>, 4>& one,
                                const std::array<std::complex<double>, 4>& two) {
  BiTwistor t;
  t.lambda1 = {one[0], one[1]};
  t.rho2 = {one[2], one[3]};
  t.lambda2 = {two[0], two[1]};
  t.rho1 = {two[2], two[3]};
  return t;
}

}  // namespace clifflab
