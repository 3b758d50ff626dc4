#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <complex>

#include "clifflab/conformal.hpp"
#include "clifflab/ideals.hpp"
#include "clifflab/rng.hpp"

using namespace clifflab;
using Catch::Approx;
using cd = std::complex<double>;

namespace {

BiTwistor random_bitwistor(Rng& rng) {
  BiTwistor t;
  for (auto* b : {&t.lambda1, &t.lambda2, &t.rho1, &t.rho2})
    for (auto& z : *b) z = rng.normal_complex();
  return t;
}

std::array<double, 4> random_dx(Rng& rng) {
  return {rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2),
          rng.uniform(-2, 2)};
}

}  // namespace

TEST_CASE("beta matrices realize the six-generator metric") {
  auto b = beta_matrices();
  REQUIRE(b.size() == 6);
  const double metric[6] = {1, -1, -1, -1, -1, 1};
  CMatrix i8 = CMatrix::identity(8);
  for (int r = 0; r < 6; ++r) {
    REQUIRE(max_abs_diff(b[r] * b[r], metric[r] * i8) < 1e-14);
    for (int c = r + 1; c < 6; ++c)
      REQUIRE((b[r] * b[c] + b[c] * b[r]).max_abs() < 1e-14);
  }
  // the chosen chiral basis gives gamma5^2 = -1, which the tensor
  // factors above turn into the correct squares for the last two slots
  REQUIRE(max_abs_diff(gamma5() * gamma5(), -CMatrix::identity(4)) < 1e-14);
}

TEST_CASE("the eight-dimensional representation is faithful") {
  Algebra c = conformal_algebra();
  auto b = beta_matrices();
  Rng rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    CMv x(c), y(c);
    for (unsigned i = 0; i < c.size(); ++i) {
      x.at(i) = rng.normal_complex();
      y.at(i) = rng.normal_complex();
    }
    CMatrix mx = matrix_rep(x, b), my = matrix_rep(y, b);
    REQUIRE(max_abs_diff(matrix_rep(x * y, b), mx * my) < 1e-9);
  }
  REQUIRE(matrix_rep(CMv::scalar(c, 1.0), b).trace().real() == Approx(8.0));
}

TEST_CASE("translation generators are nilpotent and additive") {
  auto p = translation_generators();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      REQUIRE((p[mu] * p[nu]).max_abs() < 1e-14);

  Rng rng(43);
  auto a = random_dx(rng), b = random_dx(rng);
  std::array<double, 4> sum;
  for (int i = 0; i < 4; ++i) sum[i] = a[i] + b[i];
  REQUIRE(max_abs_diff(translation_operator(a) * translation_operator(b),
                       translation_operator(sum)) < 1e-12);
  REQUIRE(max_abs_diff(translation_operator({0, 0, 0, 0}),
                       CMatrix::identity(8)) < 1e-14);
  std::array<double, 4> neg;
  for (int i = 0; i < 4; ++i) neg[i] = -a[i];
  REQUIRE(max_abs_diff(translation_operator(a) * translation_operator(neg),
                       CMatrix::identity(8)) < 1e-12);
}

TEST_CASE("block translation formulas match the matrix action") {
  Rng rng(47);
  for (int trial = 0; trial < 25; ++trial) {
    BiTwistor t = random_bitwistor(rng);
    auto dx = random_dx(rng);
    auto direct = translate_bitwistor(dx, t).to_vector();
    auto viaMatrix = translation_operator(dx).apply(t.to_vector());
    for (int i = 0; i < 8; ++i)
      REQUIRE(std::abs(direct[i] - viaMatrix[i]) < 1e-12);
  }
  // round trip through the component accessors
  BiTwistor t = random_bitwistor(rng);
  auto back = BiTwistor::from_vector(t.to_vector());
  for (int i = 0; i < 2; ++i) {
    REQUIRE(back.lambda1[i] == t.lambda1[i]);
    REQUIRE(back.rho2[i] == t.rho2[i]);
  }
}

TEST_CASE("translating the reference cone fills the displaced blocks") {
  Rng rng(53);
  BiTwistor origin;
  for (auto& z : origin.lambda1) z = rng.normal_complex();
  for (auto& z : origin.rho1) z = rng.normal_complex();
  cd I{0.0, 1.0};

  // unit time step: the new blocks are just +-i times the old ones
  BiTwistor shifted = translate_bitwistor({1, 0, 0, 0}, origin);
  for (int i = 0; i < 2; ++i) {
    REQUIRE(std::abs(shifted.lambda2[i] - (-I) * origin.rho1[i]) < 1e-14);
    REQUIRE(std::abs(shifted.rho2[i] - I * origin.lambda1[i]) < 1e-14);
    REQUIRE(shifted.lambda1[i] == origin.lambda1[i]);
    REQUIRE(shifted.rho1[i] == origin.rho1[i]);
  }

  // general step: one twistor pairs lambda1 with its driven partner,
  // the other pairs the driven block with rho1
  auto dx = random_dx(rng);
  CMatrix plus = dx[0] * CMatrix::identity(2) + pauli_dot(dx[1], dx[2], dx[3]);
  CMatrix minus = dx[0] * CMatrix::identity(2) - pauli_dot(dx[1], dx[2], dx[3]);
  BiTwistor moved = translate_bitwistor(dx, origin);
  auto [one, two] = split_twistors(moved);
  for (int r = 0; r < 2; ++r) {
    REQUIRE(one[r] == origin.lambda1[r]);
    REQUIRE(two[r + 2] == origin.rho1[r]);
    cd drivenUp = I * (plus(r, 0) * origin.lambda1[0] + plus(r, 1) * origin.lambda1[1]);
    cd drivenDn = -I * (minus(r, 0) * origin.rho1[0] + minus(r, 1) * origin.rho1[1]);
    REQUIRE(std::abs(one[r + 2] - drivenUp) < 1e-13);
    REQUIRE(std::abs(two[r] - drivenDn) < 1e-13);
  }
  BiTwistor merged = merge_twistors(one, two);
  for (int i = 0; i < 2; ++i) REQUIRE(merged.lambda2[i] == moved.lambda2[i]);
}

TEST_CASE("projective coordinates drop six-vectors onto events") {
  SixVector origin = {0, 0, 0, 0, 1, 1};
  auto x = projective_coords(origin);
  for (double c : x) REQUIRE(c == 0.0);

  SixVector xi = {3, -1, 2, 0.5, 2, 1};
  auto a = projective_coords(xi);
  SixVector scaled;
  for (int i = 0; i < 6; ++i) scaled[i] = 7.0 * xi[i];
  auto b = projective_coords(scaled);
  for (int i = 0; i < 4; ++i) {
    REQUIRE(a[i] == Approx(xi[i] / 3.0));
    REQUIRE(b[i] == Approx(a[i]));
  }
  REQUIRE_THROWS_AS(projective_coords({1, 0, 0, 0, 1, -1}), std::domain_error);
}

TEST_CASE("the block incidence system is the contracted six-vector") {
  Rng rng(59);
  for (int trial = 0; trial < 25; ++trial) {
    SixVector xi;
    for (auto& c : xi) c = rng.uniform(-2, 2);
    BiTwistor t = random_bitwistor(rng);
    auto image = six_contraction(xi).apply(t.to_vector());
    double rowmax = 0.0;
    for (const auto& z : image) rowmax = std::max(rowmax, std::abs(z));
    REQUIRE(incidence_residual(xi, t) == Approx(rowmax).margin(1e-12));
  }

  // at the reference configuration the annihilated bi-twistors are
  // exactly the ones with empty displaced blocks
  SixVector origin = {0, 0, 0, 0, 1, 1};
  BiTwistor flat;
  for (auto& z : flat.lambda1) z = rng.normal_complex();
  for (auto& z : flat.rho1) z = rng.normal_complex();
  REQUIRE(incidence_residual(origin, flat) < 1e-14);
  BiTwistor off = flat;
  off.lambda2[0] = 1.0;
  REQUIRE(incidence_residual(origin, off) > 0.5);
}
