#pragma once
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "clifflab/actions.hpp"
#include "clifflab/algebra.hpp"
#include "clifflab/bohm.hpp"
#include "clifflab/conformal.hpp"
#include "clifflab/ideals.hpp"
#include "clifflab/observables.hpp"
#include "clifflab/process.hpp"
#include "clifflab/rng.hpp"
#include "clifflab/weyl.hpp"

// Named residual checks over every module, grouped into suites.  The
// command line tool and the release gate both read from this list, so
// the numbers a verify run prints are the same ones the tests pin.

namespace clifflab {

inline const char* library_version() { return "0.1.0"; }

struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  double max_residual() const {
    double m = 0.0;
    for (const auto& c : checks) m = std::max(m, c.residual);
    return m;
  }
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  int weyl_n = 0;  // 0 sweeps n = 2..12
};

namespace detail {

inline void push(SuiteReport& r, std::string name, double residual,
                 double tolerance) {
  r.checks.push_back({std::move(name), residual, tolerance,
                      residual <= tolerance});
}

// for checks whose pass condition is not a plain threshold (documented
// mismatches, band conditions); the residual stays informative
inline void push_flag(SuiteReport& r, std::string name, double residual,
                      double tolerance, bool pass) {
  r.checks.push_back({std::move(name), residual, tolerance, pass});
}

inline double interior_max(const std::vector<double>& v, int skirt = 2) {
  double m = 0;
  for (int i = skirt; i + skirt < int(v.size()); ++i)
    m = std::max(m, std::abs(v[i]));
  return m;
}

struct WaveSlices {
  FieldGrid before, mid, after;
  PolarField pb, pm, pa;
};

inline WaveSlices wave_slices(const WaveFunction& psi, int nx, double x0,
                              double h, double t, double dt) {
  WaveSlices s{sample_wave(psi, nx, x0, h, t - dt),
               sample_wave(psi, nx, x0, h, t),
               sample_wave(psi, nx, x0, h, t + dt),
               {}, {}, {}};
  s.pb = decompose_polar(s.before);
  s.pm = decompose_polar(s.mid);
  s.pa = decompose_polar(s.after);
  return s;
}

inline Mv random_mv(const Algebra& a, Rng& rng) {
  Mv m(a);
  for (unsigned i = 0; i < a.size(); ++i) m.at(i) = rng.uniform(-1.0, 1.0);
  return m;
}

}  // namespace detail

// ------------------------------------------------------------------
// groupoid: composition of movements, the two small bracket tables,
// and the iterant action table.
// ------------------------------------------------------------------

inline SuiteReport verify_groupoid(const VerifyOptions& opt = {}) {
  SuiteReport r{"groupoid", opt.seed, {}};
  Rng rng(opt.seed);

  const Metric quat = {{"P0", 1}, {"P1", 1}, {"P2", 1}};
  const Metric st = {{"P0", 1}, {"P", 1}, {"T", -1}};

  // squares of the basic movements close onto signed loops
  {
    double bad = 0;
    auto sq = [&](const Extensive& e, const Metric& g) {
      return loop_value(*compose(e, e, g), g);
    };
    if (sq(extensive("P0", "P1"), quat) != -1.0) bad += 1;
    if (sq(extensive("P0", "P2"), quat) != -1.0) bad += 1;
    if (sq(extensive("P0", "T"), st) != 1.0) bad += 1;
    if (sq(extensive("P0", "P"), st) != -1.0) bad += 1;
    detail::push(r, "movement squares close onto signed loops", bad, 0.0);
  }

  // rewriting a factor as its retrace never changes the composite
  {
    std::vector<std::string> pts = {"P0", "P1", "P2", "P3"};
    Metric g = {{"P0", 1}, {"P1", -1}, {"P2", 1}, {"P3", -1}};
    auto same = [&](const Extensive& u, const Extensive& v) {
      if (u.is_loop() || v.is_loop())
        return u.is_loop() && v.is_loop() &&
               loop_value(u, g) == loop_value(v, g);
      if (u.source == v.source && u.target == v.target)
        return u.strength == v.strength;
      if (u.source == v.target && u.target == v.source)
        return u.strength == -v.strength;
      return false;
    };
    double bad = 0;
    for (const auto& s1 : pts)
      for (const auto& t1 : pts)
        for (const auto& s2 : pts)
          for (const auto& t2 : pts) {
            Extensive a{s1, t1, 1.0}, b{s2, t2, 1.0};
            auto base = compose(a, b, g);
            for (int mask = 1; mask < 4; ++mask) {
              auto alt = compose((mask & 1) ? a.reversed() : a,
                                 (mask & 2) ? b.reversed() : b, g);
              if (base.has_value() != alt.has_value()) bad += 1;
              else if (base && !same(*base, *alt)) bad += 1;
            }
          }
    detail::push(r, "composition survives rewriting the factors", bad, 0.0);
  }

  // associativity on random triples over six points
  {
    std::vector<std::string> pts = {"A", "B", "C", "D", "E", "F"};
    Metric g;
    int sgn = 1;
    for (const auto& p : pts) { g[p] = sgn; sgn = -sgn; }
    std::vector<Extensive> edges;
    for (const auto& s : pts)
      for (const auto& t : pts)
        if (s != t) edges.push_back(extensive(s, t));
    double bad = 0;
    for (int trial = 0; trial < 2000; ++trial) {
      const Extensive& a = edges[rng.integer(0, edges.size() - 1)];
      const Extensive& b = edges[rng.integer(0, edges.size() - 1)];
      const Extensive& c = edges[rng.integer(0, edges.size() - 1)];
      auto ab = compose(a, b, g);
      auto bc = compose(b, c, g);
      if (!ab || !bc) continue;
      auto left = compose(*ab, c, g);
      auto right = compose(a, *bc, g);
      if (!left || !right) continue;
      if (left->is_loop() && right->is_loop()) {
        if (loop_value(*left, g) != loop_value(*right, g)) bad += 1;
      } else {
        bool same = left->source == right->source &&
                    left->target == right->target &&
                    left->strength == right->strength;
        bool flipped = left->source == right->target &&
                       left->target == right->source &&
                       left->strength == -right->strength;
        if (!same && !flipped) bad += 1;
      }
    }
    detail::push(r, "composition is associative where both groupings exist",
                 bad, 0.0);
  }

  // the two bracket tables, entry for entry, exact integers
  {
    struct E { int c; const char* n; };
    const std::vector<Extensive> qel = {extensive("P0", "P1"),
                                        extensive("P0", "P2"),
                                        extensive("P1", "P2")};
    const E qexp[3][3] = {
        {{-1, "1"}, {-1, "[P1 P2]"}, {1, "[P0 P2]"}},
        {{1, "[P1 P2]"}, {-1, "1"}, {-1, "[P0 P1]"}},
        {{-1, "[P0 P2]"}, {1, "[P0 P1]"}, {-1, "1"}},
    };
    ProcessTable qt = process_table(qel, quat);
    double bad = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (qt.cells[i][j].name != qexp[i][j].n ||
            qt.cells[i][j].coeff != qexp[i][j].c)
          bad += 1;
    detail::push(r, "quaternion bracket table matches the reference grid",
                 bad, 0.0);

    const std::vector<Extensive> sel = {extensive("P0", "T"),
                                        extensive("P0", "P"),
                                        extensive("P", "T")};
    const E sexp[3][3] = {
        {{1, "1"}, {1, "[P T]"}, {1, "[P0 P]"}},
        {{-1, "[P T]"}, {-1, "1"}, {1, "[P0 T]"}},
        {{-1, "[P0 P]"}, {-1, "[P0 T]"}, {1, "1"}},
    };
    ProcessTable stt = process_table(sel, st);
    bad = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (stt.cells[i][j].name != sexp[i][j].n ||
            stt.cells[i][j].coeff != sexp[i][j].c)
          bad += 1;
    detail::push(r, "spacetime-plane bracket table matches the reference grid",
                 bad, 0.0);
  }

  // the full four-element grids (unit row and column included) under
  // the movement-to-generator identification, 16 entries each
  {
    Algebra q = quaternion_algebra();
    Mv one = Mv::scalar(q, 1.0);
    Mv b1 = Mv::generator(q, 0);           // [P0 P1]
    Mv b2 = Mv::generator(q, 1);           // [P0 P2]
    Mv b21 = b2 * b1;                      // [P1 P2]
    const Mv qrow[4] = {one, b1, b2, b21};
    const Mv qexp[4][4] = {
        {one, b1, b2, b21},
        {b1, one * -1.0, b21 * -1.0, b2},
        {b2, b21, one * -1.0, b1 * -1.0},
        {b21, b2 * -1.0, b1, one * -1.0},
    };
    double bad = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if ((qrow[i] * qrow[j] - qexp[i][j]).norm() != 0.0) bad += 1;

    Algebra s = spacetime_plane();
    Mv su = Mv::scalar(s, 1.0);
    Mv tt = Mv::generator(s, 0);           // [P0 T]
    Mv pp = Mv::generator(s, 1);           // [P0 P]
    Mv pt = tt * pp;                       // [P T]
    const Mv srow[4] = {su, tt, pp, pt};
    const Mv sexp[4][4] = {
        {su, tt, pp, pt},
        {tt, su, pt, pp},
        {pp, pt * -1.0, su * -1.0, tt},
        {pt, pp * -1.0, tt * -1.0, su},
    };
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if ((srow[i] * srow[j] - sexp[i][j]).norm() != 0.0) bad += 1;
    detail::push(r, "four-element grids close with exact integer entries",
                 bad, 0.0);
  }

  // bracket products track the generated algebra
  {
    const Metric pg = {{"P0", 1}, {"P1", -1}, {"P2", -1}, {"P3", -1}};
    auto real = build_clifford(
        {extensive("P0", "P1"), extensive("P0", "P2"), extensive("P0", "P3")},
        pg);
    const Algebra& a = real.algebra;
    double bad = 0;
    if (a.square(0) != 1 || a.square(1) != 1 || a.square(2) != 1) bad += 1;
    auto to_mv = [&](const Extensive& x) {
      auto idx = [&](const std::string& p) {
        for (std::size_t i = 0; i < real.generators.size(); ++i)
          if (real.generators[i].target == p) return static_cast<int>(i);
        return -1;
      };
      if (x.is_loop()) return Mv::scalar(a, loop_value(x, pg));
      int si = idx(x.source), ti = idx(x.target);
      if (si < 0) return Mv::generator(a, ti) * x.strength;
      if (ti < 0) return Mv::generator(a, si) * (-x.strength);
      return Mv::generator(a, ti) * Mv::generator(a, si) * x.strength;
    };
    std::vector<Extensive> elems = real.generators;
    elems.push_back(extensive("P1", "P2"));
    elems.push_back(extensive("P1", "P3"));
    elems.push_back(extensive("P2", "P3"));
    for (const auto& x : elems)
      for (const auto& y : elems) {
        auto comp = compose(x, y, pg);
        if (!comp) continue;
        if ((to_mv(*comp) - to_mv(x) * to_mv(y)).norm() != 0.0) bad += 1;
      }
    detail::push(r, "bracket products track the generated algebra", bad, 0.0);
  }

  // iterant action table on random pairs, exact arithmetic
  {
    double bad = 0;
    for (int trial = 0; trial < 100; ++trial) {
      Iterant x{rng.normal(), rng.normal()};
      auto a = apply_operator(IterantOp::annihilate, x);
      auto c = apply_operator(IterantOp::create, x);
      if (!(a == Iterant{x.right, 0})) bad += 1;
      if (!(c == Iterant{0, x.left})) bad += 1;
      if (!(apply_operator(IterantOp::sigma_x, x) == Iterant{x.right, x.left}))
        bad += 1;
      if (!(apply_operator(IterantOp::momentum, x) == Iterant{0, x.right}))
        bad += 1;
      if (!(apply_operator(IterantOp::copy_inside, x) == Iterant{x.left, x.left}))
        bad += 1;
      if (!(apply_operator(IterantOp::copy_outside, x) ==
            Iterant{x.right, x.right}))
        bad += 1;
      // the stated sums and composites
      if (!(a + c == apply_operator(IterantOp::sigma_x, x))) bad += 1;
      if (!(apply_operator(IterantOp::create, a) ==
            apply_operator(IterantOp::momentum, x)))
        bad += 1;
      Iterant l1 = apply_operator(IterantOp::annihilate, c) + c;
      Iterant l2 = apply_operator(IterantOp::create, a) + a;
      if (!(l1 == Iterant{x.left, x.left})) bad += 1;
      if (!(l2 == Iterant{x.right, x.right})) bad += 1;
    }
    if (!(apply_operator(IterantOp::annihilate, vacuum(3.0)) == Iterant{0, 0}))
      bad += 1;
    if (!(apply_operator(IterantOp::create, plenum(5.0)) == Iterant{0, 0}))
      bad += 1;
    detail::push(r, "iterant operator actions hold on random pairs", bad, 0.0);
  }

  // sigma_z is kept verbatim even though a - a+ composes to the
  // swapped flip; the mismatch is documented, not hidden
  {
    double bad = 0;
    double gap = 0;
    for (int trial = 0; trial < 100; ++trial) {
      Iterant x{rng.normal(), rng.normal()};
      Iterant stated = apply_operator(IterantOp::sigma_z, x);
      if (!(stated == Iterant{x.left, -x.right})) bad += 1;
      Iterant composed = apply_operator(IterantOp::annihilate, x) -
                         apply_operator(IterantOp::create, x);
      if (!(composed == Iterant{x.right, -x.left})) bad += 1;
      gap = std::max({gap, std::abs(composed.left - stated.left),
                      std::abs(composed.right - stated.right)});
    }
    detail::push_flag(
        r,
        "sigma_z stays verbatim while a - a+ composes to the swapped flip "
        "(documented expected mismatch)",
        gap, 0.0, bad == 0.0);
  }

  return r;
}

// ------------------------------------------------------------------
// rotors: finite rotations as sandwich actions.
// ------------------------------------------------------------------

inline SuiteReport verify_rotors(const VerifyOptions& opt = {}) {
  SuiteReport r{"rotors", opt.seed, {}};
  Rng rng(opt.seed);
  Algebra p = pauli_algebra();
  Mv e1 = Mv::generator(p, 0), e2 = Mv::generator(p, 1),
     e3 = Mv::generator(p, 2);
  Mv plane = e2 * e1;  // turns e1 toward e2

  double frame = 0, unit = 0, axis = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    double th = rng.uniform(0.0, 2.0 * std::numbers::pi);
    Mv g = rotor(plane, th);
    Mv want = e1 * std::cos(th) + e2 * std::sin(th);
    frame = std::max(frame, (sandwich(g, e1) - want).norm());
    unit = std::max(unit, (g * g.reversed() - Mv::scalar(p, 1.0)).norm());
    axis = std::max(axis, (sandwich(g, e3) - e3).norm());
  }
  detail::push(r, "a rotor turns the frame by the stated angle (1000 angles)",
               frame, 1e-12);
  detail::push(r, "rotors are unit versors", unit, 1e-12);
  detail::push(r, "the rotation axis stays fixed", axis, 1e-12);

  double morph = 0, length = 0;
  Mv g = rotor(Mv::basis(p, 0b011), 0.77) * rotor(Mv::basis(p, 0b110), -0.41);
  for (int trial = 0; trial < 20; ++trial) {
    Mv a = detail::random_mv(p, rng), b = detail::random_mv(p, rng);
    morph = std::max(
        morph, (sandwich(g, a * b) - sandwich(g, a) * sandwich(g, b)).norm());
    Mv v = a.grade(1);
    Mv w = sandwich(g, v);
    length = std::max(length, std::abs(w.norm() - v.norm()));
    length = std::max(length, (w - w.grade(1)).norm());
  }
  detail::push(r, "the sandwich action preserves products and lengths", morph,
               1e-10);
  detail::push(r, "vectors stay vectors with the same length", length, 1e-10);

  {
    Mv h = rotor(Mv::basis(p, 0b110), 0.9);
    Mv direct = make_idempotent(sandwich(h, e3));
    Mv moved = sandwich(h, make_idempotent(e3));
    detail::push(r, "idempotents follow the rotated frame",
                 (direct - moved).norm(), 1e-12);
  }

  detail::push(r, "a full turn lands on minus one",
               (rotor(plane, 2.0 * std::numbers::pi) + Mv::scalar(p, 1.0)).norm(),
               1e-12);
  return r;
}

// ------------------------------------------------------------------
// kcalculus: boosts, light-ray scale factors, velocity composition.
// ------------------------------------------------------------------

inline SuiteReport verify_kcalculus(const VerifyOptions& opt = {}) {
  SuiteReport r{"kcalculus", opt.seed, {}};
  Rng rng(opt.seed);
  Algebra st = spacetime_plane();
  Mv e0 = Mv::generator(st, 0), e1 = Mv::generator(st, 1);
  Mv u = e0 + e1, w = e0 - e1;

  std::vector<double> vs;
  for (int i = 0; i < 200; ++i) vs.push_back(rng.uniform(-0.99, 0.99));

  double ray = 0;
  for (double v : vs) {
    double k = k_factor(v);
    Mv g = boost(v);
    ray = std::max(ray, (sandwich(g, u) - u * (1.0 / k)).norm());
    ray = std::max(ray, (sandwich(g, w) - w * k).norm());
  }
  detail::push(r, "boosts scale the light rays reciprocally (200 velocities)",
               ray, 1e-12);

  // multiplicativity measured as rapidity additivity, which keeps the
  // comparison conditioned at the edge of the velocity range
  double mult = 0, comp = 0;
  for (std::size_t i = 0; i + 1 < vs.size(); i += 2) {
    double v1 = vs[i], v2 = vs[i + 1];
    double v12 = velocity_add(v1, v2);
    double l1 = std::log(k_factor(v1)), l2 = std::log(k_factor(v2));
    double l12 = std::log(k_factor(v12));
    mult = std::max(mult, std::abs(l1 + l2 - l12) / (1.0 + std::abs(l12)));
    Mv prod = boost(v1) * boost(v2);
    comp = std::max(comp,
                    (prod - boost(v12)).norm() / boost(v12).norm());
    }
  detail::push(r, "scale factors multiply along velocity composition", mult,
               1e-12);
  detail::push(r, "boosts compose through velocity addition", comp, 1e-12);

  double interval = 0, radar = 0;
  for (int trial = 0; trial < 50; ++trial) {
    double v = rng.uniform(-0.99, 0.99);
    double t = rng.uniform(-2, 2), x = rng.uniform(-2, 2);
    Mv b = sandwich(boost(v), e0 * t + e1 * x);
    double tp = b.at(0b01), xp = b.at(0b10);
    interval = std::max(interval,
                        std::abs(tp * tp - xp * xp - (t * t - x * x)) /
                            (1.0 + t * t + x * x));
    auto [lu, lw] = lightcone_coords(t, x);
    auto [tr, xr] = radar_events(t - x, t + x);
    radar = std::max({radar, std::abs(tr - t), std::abs(xr - x)});
    auto [ub, wb] = boost_lightcone(lu, lw, v);
    auto [ua, wa] = lightcone_coords(b.at(0b01), b.at(0b10));
    radar = std::max({radar, std::abs(ua - ub), std::abs(wa - wb)});
  }
  detail::push(r, "the interval survives the sandwich", interval, 1e-12);
  detail::push(r, "radar coordinates recover events and ride the boost",
               radar, 1e-12);
  return r;
}

// ------------------------------------------------------------------
// hopf: even elements onto the null cone, and the light-ray matrix.
// ------------------------------------------------------------------

inline SuiteReport verify_hopf(const VerifyOptions& opt = {}) {
  SuiteReport r{"hopf", opt.seed, {}};
  Rng rng(opt.seed);

  double closed = 0, cone = 0, lift = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    double g0 = rng.uniform(-2, 2), g1 = rng.uniform(-2, 2);
    double g2 = rng.uniform(-2, 2), g3 = rng.uniform(-2, 2);
    auto v = hopf_map(g0, g1, g2, g3);
    auto cf = hopf_closed_form(g0, g1, g2, g3);
    for (int i = 0; i < 4; ++i)
      closed = std::max(closed, std::abs(v[i] - cf[i]));
    double v0sq = std::max(v[0] * v[0], 1e-30);
    cone = std::max(cone, std::abs(v[0] * v[0] - v[1] * v[1] - v[2] * v[2] -
                                   v[3] * v[3]) / v0sq);
    Mv lifted = lift_null_vector(v);
    lift = std::max(lift, (lifted * lifted).norm() / v0sq);
  }
  detail::push(r, "the cone image matches its closed form (1000 states)",
               closed, 1e-12);
  detail::push(r, "cone images are null", cone, 1e-12);
  detail::push(r, "null quadruples lift to square-zero vectors", lift, 1e-12);

  double ray = 0, ident = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    double g0 = rng.uniform(-1, 1), g1 = rng.uniform(-1, 1);
    double g2 = rng.uniform(-1, 1), g3 = rng.uniform(-1, 1);
    auto [p1, p2] = ideal_to_spinor(pauli_even(g0, g1, g2, g3));
    ident = std::max({ident, std::abs(p1.real() - g0), std::abs(p1.imag() - g3),
                      std::abs(p2.real() + g2), std::abs(p2.imag() - g1)});
    auto m = penrose_matrix(p1, p2);
    auto v = hopf_map(g0, g1, g2, g3);
    for (int i = 0; i < 4; ++i) ray = std::max(ray, std::abs(m[i] - v[i]));
  }
  detail::push(r, "the computed component identification is exact", ident,
               1e-13);
  detail::push(r, "the light-ray matrix agrees with the cone image (1000 states)",
               ray, 1e-12);
  return r;
}

// ------------------------------------------------------------------
// chirality: the complexified four-generator algebra splits in two.
// ------------------------------------------------------------------

inline SuiteReport verify_chirality(const VerifyOptions& opt = {}) {
  SuiteReport r{"chirality", opt.seed, {}};
  Rng rng(opt.seed);
  using cd = std::complex<double>;
  Algebra d = dirac_algebra();
  CMv e5 = dirac_e5();
  cd I{0.0, 1.0};

  detail::push(r, "i e0123 squares to one",
               ((I * e5) * (I * e5) - CMv::scalar(d, cd{1.0})).norm(), 1e-14);

  CMv plus = chirality_projector(+1), minus = chirality_projector(-1);
  double resolve = std::max({(plus * plus - plus).norm(),
                             (minus * minus - minus).norm(),
                             (plus * minus).norm(),
                             (plus + minus - CMv::scalar(d, cd{1.0})).norm()});
  detail::push(r, "the chirality projectors resolve the identity", resolve,
               1e-14);

  auto b = [&](unsigned m) { return CMv::basis(d, m); };
  CMv one = CMv::scalar(d, cd{1.0});
  std::array<CMv, 2> lower = {minus * (one - b(0b1001)) * cd{0.5},
                              minus * (b(0b1010) + b(0b0011)) * cd{0.5}};
  std::array<CMv, 2> upper = {plus * (b(0b0001) - b(0b1000)) * cd{0.5},
                              plus * (b(0b0100) + b(0b1101)) * cd{0.5}};
  double eigen = 0;
  for (const auto& x : lower) {
    if (x.is_zero()) eigen = std::max(eigen, 1.0);
    eigen = std::max(eigen, (chirality_project(x, -1) - x).norm());
    eigen = std::max(eigen, chirality_project(x, +1).norm());
  }
  for (const auto& x : upper) {
    if (x.is_zero()) eigen = std::max(eigen, 1.0);
    eigen = std::max(eigen, (chirality_project(x, +1) - x).norm());
    eigen = std::max(eigen, chirality_project(x, -1).norm());
  }
  detail::push(r, "spanning ideal elements sit in their eigenspaces", eigen,
               1e-12);

  double split = 0;
  for (int trial = 0; trial < 20; ++trial) {
    CMv x(d);
    for (unsigned i = 0; i < d.size(); ++i) x.at(i) = rng.normal_complex();
    split = std::max(split,
                     (chirality_project(x, +1) + chirality_project(x, -1) - x)
                         .norm());
    split = std::max(split, (chirality_project(chirality_project(x, +1), -1))
                                .norm());
  }
  detail::push(r, "every element splits into its two chiral parts", split,
               1e-12);
  return r;
}

// ------------------------------------------------------------------
// twistor: the eight-dimensional conformal representation and
// cone-to-cone translations.
// ------------------------------------------------------------------

inline SuiteReport verify_twistor(const VerifyOptions& opt = {}) {
  SuiteReport r{"twistor", opt.seed, {}};
  Rng rng(opt.seed);
  using cd = std::complex<double>;
  cd I{0.0, 1.0};

  auto b = beta_matrices();
  {
    const double metric[6] = {1, -1, -1, -1, -1, 1};
    CMatrix i8 = CMatrix::identity(8);
    double worst = 0;
    for (int i = 0; i < 6; ++i) {
      worst = std::max(worst, max_abs_diff(b[i] * b[i], metric[i] * i8));
      for (int j = i + 1; j < 6; ++j)
        worst = std::max(worst, (b[i] * b[j] + b[j] * b[i]).max_abs());
    }
    detail::push(r, "the six generator matrices realize the metric", worst,
                 1e-14);
  }

  {
    Algebra c = conformal_algebra();
    double faithful = 0;
    for (int trial = 0; trial < 3; ++trial) {
      CMv x(c), y(c);
      for (unsigned i = 0; i < c.size(); ++i) {
        x.at(i) = rng.normal_complex();
        y.at(i) = rng.normal_complex();
      }
      faithful = std::max(faithful,
                          max_abs_diff(matrix_rep(x * y, b),
                                       matrix_rep(x, b) * matrix_rep(y, b)));
    }
    detail::push(r, "the eight-dimensional representation is faithful",
                 faithful, 1e-9);
  }

  {
    CMatrix step = (b[4] - b[5]) * cd{0.5};
    detail::push(r, "the cone-to-cone step squares to zero exactly",
                 (step * step).max_abs(), 0.0);
    auto p = translation_generators();
    double nil = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        nil = std::max(nil, (p[i] * p[j]).max_abs());
    detail::push(r, "translation generators are nilpotent", nil, 1e-14);
  }

  auto random_dx = [&] {
    return std::array<double, 4>{rng.uniform(-2, 2), rng.uniform(-2, 2),
                                 rng.uniform(-2, 2), rng.uniform(-2, 2)};
  };
  auto random_bt = [&] {
    BiTwistor t;
    for (auto* blk : {&t.lambda1, &t.lambda2, &t.rho1, &t.rho2})
      for (auto& z : *blk) z = rng.normal_complex();
    return t;
  };

  {
    double add = 0;
    for (int trial = 0; trial < 100; ++trial) {
      auto a = random_dx(), c = random_dx();
      std::array<double, 4> sum;
      for (int i = 0; i < 4; ++i) sum[i] = a[i] + c[i];
      add = std::max(add,
                     max_abs_diff(translation_operator(a) *
                                      translation_operator(c),
                                  translation_operator(sum)));
    }
    detail::push(r, "translations are additive (100 pairs)", add, 1e-12);
  }

  {
    double block = 0;
    for (int trial = 0; trial < 200; ++trial) {
      BiTwistor t = random_bt();
      auto dx = random_dx();
      auto direct = translate_bitwistor(dx, t).to_vector();
      auto via = translation_operator(dx).apply(t.to_vector());
      for (int i = 0; i < 8; ++i)
        block = std::max(block, std::abs(direct[i] - via[i]));
    }
    detail::push(r, "the block step matches the matrix action (200 states)",
                 block, 1e-12);
  }

  {
    // an origin pair: only the reference blocks are occupied, and the
    // step fills the displaced blocks through -+i sigma contractions
    double origin = 0;
    for (int trial = 0; trial < 200; ++trial) {
      BiTwistor t;
      for (auto& z : t.lambda1) z = rng.normal_complex();
      for (auto& z : t.rho1) z = rng.normal_complex();
      auto dx = random_dx();
      CMatrix plus = dx[0] * CMatrix::identity(2) + pauli_dot(dx[1], dx[2], dx[3]);
      CMatrix minus = dx[0] * CMatrix::identity(2) - pauli_dot(dx[1], dx[2], dx[3]);
      BiTwistor moved = translate_bitwistor(dx, t);
      auto via = translation_operator(dx).apply(t.to_vector());
      BiTwistor oracle = BiTwistor::from_vector(via);
      for (int row = 0; row < 2; ++row) {
        cd lam = -I * (minus(row, 0) * t.rho1[0] + minus(row, 1) * t.rho1[1]);
        cd rho = I * (plus(row, 0) * t.lambda1[0] + plus(row, 1) * t.lambda1[1]);
        origin = std::max({origin, std::abs(moved.lambda2[row] - lam),
                           std::abs(moved.rho2[row] - rho),
                           std::abs(oracle.lambda2[row] - lam),
                           std::abs(oracle.rho2[row] - rho)});
      }
    }
    detail::push(r,
                 "an origin pair feeds the displaced blocks through -+i sigma "
                 "steps (200 states)",
                 origin, 1e-12);
  }

  {
    double match = 0;
    for (int trial = 0; trial < 100; ++trial) {
      SixVector xi;
      for (auto& c : xi) c = rng.uniform(-2, 2);
      BiTwistor t = random_bt();
      auto image = six_contraction(xi).apply(t.to_vector());
      double rowmax = 0;
      for (const auto& z : image) rowmax = std::max(rowmax, std::abs(z));
      match = std::max(match, std::abs(incidence_residual(xi, t) - rowmax));
    }
    detail::push(r, "the incidence residual equals the contracted matrix action",
                 match, 1e-12);

    SixVector origin = {0, 0, 0, 0, 1, 1};
    BiTwistor flat;
    for (auto& z : flat.lambda1) z = rng.normal_complex();
    for (auto& z : flat.rho1) z = rng.normal_complex();
    detail::push(r, "reference-cone pairs are annihilated at the reference "
                    "configuration",
                 incidence_residual(origin, flat), 1e-14);
  }
  return r;
}

// ------------------------------------------------------------------
// bohm: polar decomposition, guidance relations, residual scaling.
// ------------------------------------------------------------------

inline SuiteReport verify_bohm(const VerifyOptions& opt = {}) {
  SuiteReport r{"bohm", opt.seed, {}};

  {
    double k = 0.9, t = 0.37, h = 1e-3, dt = 1e-3, w = 0.5 * k * k;
    int nx = 16001;
    detail::WaveSlices s = detail::wave_slices(plane_wave(k), nx, -8.0, h, t, dt);
    auto mom = bohm_momentum(s.pm);
    auto en = bohm_energy(s.pb, s.pa, dt);
    double dp = 0, de = 0;
    for (int i = 2; i + 2 < nx; ++i) {
      dp = std::max(dp, std::abs(mom[i] - k));
      de = std::max(de, std::abs(en[i] - w));
    }
    detail::push(r, "plane wave reads momentum k", dp, 1e-10);
    detail::push(r, "plane wave reads energy k^2/2", de, 1e-10);

    FieldGrid lio = liouville_residual(s.before, s.mid, s.after, 1.0,
                                       free_potential(), dt);
    detail::push(r, "the commutator residual vanishes on the plane wave",
                 lio.interior_max_norm(), 1e-8);
    double scalar = 0;
    for (int i = 1; i + 1 < nx; i += 157)
      scalar = std::max(scalar, std::abs(lio.site(i).at(0b0)));
    detail::push(r, "the commutator residual has no scalar part", scalar,
                 1e-13);
  }

  {
    // the plane wave solves both scalar equations identically, so its
    // residuals sit at the rounding floor at every refinement level
    double floor = 0;
    for (double h : {4e-3, 2e-3, 1e-3}) {
      int nx = int(std::round(16.0 / h)) + 1;
      detail::WaveSlices s =
          detail::wave_slices(plane_wave(0.9), nx, -8.0, h, 0.37, h);
      floor = std::max(floor, detail::interior_max(continuity_residual(
                                  s.pb, s.pm, s.pa, 1.0, h)));
      floor = std::max(floor, detail::interior_max(qhj_residual(
                                  s.pb, s.pm, s.pa, free_potential(), 1.0, h)));
    }
    detail::push(r, "plane wave residuals stay at the rounding floor under "
                    "refinement",
                 floor, 1e-8);
  }

  {
    WaveFunction psi = gaussian_packet(1.0, 0.8);
    std::vector<double> conts, qhjs;
    for (double h : {0.04, 0.02, 0.01}) {
      int nx = int(std::round(16.0 / h)) + 1;
      double dt = h / 10.0;
      detail::WaveSlices s = detail::wave_slices(psi, nx, -8.0, h, 0.3, dt);
      conts.push_back(detail::interior_max(
          continuity_residual(s.pb, s.pm, s.pa, 1.0, dt)));
      qhjs.push_back(detail::interior_max(
          qhj_residual(s.pb, s.pm, s.pa, free_potential(), 1.0, dt)));
    }
    double coff = 0, qoff = 0;
    for (int i = 0; i + 1 < 3; ++i) {
      coff = std::max(coff, std::abs(conts[i] / conts[i + 1] - 4.0));
      qoff = std::max(qoff, std::abs(qhjs[i] / qhjs[i + 1] - 4.0));
    }
    detail::push(r, "free-packet continuity residual refines at second order",
                 coff, 0.8);
    detail::push(r, "free-packet hamilton-jacobi residual refines at second "
                    "order",
                 qoff, 0.8);
  }

  {
    double h = 1e-3, dt = 1e-5;
    int nx = 16001;
    struct Probe { WaveFunction psi; double t; };
    std::array<Probe, 2> probes = {Probe{plane_wave(0.7), 0.31},
                                   Probe{gaussian_packet(1.0, 0.8), 0.25}};
    double egap = 0, pgap = 0;
    for (const auto& probe : probes) {
      detail::WaveSlices s =
          detail::wave_slices(probe.psi, nx, -8.0, h, probe.t, dt);
      auto rhoE = bohm_energy_density(s.before, s.mid, s.after, dt);
      auto E = bohm_energy(s.pb, s.pa, dt);
      auto rhoP = bohm_momentum_density(s.mid);
      auto P = bohm_momentum(s.pm);
      for (int i = 2; i + 2 < nx; i += 61) {
        double rho = s.pm.R[i] * s.pm.R[i];
        egap = std::max(egap, std::abs(rhoE[i] - rho * E[i]));
        pgap = std::max(pgap, std::abs(rhoP[i] - rho * P[i]));
      }
    }
    detail::push(r, "bilinear and polar routes agree on the energy density",
                 egap, 1e-10);
    detail::push(r, "bilinear and polar routes agree on the momentum density",
                 pgap, 1e-6);
  }

  {
    double h = 1e-3;
    int nx = 16001;
    WaveFunction psi = gaussian_packet(1.0, 0.8);
    double p0 = probability(sample_wave(psi, nx, -8.0, h, 0.0));
    double p1 = probability(sample_wave(psi, nx, -8.0, h, 0.5));
    detail::push(r, "total probability is conserved along the evolution",
                 std::abs(p1 - p0), 1e-8);
    detail::push(r, "the sampled packet is normalized", std::abs(p0 - 1.0),
                 1e-6);
  }
  return r;
}

// ------------------------------------------------------------------
// expectation: trace pairings, spin readouts, flow parameters.
// ------------------------------------------------------------------

inline SuiteReport verify_expectation(const VerifyOptions& opt = {}) {
  SuiteReport r{"expectation", opt.seed, {}};
  Rng rng(opt.seed);
  Algebra p = pauli_algebra();
  Mv eps = spin_idempotent(p);

  {
    auto up = spin_expectation(Mv::scalar(p, 1.0));
    auto dn = spin_expectation(Mv::generator(p, 0));
    double off = std::max({std::abs(up[0]), std::abs(up[1]),
                           std::abs(up[2] - 0.5), std::abs(dn[0]),
                           std::abs(dn[1]), std::abs(dn[2] + 0.5)});
    detail::push(r, "axis states read plus and minus one half exactly", off,
                 0.0);
    Mv rho = density(Mv::scalar(p, 1.0), eps);
    detail::push(r, "the half shows up before the representation doubling",
                 std::abs((Mv::generator(p, 2) * rho).scalar_part() - 0.5), 0.0);
  }

  {
    double mag = 0;
    for (int trial = 0; trial < 500; ++trial) {
      double a, b, c, d, rho;
      do {
        a = rng.uniform(-1, 1); b = rng.uniform(-1, 1);
        c = rng.uniform(-1, 1); d = rng.uniform(-1, 1);
        rho = a * a + b * b + c * c + d * d;
      } while (rho < 1e-2);
      double s = 1.0 / std::sqrt(rho);
      Mv core(p);
      core.at(0b000) = a * s;
      core.at(0b001) = c * s;
      core.at(0b110) = b * s;
      core.at(0b111) = d * s;
      auto sv = spin_expectation(core);
      double len = std::sqrt(sv[0] * sv[0] + sv[1] * sv[1] + sv[2] * sv[2]);
      mag = std::max(mag, std::abs(len - 0.5));
    }
    detail::push(r, "normalized states have spin magnitude one half "
                    "(500 states)",
                 mag, 1e-12);
  }

  {
    double cone = 0;
    for (int trial = 0; trial < 200; ++trial) {
      double a = rng.uniform(-1, 1), b = rng.uniform(-1, 1);
      double c = rng.uniform(-1, 1), d = rng.uniform(-1, 1);
      Mv core(p);
      core.at(0b000) = a;
      core.at(0b001) = c;
      core.at(0b110) = b;
      core.at(0b111) = d;
      auto sv = spin_vector(core);
      auto v = hopf_map(a, b, -c, d);
      cone = std::max({cone, std::abs(sv[0] - v[1]), std::abs(sv[1] - v[2]),
                       std::abs(sv[2] - v[3])});
    }
    detail::push(r, "the spin readout matches the cone image", cone, 1e-10);
  }

  {
    double round = 0;
    for (const Algebra& a : {pauli_algebra(), dirac_algebra(),
                             spacetime_plane()}) {
      for (int trial = 0; trial < 10; ++trial) {
        Mv x = detail::random_mv(a, rng);
        round = std::max(round, (bilinear_invariants(x).reconstruct() - x).norm());
      }
    }
    detail::push(r, "bilinear invariants reconstruct the element", round,
                 1e-12);
  }

  {
    // blades odd under conjugation are traceless against even ones
    double drop = 0;
    for (unsigned ma = 0; ma < p.size(); ++ma) {
      Mv A = Mv::basis(p, ma);
      bool odd = (A.conjugated() + A).norm() < 1e-14;
      if (!odd) continue;
      for (unsigned mb = 0; mb < p.size(); ++mb) {
        Mv B = Mv::basis(p, mb);
        if ((B.conjugated() - B).norm() > 1e-14) continue;
        drop = std::max(drop, std::abs((A * B).trace()));
      }
    }
    detail::push(r, "conjugation-odd blades drop out of the trace pairing",
                 drop, 1e-13);
  }

  {
    double reduce = 0;
    Mv e3 = Mv::generator(p, 2);
    Mv e12 = Mv::generator(p, 0) * Mv::generator(p, 1);
    for (int trial = 0; trial < 10; ++trial) {
      Mv core = detail::random_mv(p, rng);
      Mv rho = density(core, eps);
      reduce = std::max(reduce,
                        std::abs(differential_expectation(e3, core, core, eps, +1) -
                                 expectation(e3, rho, false)));
      reduce = std::max(reduce,
                        std::abs(differential_expectation(e3, core, core, eps, -1)));
      reduce = std::max(reduce,
                        std::abs(differential_expectation(e12, core, core, eps, -1) -
                                 expectation(e12, rho, false)));
      reduce = std::max(reduce,
                        std::abs(differential_expectation(e12, core, core, eps, +1)));
    }
    detail::push(r, "suppressing the differential reduces to the plain mean",
                 reduce, 1e-11);
  }

  {
    double k = 0.7, t = 0.4, h = 1e-3, dt = 1e-3, w = 0.5 * k * k;
    int nx = 16001;
    WaveFunction psi = plane_wave(k);
    FieldGrid before = sample_wave(psi, nx, -8.0, h, t - dt);
    FieldGrid mid = sample_wave(psi, nx, -8.0, h, t);
    FieldGrid after = sample_wave(psi, nx, -8.0, h, t + dt);
    FieldGrid dx = mid.central_diff(0);
    auto rhoE = bohm_energy_density(before, mid, after, dt);
    auto rhoP = bohm_momentum_density(mid);
    Algebra sch = schrodinger_algebra();
    Mv e = Mv::generator(sch, 0);
    Mv unit = Mv::scalar(sch, 1.0);
    double egap = 0, pgap = 0, dens = 0;
    for (int i = 2; i + 2 < nx; i += 1009) {
      Mv dpsi_t = (after.site(i) - before.site(i)) * (0.5 / dt);
      double eE = differential_expectation(e, dpsi_t, mid.site(i), unit, +1);
      egap = std::max(egap, std::abs(eE - w));
      dens = std::max(dens, std::abs(eE - rhoE[i]));
      double pP = differential_expectation(e * -1.0, dx.site(i), mid.site(i),
                                           unit, +1);
      pgap = std::max(pgap, std::abs(pP - k));
      dens = std::max(dens, std::abs(pP - rhoP[i]));
    }
    detail::push(r, "the time pairing reads the energy of the flow", egap,
                 1e-8);
    detail::push(r, "the space pairing reads the momentum of the flow", pgap,
                 1e-6);
    detail::push(r, "flow pairings agree with the bilinear densities", dens,
                 1e-12);
  }
  return r;
}

// ------------------------------------------------------------------
// weyl: clock and shift, idempotent ladders, the finite transform.
// ------------------------------------------------------------------

inline SuiteReport verify_weyl(const VerifyOptions& opt = {}) {
  SuiteReport r{"weyl", opt.seed, {}};
  Rng rng(opt.seed);
  using cd = std::complex<double>;

  std::vector<int> sizes;
  if (opt.weyl_n == 0) {
    for (int n = 2; n <= 12; ++n) sizes.push_back(n);
  } else {
    if (opt.weyl_n < 2 || opt.weyl_n > 64)
      throw std::invalid_argument("weyl order must lie in [2, 64]");
    sizes.push_back(opt.weyl_n);
  }
  std::string span = sizes.size() == 1
                         ? " (n = " + std::to_string(sizes[0]) + ")"
                         : " (n = 2..12)";

  double braid = 0, structure = 0, resolve = 0, advance = 0, ladder = 0;
  double transform = 0, mutual = 0;
  bool structure_ran = false;
  double printed_small = 0;
  bool printed_breaks = true, printed_seen_large = false;

  for (int n : sizes) {
    WeylAlgebra a(n, 0.7, 1.3);
    WeylElement U = weyl_shift(a), V = weyl_clock(a);
    WeylElement one = WeylElement::identity(a);

    // braiding and periodicity
    braid = std::max(braid, (U * V - a.omega() * (V * U)).norm());
    WeylElement up = one, vp = one;
    for (int i = 0; i < n; ++i) { up = up * U; vp = vp * V; }
    braid = std::max({braid, (up - one).norm(), (vp - one).norm()});

    // structure constants against the matrix products: exhaustive for
    // small orders, random full elements above that
    if (n <= 8) {
      structure_ran = true;
      std::vector<CMatrix> reps;
      reps.reserve(std::size_t(n) * n);
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          reps.push_back(weyl_represent(WeylElement::basis(a, j, k)));
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l)
            for (int m = 0; m < n; ++m) {
              WeylElement prod =
                  WeylElement::basis(a, j, k) * WeylElement::basis(a, l, m);
              structure = std::max(
                  structure,
                  max_abs_diff(weyl_represent(prod),
                               reps[std::size_t(j) * n + k] *
                                   reps[std::size_t(l) * n + m]));
            }
    } else {
      structure_ran = true;
      for (int trial = 0; trial < 2; ++trial) {
        WeylElement x(a), y(a);
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            x.at(j, k) = rng.normal_complex();
            y.at(j, k) = rng.normal_complex();
          }
        structure = std::max(structure,
                             max_abs_diff(weyl_represent(x * y),
                                          weyl_represent(x) * weyl_represent(y)));
      }
    }

    // both idempotent families resolve the identity
    for (auto family : {&idempotent_x, &idempotent_p}) {
      WeylElement sum(a);
      for (int j = 0; j < n; ++j) {
        WeylElement ej = family(a, j);
        sum += ej;
        resolve = std::max(resolve, (ej * ej - ej).norm());
        for (int l = j + 1; l < n; ++l)
          resolve = std::max(resolve, (ej * family(a, l)).norm());
      }
      resolve = std::max(resolve, (sum - one).norm());
    }

    // conjugation by the partner operator advances each family
    for (int j = 0; j < n; ++j) {
      advance = std::max(advance, (translate_position(idempotent_x(a, j)) -
                                   idempotent_x(a, (j + 1) % n)).norm());
      advance = std::max(advance, (translate_momentum(idempotent_p(a, j)) -
                                   idempotent_p(a, (j + 1) % n)).norm());
      advance = std::max(advance, (translate_momentum(idempotent_x(a, j)) -
                                   idempotent_x(a, j)).norm());
      advance = std::max(advance, (translate_position(idempotent_p(a, j)) -
                                   idempotent_p(a, j)).norm());
    }

    // integer eigenvalue ladders for the two coordinates
    WeylElement X = position_element(a), P = momentum_element(a);
    for (int j = 0; j < n; ++j) {
      ladder = std::max(ladder, (X * idempotent_x(a, j) -
                                 cd{0.7 * j} * idempotent_x(a, j)).norm());
      ladder = std::max(ladder, (P * idempotent_p(a, j) -
                                 cd{1.3 * j} * idempotent_p(a, j)).norm());
    }

    // the finite transform exchanges the families
    CMatrix Z = fourier_matrix(a);
    transform = std::max(transform,
                         max_abs_diff(weyl_represent(fourier_element(a)), Z));
    transform = std::max(transform,
                         max_abs_diff(Z * Z.adjoint(), CMatrix::identity(n)));
    CMatrix Zi = Z.inverse();
    for (int j = 0; j < n; ++j)
      transform = std::max(
          transform, max_abs_diff(Zi * weyl_represent(idempotent_x(a, j)) * Z,
                                  weyl_represent(idempotent_p(a, j))));

    // overlaps between the families are mutually unbiased
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        mutual = std::max(
            mutual, std::abs(std::abs(weyl_trace(idempotent_x(a, j) *
                                                 idempotent_p(a, l))) -
                             1.0 / n));

    // the alternate transform assembly is kept for the record: it
    // reproduces the exchange only at order two and breaks above that
    if (n == 2) {
      CMatrix Za = weyl_represent(fourier_element_printed(a));
      CMatrix Zai = Za.inverse();
      for (int j = 0; j < n; ++j)
        printed_small = std::max(
            printed_small,
            max_abs_diff(Zai * weyl_represent(idempotent_x(a, j)) * Za,
                         weyl_represent(idempotent_p(a, j))));
    } else {
      printed_seen_large = true;
      bool broken = false;
      try {
        CMatrix Za = weyl_represent(fourier_element_printed(a));
        CMatrix Zai = Za.inverse();
        double gap = 0;
        for (int j = 0; j < n; ++j)
          gap = std::max(gap,
                         max_abs_diff(Zai * weyl_represent(idempotent_x(a, j)) *
                                          Za,
                                      weyl_represent(idempotent_p(a, j))));
        broken = gap > 1e-3;
      } catch (const std::domain_error&) {
        broken = true;  // not even invertible
      }
      if (!broken) printed_breaks = false;
    }
  }

  detail::push(r, "clock and shift braid with the root of unity" + span, braid,
               1e-13);
  if (structure_ran)
    detail::push(r, "structure constants match the matrix products" + span,
                 structure, 1e-11);
  detail::push(r, "both idempotent families resolve the identity" + span,
               resolve, 1e-12);
  detail::push(r, "partner conjugation advances each family by one step" + span,
               advance, 1e-12);
  detail::push(r, "position and momentum carry integer eigenvalue ladders" +
                   span,
               ladder, 1e-12);
  detail::push(r, "the finite transform exchanges the families" + span,
               transform, 1e-10);
  detail::push(r, "family overlaps are mutually unbiased" + span, mutual,
               1e-12);

  bool printed_pass = printed_small <= 1e-10 && printed_breaks;
  std::string printed_name =
      "the alternate transform assembly holds only at order two (documented)";
  if (!printed_seen_large && sizes.size() == 1 && sizes[0] == 2)
    printed_name = "the alternate transform assembly holds at order two";
  detail::push_flag(r, printed_name + span, printed_small, 1e-10, printed_pass);
  return r;
}

// ------------------------------------------------------------------
// dispatch
// ------------------------------------------------------------------

inline std::vector<std::string> suite_names() {
  return {"groupoid", "rotors", "kcalculus", "hopf", "chirality",
          "twistor", "bohm", "expectation", "weyl"};
}

inline SuiteReport run_suite(const std::string& name,
                             const VerifyOptions& opt = {}) {
  if (name == "groupoid") return verify_groupoid(opt);
  if (name == "rotors") return verify_rotors(opt);
  if (name == "kcalculus") return verify_kcalculus(opt);
  if (name == "hopf") return verify_hopf(opt);
  if (name == "chirality") return verify_chirality(opt);
  if (name == "twistor") return verify_twistor(opt);
  if (name == "bohm") return verify_bohm(opt);
  if (name == "expectation") return verify_expectation(opt);
  if (name == "weyl") return verify_weyl(opt);
  throw std::invalid_argument("unknown suite: " + name);
}

inline std::vector<SuiteReport> run_requested(const std::string& name,
                                              const VerifyOptions& opt = {}) {
  std::vector<SuiteReport> out;
  if (name == "all") {
    for (const auto& s : suite_names()) out.push_back(run_suite(s, opt));
  } else {
    out.push_back(run_suite(name, opt));
  }
  return out;
}

}  // namespace clifflab
