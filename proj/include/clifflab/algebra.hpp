#pragma once
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace clifflab {

// ------------------------------------------------------------------
// scalar ring helpers (double or std::complex<double>)
// ------------------------------------------------------------------

template <class T> struct is_complex : std::false_type {};
template <class U> struct is_complex<std::complex<U>> : std::true_type {};

template <class T> inline double abs_sq(const T& v) {
  if constexpr (is_complex<T>::value)
    return std::norm(v);
  else
    return v * v;
}

// ------------------------------------------------------------------
// Algebra: an ordered list of generator squares (+1 / -1) plus
// display labels.  Blades are bitmasks over the generators; bit i set
// means generator i is a factor, factors in increasing index order.
// ------------------------------------------------------------------

class Algebra {
public:
  Algebra() = default;

  Algebra(std::vector<int> squares, std::vector<std::string> labels)
      : sq_(std::move(squares)), labels_(std::move(labels)) {
    if (sq_.size() != labels_.size())
      throw std::invalid_argument("algebra: one label per generator");
    if (sq_.size() > 16)
      throw std::invalid_argument("algebra: too many generators");
    for (int s : sq_)
      if (s != 1 && s != -1)
        throw std::invalid_argument("algebra: generator squares must be +1 or -1");
  }

  // p generators squaring to +1 first, then q squaring to -1; labels e1..en.
  static Algebra pq(int p, int q) {
    std::vector<int> sq;
    std::vector<std::string> lb;
    for (int i = 0; i < p + q; ++i) {
      sq.push_back(i < p ? 1 : -1);
      lb.push_back("e" + std::to_string(i + 1));
    }
    return Algebra(std::move(sq), std::move(lb));
  }

  int dim() const { return static_cast<int>(sq_.size()); }
  std::size_t size() const { return std::size_t{1} << dim(); }
  int square(int i) const { return sq_.at(i); }
  const std::string& label(int i) const { return labels_.at(i); }

  // dimension of the faithful matrix representation; fixes the trace scale
  int rep_dim() const { return 1 << (dim() / 2); }

  // signature compatibility ignores labels: products care about squares only
  bool operator==(const Algebra& o) const { return sq_ == o.sq_; }
  bool operator!=(const Algebra& o) const { return !(*this == o); }

  // sign of the metric contraction for the generators common to two blades
  int metric_sign(unsigned common) const {
    int s = 1;
    while (common) {
      s *= sq_[std::countr_zero(common)];
      common &= common - 1;
    }
    return s;
  }

  // "1", "e1", "e12", "b05", ... shared label stem + concatenated suffixes
  std::string blade_name(unsigned mask) const {
    if (mask == 0) return "1";
    std::string stem = labels_.empty() ? std::string{} : labels_[0];
    for (const auto& l : labels_) {
      std::size_t k = 0;
      while (k < stem.size() && k < l.size() && stem[k] == l[k]) ++k;
      stem.resize(k);
    }
    bool stacked = !stem.empty();
    for (const auto& l : labels_)
      if (l.size() == stem.size()) stacked = false;  // suffix would be empty
    std::string out;
    if (stacked) {
      out = stem;
      for (int i = 0; i < dim(); ++i)
        if (mask >> i & 1u) out += labels_[i].substr(stem.size());
    } else {
      for (int i = 0; i < dim(); ++i)
        if (mask >> i & 1u) {
          if (!out.empty()) out += '*';
          out += labels_[i];
        }
    }
    return out;
  }

private:
  std::vector<int> sq_;
  std::vector<std::string> labels_;
};

// Reordering parity for the product of blades a and b: counts the
// transpositions needed to interleave the two factor lists.
inline int reorder_sign(unsigned a, unsigned b) {
  int swaps = 0;
  a >>= 1;
  while (a) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

// ------------------------------------------------------------------
// Multivector: dense coefficients over all 2^n blades.
// ------------------------------------------------------------------

template <class T = double>
class Multivector {
public:
  Multivector() = default;
  explicit Multivector(Algebra a) : alg_(std::move(a)), c_(alg_.size(), T{}) {}

  static Multivector scalar(const Algebra& a, T value) {
    Multivector m(a);
    m.c_[0] = value;
    return m;
  }
  static Multivector basis(const Algebra& a, unsigned mask, T coeff = T{1}) {
    Multivector m(a);
    m.at(mask) = coeff;
    return m;
  }
  static Multivector generator(const Algebra& a, int i) {
    return basis(a, 1u << i);
  }

  const Algebra& algebra() const { return alg_; }
  std::size_t size() const { return c_.size(); }

  T& at(unsigned mask) {
    if (mask >= c_.size()) throw std::out_of_range("blade index");
    return c_[mask];
  }
  const T& at(unsigned mask) const {
    if (mask >= c_.size()) throw std::out_of_range("blade index");
    return c_[mask];
  }
  T coefficient(unsigned mask) const { return c_.at(mask); }

  Multivector& operator+=(const Multivector& o) {
    require_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    require_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Multivector& operator*=(T s) {
    for (auto& v : c_) v *= s;
    return *this;
  }
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, T s) { return a *= s; }
  friend Multivector operator*(T s, Multivector a) { return a *= s; }
  friend Multivector operator/(Multivector a, T s) {
    for (auto& v : a.c_) v /= s;
    return a;
  }
  Multivector operator-() const {
    Multivector r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend Multivector operator+(Multivector a, T s) {
    a.c_[0] += s;
    return a;
  }
  friend Multivector operator+(T s, Multivector a) { return std::move(a) + s; }
  friend Multivector operator-(Multivector a, T s) {
    a.c_[0] -= s;
    return a;
  }

  // geometric product; sign = reordering parity * metric contraction
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.require_same(b);
    Multivector r(a.alg_);
    for (unsigned i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == T{}) continue;
      for (unsigned j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j] == T{}) continue;
        int sgn = reorder_sign(i, j) * a.alg_.metric_sign(i & j);
        r.c_[i ^ j] += a.c_[i] * b.c_[j] * T(sgn);
      }
    }
    return r;
  }

  Multivector reversed() const {  // blade factors written backwards
    Multivector r = *this;
    for (unsigned m = 0; m < c_.size(); ++m) {
      int k = std::popcount(m);
      if ((k * (k - 1) / 2) & 1) r.c_[m] = -r.c_[m];
    }
    return r;
  }
  Multivector grade_involuted() const {  // every generator negated
    Multivector r = *this;
    for (unsigned m = 0; m < c_.size(); ++m)
      if (std::popcount(m) & 1) r.c_[m] = -r.c_[m];
    return r;
  }
  Multivector conjugated() const { return reversed().grade_involuted(); }

  // reversal plus a sign flip for each negative-square generator in the
  // blade; the standard representations make positive-square generators
  // self-adjoint and negative-square ones anti-self-adjoint, so this is
  // the matrix adjoint
  Multivector adjointed() const {
    Multivector r = reversed();
    for (unsigned m = 0; m < r.c_.size(); ++m) {
      int neg = 0;
      for (int i = 0; i < alg_.dim(); ++i)
        if ((m >> i & 1u) && alg_.square(i) < 0) ++neg;
      if (neg & 1) r.c_[m] = -r.c_[m];
    }
    return r;
  }

  Multivector grade(int k) const {
    Multivector r(alg_);
    for (unsigned m = 0; m < c_.size(); ++m)
      if (std::popcount(m) == k) r.c_[m] = c_[m];
    return r;
  }
  T scalar_part() const { return c_[0]; }

  // trace of the faithful matrix representation: every non-scalar blade
  // is traceless, the identity contributes rep_dim
  T trace() const { return c_[0] * T(alg_.rep_dim()); }

  double norm() const {
    double s = 0;
    for (const auto& v : c_) s += abs_sq(v);
    return std::sqrt(s);
  }

  bool is_zero(double tol = 0.0) const { return norm() <= tol; }

  // inverse of a versor g: g~ / (g g~), valid when g g~ is a nonzero scalar
  Multivector versor_inverse(double tol = 1e-12) const {
    Multivector rev = reversed();
    Multivector gg = (*this) * rev;
    T s = gg.scalar_part();
    gg.c_[0] = T{};
    if (gg.norm() > tol * std::max(1.0, std::sqrt(abs_sq(s))) || s == T{})
      throw std::domain_error("versor_inverse: g * rev(g) is not a nonzero scalar");
    return rev / s;
  }

  // coefficient of blade A recovered through the trace functional:
  //   b^A = tr(B rev(e_A)) / (rep_dim * <e_A rev(e_A)>_0)
  // the denominator is +-1 and supplies the metric sign of the blade
  T extract(unsigned mask) const {
    Multivector eA = basis(alg_, mask);
    Multivector eArev = eA.reversed();
    T denom = (eA * eArev).scalar_part() * T(alg_.rep_dim());
    return ((*this) * eArev).trace() / denom;
  }

  std::string str(double tol = 1e-14) const {
    std::string out;
    for (unsigned m = 0; m < c_.size(); ++m) {
      if (std::sqrt(abs_sq(c_[m])) <= tol) continue;
      if (!out.empty()) out += " + ";
      if constexpr (is_complex<T>::value) {
        out += "(" + std::to_string(c_[m].real()) + (c_[m].imag() < 0 ? "-" : "+") +
               std::to_string(std::abs(c_[m].imag())) + "i)";
      } else {
        out += std::to_string(c_[m]);
      }
      if (m != 0) out += "*" + alg_.blade_name(m);
    }
    return out.empty() ? "0" : out;
  }

private:
  void require_same(const Multivector& o) const {
    if (alg_ != o.alg_) throw std::invalid_argument("multivector: signature mismatch");
  }

  Algebra alg_;
  std::vector<T> c_;
};

using Mv = Multivector<double>;
using CMv = Multivector<std::complex<double>>;

// promote a real multivector into the complexified algebra
inline CMv complexify(const Mv& a) {
  CMv r(a.algebra());
  for (unsigned m = 0; m < a.size(); ++m) r.at(m) = a.coefficient(m);
  return r;
}

// ------------------------------------------------------------------
// named algebras used throughout
// ------------------------------------------------------------------

// C(0,1): one generator e with e^2 = -1; the commutative ring a + e b
inline Algebra schrodinger_algebra() { return Algebra({-1}, {"e"}); }

// C(0,2): quaternion algebra, e1^2 = e2^2 = -1
inline Algebra quaternion_algebra() { return Algebra({-1, -1}, {"e1", "e2"}); }

// C(1,1): e0^2 = +1 (temporal), e1^2 = -1 (polar)
inline Algebra spacetime_plane() { return Algebra({1, -1}, {"e0", "e1"}); }

// C(3,0): Pauli algebra
inline Algebra pauli_algebra() { return Algebra({1, 1, 1}, {"e1", "e2", "e3"}); }

// C(1,3): Dirac algebra, e0^2 = +1
inline Algebra dirac_algebra() { return Algebra({1, -1, -1, -1}, {"e0", "e1", "e2", "e3"}); }

// C(3,1) ordered (-,+,+,+): null-vector home for the Hopf lift,
// v0 e0 + v.e squares to v.v - v0^2
inline Algebra lightcone_algebra() { return Algebra({-1, 1, 1, 1}, {"e0", "e1", "e2", "e3"}); }

// C(2,4) ordered (+,-,-,-,-,+) over b0..b5: the conformal algebra
inline Algebra conformal_algebra() {
  return Algebra({1, -1, -1, -1, -1, 1}, {"b0", "b1", "b2", "b3", "b4", "b5"});
}

}  // namespace clifflab
