#pragma once
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "clifflab/matrix.hpp"

namespace clifflab {

// ------------------------------------------------------------------
// Finite Weyl pair of order n: clock V (diagonal of n-th roots) and
// shift U, braided by UV = omega VU.  The basis is
//   R(j,k) = tau^(-jk) U^j V^k,   tau = exp(pi i / n),  tau^2 = omega.
// Using the primitive 2n-th root tau keeps the half power in the
// printed omega^(-jk/2) single-valued for even n.
// ------------------------------------------------------------------

class WeylAlgebra {
 public:
  explicit WeylAlgebra(int n, double dx = 1.0, double dp = 1.0)
      : n_(n), dx_(dx), dp_(dp) {
    if (n < 2 || n > 64) throw std::invalid_argument("weyl order must be 2..64");
    if (dx <= 0 || dp <= 0)
      throw std::invalid_argument("lattice scales must be positive");
  }

  int order() const { return n_; }
  double dx() const { return dx_; }
  double dp() const { return dp_; }

  std::complex<double> omega_pow(long long e) const { return root(2 * e); }
  std::complex<double> tau_pow(long long e) const { return root(e); }
  std::complex<double> omega() const { return omega_pow(1); }
  std::complex<double> tau() const { return tau_pow(1); }

  bool operator==(const WeylAlgebra& o) const { return n_ == o.n_; }
  bool operator!=(const WeylAlgebra& o) const { return n_ != o.n_; }

 private:
  // exp(i pi e / n), evaluated on the exponent reduced mod 2n so phases
  // stay exactly periodic
  std::complex<double> root(long long e) const {
    long long m = e % (2 * n_);
    if (m < 0) m += 2 * n_;
    double arg = std::numbers::pi * double(m) / double(n_);
    return {std::cos(arg), std::sin(arg)};
  }

  int n_;
  double dx_, dp_;
};

class WeylElement {
 public:
  explicit WeylElement(WeylAlgebra a)
      : alg_(a), c_(std::size_t(a.order()) * a.order()) {}

  static WeylElement basis(const WeylAlgebra& a, int j, int k) {
    WeylElement e(a);
    int n = a.order();
    e.at(((j % n) + n) % n, ((k % n) + n) % n) = 1.0;
    return e;
  }

  static WeylElement identity(const WeylAlgebra& a) { return basis(a, 0, 0); }

  const WeylAlgebra& algebra() const { return alg_; }
  int order() const { return alg_.order(); }

  std::complex<double>& at(int j, int k) { return c_[idx(j, k)]; }
  std::complex<double> coefficient(int j, int k) const { return c_[idx(j, k)]; }

  WeylElement& operator+=(const WeylElement& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  WeylElement& operator-=(const WeylElement& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  WeylElement& operator*=(std::complex<double> s) {
    for (auto& v : c_) v *= s;
    return *this;
  }
  friend WeylElement operator+(WeylElement x, const WeylElement& y) { return x += y; }
  friend WeylElement operator-(WeylElement x, const WeylElement& y) { return x -= y; }
  friend WeylElement operator*(WeylElement x, std::complex<double> s) { return x *= s; }
  friend WeylElement operator*(std::complex<double> s, WeylElement x) { return x *= s; }

  // bilinear extension of
  //   R(j,k) R(l,m) = tau^(jm - kl + JK - (j+l)(k+m)) R(J, K)
  // with J = (j+l) mod n, K = (k+m) mod n; the tail of the exponent
  // pays for reducing the indices while U^n = V^n = 1
  friend WeylElement operator*(const WeylElement& x, const WeylElement& y) {
    x.check(y);
    int n = x.order();
    WeylElement out(x.alg_);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        std::complex<double> cx = x.coefficient(j, k);
        if (cx == std::complex<double>{}) continue;
        for (int l = 0; l < n; ++l)
          for (int m = 0; m < n; ++m) {
            std::complex<double> cy = y.coefficient(l, m);
            if (cy == std::complex<double>{}) continue;
            int J = (j + l) % n, K = (k + m) % n;
            long long e = (long long)j * m - (long long)k * l +
                          (long long)J * K - (long long)(j + l) * (k + m);
            out.at(J, K) += cx * cy * x.alg_.tau_pow(e);
          }
      }
    return out;
  }

  double norm() const {
    double s = 0;
    for (const auto& v : c_) s += std::norm(v);
    return std::sqrt(s);
  }

 private:
  std::size_t idx(int j, int k) const {
    if (j < 0 || j >= order() || k < 0 || k >= order())
      throw std::out_of_range("weyl basis index");
    return std::size_t(j) * order() + k;
  }
  void check(const WeylElement& o) const {
    if (alg_ != o.alg_) throw std::invalid_argument("weyl order mismatch");
  }

  WeylAlgebra alg_;
  std::vector<std::complex<double>> c_;
};

inline WeylElement weyl_shift(const WeylAlgebra& a) { return WeylElement::basis(a, 1, 0); }
inline WeylElement weyl_clock(const WeylAlgebra& a) { return WeylElement::basis(a, 0, 1); }

// matrix trace of the element; every R(j,k) except the identity is
// traceless in the clock-and-shift representation
inline std::complex<double> weyl_trace(const WeylElement& x) {
  return x.coefficient(0, 0) * double(x.order());
}

// ------------------------------------------------------------------
// Point families.  The position points are the clock's spectral
// projectors and the momentum points the shift's:
//   eps_j  = (1/n) sum_k omega^(+jk) V^k
//   eps'_j = (1/n) sum_k omega^(-jk) U^k
// The +jk phase on the position family makes conjugation by the shift
// advance the label for both families at once.
// ------------------------------------------------------------------

inline WeylElement idempotent_x(const WeylAlgebra& a, int j) {
  int n = a.order();
  if (j < 0 || j >= n) throw std::invalid_argument("point label out of range");
  WeylElement e(a);
  for (int k = 0; k < n; ++k)
    e.at(0, k) = a.omega_pow((long long)j * k) / double(n);
  return e;
}

inline WeylElement idempotent_p(const WeylAlgebra& a, int j) {
  int n = a.order();
  if (j < 0 || j >= n) throw std::invalid_argument("point label out of range");
  WeylElement e(a);
  for (int k = 0; k < n; ++k)
    e.at(k, 0) = a.omega_pow(-(long long)j * k) / double(n);
  return e;
}

// conjugation by the shift: advances position labels, fixes momentum ones
inline WeylElement translate_position(const WeylElement& x) {
  const WeylAlgebra& a = x.algebra();
  return WeylElement::basis(a, 1, 0) * x * WeylElement::basis(a, a.order() - 1, 0);
}

// conjugation by the clock: advances momentum labels, fixes position ones
inline WeylElement translate_momentum(const WeylElement& x) {
  const WeylAlgebra& a = x.algebra();
  return WeylElement::basis(a, 0, 1) * x * WeylElement::basis(a, 0, a.order() - 1);
}

// X = dx sum_k k eps_k and P = dp sum_j j eps'_j, so the point labels
// are read off as eigenvalues: X eps_j = dx j eps_j
inline WeylElement position_element(const WeylAlgebra& a) {
  WeylElement x(a);
  for (int k = 1; k < a.order(); ++k)
    x += idempotent_x(a, k) * std::complex<double>(a.dx() * k, 0.0);
  return x;
}

inline WeylElement momentum_element(const WeylAlgebra& a) {
  WeylElement p(a);
  for (int j = 1; j < a.order(); ++j)
    p += idempotent_p(a, j) * std::complex<double>(a.dp() * j, 0.0);
  return p;
}

// ------------------------------------------------------------------
// Clock-and-shift matrices and the representation map, the oracle that
// everything above is checked against.
// ------------------------------------------------------------------

inline CMatrix weyl_matrix_u(const WeylAlgebra& a) {
  int n = a.order();
  CMatrix u(n, n);
  for (int m = 0; m < n; ++m) u((m + n - 1) % n, m) = 1.0;
  return u;
}

inline CMatrix weyl_matrix_v(const WeylAlgebra& a) {
  int n = a.order();
  CMatrix v(n, n);
  for (int m = 0; m < n; ++m) v(m, m) = a.omega_pow(m);
  return v;
}

inline CMatrix weyl_represent(const WeylElement& x) {
  const WeylAlgebra& a = x.algebra();
  int n = a.order();
  CMatrix u = weyl_matrix_u(a), v = weyl_matrix_v(a);
  std::vector<CMatrix> upow(n, CMatrix::identity(n)), vpow(n, CMatrix::identity(n));
  for (int i = 1; i < n; ++i) {
    upow[i] = upow[i - 1] * u;
    vpow[i] = vpow[i - 1] * v;
  }
  CMatrix out(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      std::complex<double> c = x.coefficient(j, k);
      if (c == std::complex<double>{}) continue;
      out += upow[j] * vpow[k] * (c * a.tau_pow(-(long long)j * k));
    }
  return out;
}

// ------------------------------------------------------------------
// Finite Fourier element.  The canonical transform (matrix entries
// omega^(jk)/sqrt(n)) conjugates the position family into the momentum
// family; its R(j,k) coefficients are recovered through the trace
// pairing tr(R^+ Z)/n.  The printed closed-form coefficient sum is
// kept alongside because it only reproduces the conjugator at n = 2.
// ------------------------------------------------------------------

inline CMatrix fourier_matrix(const WeylAlgebra& a) {
  int n = a.order();
  CMatrix z(n, n);
  double s = 1.0 / std::sqrt(double(n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) z(j, k) = a.omega_pow((long long)j * k) * s;
  return z;
}

inline WeylElement element_from_matrix(const WeylAlgebra& a, const CMatrix& m) {
  int n = a.order();
  if (int(m.rows()) != n || int(m.cols()) != n)
    throw std::invalid_argument("matrix size does not fit the weyl order");
  WeylElement out(a);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      CMatrix r = weyl_represent(WeylElement::basis(a, j, k));
      out.at(j, k) = (r.adjoint() * m).trace() / double(n);
    }
  return out;
}

inline WeylElement fourier_element(const WeylAlgebra& a) {
  return element_from_matrix(a, fourier_matrix(a));
}

// the coefficient formula as printed: (1/sqrt(n^3)) sum_{ijk}
// omega^(j(i-k)) R(j-i, k); agrees with the conjugator only at n = 2
inline WeylElement fourier_element_printed(const WeylAlgebra& a) {
  int n = a.order();
  WeylElement z(a);
  double s = 1.0 / std::sqrt(double(n) * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        int jj = ((j - i) % n + n) % n;
        z.at(jj, k) += a.omega_pow((long long)j * (i - k)) * s;
      }
  return z;
}

}  // namespace clifflab
