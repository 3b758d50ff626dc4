#pragma once
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace clifflab {

// Small dense complex matrix, just enough for representation oracles.
// Not a linear-algebra library: sizes stay at 8x8 or n<=64.
class CMatrix {
public:
  using cd = std::complex<double>;

  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : r_(rows), c_(cols), a_(rows * cols, cd{}) {}

  CMatrix(std::initializer_list<std::initializer_list<cd>> rows) {
    r_ = rows.size();
    c_ = rows.begin()->size();
    a_.reserve(r_ * c_);
    for (const auto& row : rows) {
      if (row.size() != c_) throw std::invalid_argument("ragged matrix literal");
      for (const auto& v : row) a_.push_back(v);
    }
  }

  static CMatrix identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }

  cd& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const cd& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  CMatrix& operator+=(const CMatrix& o) {
    check_shape(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  CMatrix& operator-=(const CMatrix& o) {
    check_shape(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  CMatrix& operator*=(cd s) {
    for (auto& v : a_) v *= s;
    return *this;
  }
  friend CMatrix operator+(CMatrix x, const CMatrix& y) { return x += y; }
  friend CMatrix operator-(CMatrix x, const CMatrix& y) { return x -= y; }
  friend CMatrix operator*(CMatrix x, cd s) { return x *= s; }
  friend CMatrix operator*(cd s, CMatrix x) { return x *= s; }
  CMatrix operator-() const { return *this * cd{-1.0}; }

  friend CMatrix operator*(const CMatrix& x, const CMatrix& y) {
    if (x.c_ != y.r_) throw std::invalid_argument("matrix product shape");
    CMatrix z(x.r_, y.c_);
    for (std::size_t i = 0; i < x.r_; ++i)
      for (std::size_t k = 0; k < x.c_; ++k) {
        cd xv = x(i, k);
        if (xv == cd{}) continue;
        for (std::size_t j = 0; j < y.c_; ++j) z(i, j) += xv * y(k, j);
      }
    return z;
  }

  std::vector<cd> apply(const std::vector<cd>& v) const {
    if (v.size() != c_) throw std::invalid_argument("matrix apply shape");
    std::vector<cd> out(r_, cd{});
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  CMatrix adjoint() const {
    CMatrix m(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
  }

  CMatrix transpose() const {
    CMatrix m(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  CMatrix conj() const {
    CMatrix m = *this;
    for (auto& v : m.a_) v = std::conj(v);
    return m;
  }

  cd trace() const {
    cd t{};
    for (std::size_t i = 0; i < r_ && i < c_; ++i) t += (*this)(i, i);
    return t;
  }

  // Gauss-Jordan with partial pivoting; fine at these sizes
  CMatrix inverse() const {
    if (r_ != c_) throw std::invalid_argument("inverse: square only");
    std::size_t n = r_;
    CMatrix m = *this;
    CMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      for (std::size_t i = col + 1; i < n; ++i)
        if (std::abs(m(i, col)) > std::abs(m(piv, col))) piv = i;
      if (std::abs(m(piv, col)) < 1e-14) throw std::domain_error("inverse: singular matrix");
      if (piv != col) {
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(m(col, j), m(piv, j));
          std::swap(inv(col, j), inv(piv, j));
        }
      }
      cd d = m(col, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(col, j) /= d;
        inv(col, j) /= d;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col) continue;
        cd f = m(i, col);
        if (f == cd{}) continue;
        for (std::size_t j = 0; j < n; ++j) {
          m(i, j) -= f * m(col, j);
          inv(i, j) -= f * inv(col, j);
        }
      }
    }
    return inv;
  }

  friend CMatrix kron(const CMatrix& x, const CMatrix& y) {
    CMatrix z(x.r_ * y.r_, x.c_ * y.c_);
    for (std::size_t i = 0; i < x.r_; ++i)
      for (std::size_t j = 0; j < x.c_; ++j) {
        cd xv = x(i, j);
        if (xv == cd{}) continue;
        for (std::size_t k = 0; k < y.r_; ++k)
          for (std::size_t l = 0; l < y.c_; ++l)
            z(i * y.r_ + k, j * y.c_ + l) = xv * y(k, l);
      }
    return z;
  }

  double max_abs() const {
    double m = 0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
  }

  double frobenius() const {
    double s = 0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
  }

private:
  void check_shape(const CMatrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t r_ = 0, c_ = 0;
  std::vector<cd> a_;
};

inline double max_abs_diff(const CMatrix& x, const CMatrix& y) {
  CMatrix d = x;
  d -= y;
  return d.max_abs();
}

// Pauli matrices, used by several representation oracles
inline CMatrix sigma_x() { return CMatrix{{0.0, 1.0}, {1.0, 0.0}}; }
inline CMatrix sigma_y() {
  using cd = std::complex<double>;
  return CMatrix{{cd{}, cd{0, -1}}, {cd{0, 1}, cd{}}};
}
inline CMatrix sigma_z() { return CMatrix{{1.0, 0.0}, {0.0, -1.0}}; }

}  // namespace clifflab
