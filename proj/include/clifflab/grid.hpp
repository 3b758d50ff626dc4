#pragma once
#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "clifflab/algebra.hpp"

namespace clifflab {

// ------------------------------------------------------------------
// Uniform multivector fields in one to three dimensions.  Stencils are
// second order in the interior; clamped boundaries fall back to
// one-sided differences and every numerical claim downstream is made
// on interior sites only.
// ------------------------------------------------------------------

class FieldGrid {
 public:
  enum class Boundary { periodic, clamped };

  FieldGrid(const Algebra& a, int dim, std::array<int, 3> extent, double spacing,
            Boundary bc = Boundary::clamped, std::array<double, 3> origin = {})
      : alg_(a), dim_(dim), extent_(extent), h_(spacing), bc_(bc), origin_(origin) {
    if (dim < 1 || dim > 3) throw std::invalid_argument("grid dimension must be 1..3");
    if (spacing <= 0) throw std::invalid_argument("grid spacing must be positive");
    for (int ax = 0; ax < 3; ++ax) {
      if (ax < dim && extent_[ax] < 3)
        throw std::invalid_argument("grid needs at least 3 sites per used axis");
      if (ax >= dim) extent_[ax] = 1;
    }
    sites_.assign(count(), Mv(alg_));
  }

  static FieldGrid line(const Algebra& a, int nx, double x0, double spacing,
                        Boundary bc = Boundary::clamped) {
    return FieldGrid(a, 1, {nx, 1, 1}, spacing, bc, {x0, 0, 0});
  }

  const Algebra& algebra() const { return alg_; }
  int dim() const { return dim_; }
  int extent(int axis) const { return extent_[axis]; }
  double spacing() const { return h_; }
  Boundary boundary() const { return bc_; }
  double position(int axis, int index) const { return origin_[axis] + h_ * index; }

  std::size_t count() const {
    return std::size_t(extent_[0]) * extent_[1] * extent_[2];
  }
  std::size_t index(int i, int j = 0, int k = 0) const {
    return (std::size_t(k) * extent_[1] + j) * extent_[0] + i;
  }

  Mv& site(int i, int j = 0, int k = 0) { return sites_[index(i, j, k)]; }
  const Mv& site(int i, int j = 0, int k = 0) const { return sites_[index(i, j, k)]; }
  Mv& flat(std::size_t n) { return sites_[n]; }
  const Mv& flat(std::size_t n) const { return sites_[n]; }

  std::array<int, 3> coords(std::size_t n) const {
    int i = int(n % extent_[0]);
    int j = int((n / extent_[0]) % extent_[1]);
    int k = int(n / (std::size_t(extent_[0]) * extent_[1]));
    return {i, j, k};
  }

  // away from every clamped face; periodic grids have no faces
  bool interior(std::size_t n) const {
    if (bc_ == Boundary::periodic) return true;
    auto c = coords(n);
    for (int ax = 0; ax < dim_; ++ax)
      if (c[ax] == 0 || c[ax] == extent_[ax] - 1) return false;
    return true;
  }

  FieldGrid central_diff(int axis) const {
    require_axis(axis);
    FieldGrid out = like();
    int n = extent_[axis];
    for (std::size_t s = 0; s < count(); ++s) {
      auto c = coords(s);
      int i = c[axis];
      if (bc_ == Boundary::periodic) {
        out.sites_[s] = (neighbor(c, axis, (i + 1) % n) -
                         neighbor(c, axis, (i + n - 1) % n)) *
                        (0.5 / h_);
      } else if (i == 0) {
        out.sites_[s] = (neighbor(c, axis, 1) - sites_[s]) * (1.0 / h_);
      } else if (i == n - 1) {
        out.sites_[s] = (sites_[s] - neighbor(c, axis, n - 2)) * (1.0 / h_);
      } else {
        out.sites_[s] = (neighbor(c, axis, i + 1) - neighbor(c, axis, i - 1)) *
                        (0.5 / h_);
      }
    }
    return out;
  }

  FieldGrid laplacian() const {
    FieldGrid out = like();
    for (std::size_t s = 0; s < count(); ++s) {
      auto c = coords(s);
      Mv acc(alg_);
      bool defined = true;
      for (int ax = 0; ax < dim_; ++ax) {
        int n = extent_[ax], i = c[ax];
        if (bc_ == Boundary::clamped && (i == 0 || i == n - 1)) {
          defined = false;
          break;
        }
        acc += (neighbor(c, ax, (i + 1) % n) + neighbor(c, ax, (i + n - 1) % n) -
                sites_[s] * 2.0) *
               (1.0 / (h_ * h_));
      }
      if (defined) out.sites_[s] = acc;
    }
    return out;
  }

  double max_norm() const {
    double m = 0;
    for (const auto& v : sites_) m = std::max(m, v.norm());
    return m;
  }

  double interior_max_norm() const {
    double m = 0;
    for (std::size_t s = 0; s < count(); ++s)
      if (interior(s)) m = std::max(m, sites_[s].norm());
    return m;
  }

  FieldGrid like() const {
    return FieldGrid(alg_, dim_, extent_, h_, bc_, origin_);
  }

 private:
  void require_axis(int axis) const {
    if (axis < 0 || axis >= dim_) throw std::invalid_argument("axis out of range");
  }
  Mv neighbor(std::array<int, 3> c, int axis, int replace) const {
    c[axis] = replace;
    return sites_[index(c[0], c[1], c[2])];
  }

  Algebra alg_;
  int dim_;
  std::array<int, 3> extent_;
  double h_;
  Boundary bc_;
  std::array<double, 3> origin_;
  std::vector<Mv> sites_;
};

// D f = sum_j e_j (d_j f): the square of this operator is the
// metric-weighted Laplacian, which the tests pin down per signature
inline FieldGrid dirac_left(const FieldGrid& f, const std::vector<int>& gens) {
  if (int(gens.size()) != f.dim())
    throw std::invalid_argument("dirac operator needs one generator per axis");
  FieldGrid out = f.like();
  for (int ax = 0; ax < f.dim(); ++ax) {
    FieldGrid d = f.central_diff(ax);
    Mv e = Mv::generator(f.algebra(), gens[ax]);
    for (std::size_t s = 0; s < out.count(); ++s) out.flat(s) += e * d.flat(s);
  }
  return out;
}

// f <-D = sum_j (d_j f) e_j
inline FieldGrid dirac_right(const FieldGrid& f, const std::vector<int>& gens) {
  if (int(gens.size()) != f.dim())
    throw std::invalid_argument("dirac operator needs one generator per axis");
  FieldGrid out = f.like();
  for (int ax = 0; ax < f.dim(); ++ax) {
    FieldGrid d = f.central_diff(ax);
    Mv e = Mv::generator(f.algebra(), gens[ax]);
    for (std::size_t s = 0; s < out.count(); ++s) out.flat(s) += d.flat(s) * e;
  }
  return out;
}

}  // namespace clifflab
