#pragma once
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "clifflab/algebra.hpp"

namespace clifflab {

// ------------------------------------------------------------------
// Extensives: oriented movements [X Y] between named points, with a
// scalar strength.  Swapping the endpoints negates the strength.
// ------------------------------------------------------------------

struct Extensive {
  std::string source;
  std::string target;
  double strength = 1.0;

  // Retraced movement: same span, opposite orientation.  A loop has no
  // orientation, so retracing it changes nothing.
  Extensive reversed() const {
    if (is_loop()) return *this;
    return {target, source, -strength};
  }
  bool is_loop() const { return source == target; }
};

inline Extensive extensive(std::string a, std::string b, double s = 1.0) {
  return {std::move(a), std::move(b), s};
}

// point id -> value of the loop [P P]
using Metric = std::map<std::string, int>;

inline int metric_at(const Metric& g, const std::string& p) {
  auto it = g.find(p);
  if (it == g.end()) throw std::invalid_argument("metric: unassigned point " + p);
  if (it->second != 1 && it->second != -1)
    throw std::invalid_argument("metric: loop values must be +1 or -1");
  return it->second;
}

// Composition via the shared endpoint.  After orientation
// normalization, [X B][B Y] = g_B [X Y].  A pair with no shared point
// has no composite at this level; the incidence convention maps it to
// zero instead and is opt-in.
enum class ComposeMode { groupoid, incidence };

inline std::optional<Extensive> compose(const Extensive& a, const Extensive& b,
                                        const Metric& g,
                                        ComposeMode mode = ComposeMode::groupoid) {
  Extensive x = a, y = b;
  if (x.target != y.source) {
    if (x.target == y.target) {
      y = y.reversed();
    } else if (x.source == y.source) {
      x = x.reversed();
    } else if (x.source == y.target) {
      x = x.reversed();
      y = y.reversed();
    } else {
      if (mode == ComposeMode::incidence) return Extensive{a.source, b.target, 0.0};
      return std::nullopt;  // undefined, deliberately not zero
    }
  }
  double s = x.strength * y.strength * metric_at(g, x.target);
  return Extensive{x.source, y.target, s};
}

// value of an extensive that has closed into a loop
inline double loop_value(const Extensive& a, const Metric& g) {
  if (!a.is_loop()) throw std::invalid_argument("loop_value: not a loop");
  return a.strength * metric_at(g, a.source);
}

// ------------------------------------------------------------------
// build_clifford: movements [P0 P_i] from a common base point become
// the generators e_i.  The composition rule fixes the squares:
//   e_i^2 = [P0 Pi][P0 Pi] = -[P0 Pi][Pi P0] = -g_Pi [P0 P0] = -g_Pi g_P0
// ------------------------------------------------------------------

struct CliffordRealization {
  Algebra algebra;
  std::vector<Extensive> generators;  // generators[i] maps to e_i
  std::string base;                   // the shared source point
};

inline CliffordRealization build_clifford(const std::vector<Extensive>& gens,
                                          const Metric& g,
                                          std::vector<std::string> labels = {}) {
  if (gens.empty()) throw std::invalid_argument("build_clifford: no generators");
  const std::string& base = gens[0].source;
  std::vector<int> squares;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].source != base)
      throw std::invalid_argument("build_clifford: generators must share a source point");
    if (gens[i].strength != 1.0)
      throw std::invalid_argument("build_clifford: generators must be unit movements");
    squares.push_back(-metric_at(g, gens[i].target) * metric_at(g, base));
  }
  if (labels.empty())
    for (std::size_t i = 0; i < gens.size(); ++i) labels.push_back("e" + std::to_string(i + 1));
  return {Algebra(squares, labels), gens, base};
}

// ------------------------------------------------------------------
// Iterants [A, B]: Kauffman's two-sided marks with entrywise sum and
// product.  Operator actions are the shuffle table.
// ------------------------------------------------------------------

struct Iterant {
  double left = 0.0;
  double right = 0.0;

  friend Iterant operator*(const Iterant& x, const Iterant& y) {
    return {x.left * y.left, x.right * y.right};
  }
  friend Iterant operator+(const Iterant& x, const Iterant& y) {
    return {x.left + y.left, x.right + y.right};
  }
  friend Iterant operator-(const Iterant& x, const Iterant& y) {
    return {x.left - y.left, x.right - y.right};
  }
  friend bool operator==(const Iterant& x, const Iterant& y) {
    return x.left == y.left && x.right == y.right;
  }
};

inline Iterant vacuum(double a = 1.0) { return {a, 0.0}; }
inline Iterant plenum(double b = 1.0) { return {0.0, b}; }

enum class IterantOp { annihilate, create, sigma_x, sigma_z, momentum, copy_inside, copy_outside };

// the stated action table; sigma_z is taken verbatim even though
// annihilate - create composes to [B, -A] rather than [A, -B]
inline Iterant apply_operator(IterantOp op, const Iterant& x) {
  switch (op) {
    case IterantOp::annihilate: return {x.right, 0.0};            // a  [A,B] -> [B,0]
    case IterantOp::create: return {0.0, x.left};                 // a+ [A,B] -> [0,A]
    case IterantOp::sigma_x: return {x.right, x.left};            //    [A,B] -> [B,A]
    case IterantOp::sigma_z: return {x.left, -x.right};           //    [A,B] -> [A,-B]
    case IterantOp::momentum: return {0.0, x.right};              // p  [A,B] -> [0,B]
    case IterantOp::copy_inside: return {x.left, x.left};         //    [A,B] -> [A,A]
    case IterantOp::copy_outside: return {x.right, x.right};      //    [A,B] -> [B,B]
  }
  throw std::logic_error("apply_operator: bad op");
}

// ------------------------------------------------------------------
// Bracket-notation product tables (the groupoid view of the small
// algebras).  Cells are signed named elements so renderers can show
// the movement notation next to the Clifford one.
// ------------------------------------------------------------------

struct TableCell {
  int coeff;          // +1 / -1 / 0
  std::string name;   // "1" or a bracket like "[P0 P1]"
};

struct ProcessTable {
  std::vector<std::string> headers;            // element names, row = column order
  std::vector<std::vector<TableCell>> cells;   // cells[r][c] = row * column
};

// Build the closed product table of a list of extensives under the
// groupoid product, evaluating loops to scalars.  Every product must
// land on +-1 or +-(one of the listed elements).
inline ProcessTable process_table(const std::vector<Extensive>& elems, const Metric& g) {
  auto name_of = [](const Extensive& e) { return "[" + e.source + " " + e.target + "]"; };
  ProcessTable t;
  for (const auto& e : elems) t.headers.push_back(name_of(e));
  for (const auto& r : elems) {
    std::vector<TableCell> row;
    for (const auto& c : elems) {
      auto prod = compose(r, c, g);
      if (!prod) throw std::domain_error("process_table: non-composable pair");
      if (prod->is_loop()) {
        double v = loop_value(*prod, g);
        row.push_back({v >= 0 ? 1 : -1, "1"});
        continue;
      }
      bool found = false;
      for (const auto& e : elems) {
        if (prod->source == e.source && prod->target == e.target) {
          row.push_back({prod->strength >= 0 ? 1 : -1, name_of(e)});
          found = true;
        } else if (prod->source == e.target && prod->target == e.source) {
          row.push_back({prod->strength >= 0 ? -1 : 1, name_of(e)});
          found = true;
        }
        if (found) break;
      }
      if (!found) throw std::domain_error("process_table: table does not close");
    }
    t.cells.push_back(std::move(row));
  }
  return t;
}

}  // namespace clifflab
