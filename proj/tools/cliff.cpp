// cliff: multiplication tables, verification suites, and sampled
// datasets from the clifflab headers, in table, json, or csv form.
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "clifflab/verify.hpp"

using nlohmann::json;
using namespace clifflab;

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

// output sink: stdout, or a file opened in binary mode so line
// endings stay LF everywhere
struct Sink {
  std::ofstream file;
  std::ostream* out = &std::cout;
  bool open(const std::string& path) {
    if (path.empty()) return true;
    file.open(path, std::ios::binary);
    if (!file) {
      std::cerr << "cliff: cannot open '" << path << "' for writing\n";
      return false;
    }
    out = &file;
    return true;
  }
  std::ostream& stream() { return *out; }
};

// ------------------------------------------------------------------
// algebra selector: "p,q" or a name, with weyl:n for the finite
// position-momentum system
// ------------------------------------------------------------------

struct Selector {
  std::optional<Algebra> algebra;
  int weyl_n = 0;
  std::string text;
};

std::optional<Selector> parse_selector(const std::string& s) {
  Selector sel;
  sel.text = s;
  if (s == "schrodinger") { sel.algebra = schrodinger_algebra(); return sel; }
  if (s == "pauli") { sel.algebra = pauli_algebra(); return sel; }
  if (s == "dirac") { sel.algebra = dirac_algebra(); return sel; }
  if (s == "conformal") { sel.algebra = conformal_algebra(); return sel; }
  if (s.rfind("weyl:", 0) == 0) {
    try {
      std::size_t used = 0;
      int n = std::stoi(s.substr(5), &used);
      if (used != s.size() - 5 || n < 2 || n > 64) return std::nullopt;
      sel.weyl_n = n;
      return sel;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  auto comma = s.find(',');
  if (comma == std::string::npos) return std::nullopt;
  try {
    std::size_t up = 0, uq = 0;
    int p = std::stoi(s.substr(0, comma), &up);
    int q = std::stoi(s.substr(comma + 1), &uq);
    if (up != comma || uq != s.size() - comma - 1) return std::nullopt;
    if (p < 0 || q < 0 || p + q < 1 || p + q > 16) return std::nullopt;
    sel.algebra = Algebra::pq(p, q);
    return sel;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// ------------------------------------------------------------------
// grid rendering shared by the table and emit subcommands
// ------------------------------------------------------------------

void print_grid(std::ostream& out, const std::string& corner,
                const std::vector<std::string>& heads,
                const std::vector<std::string>& rows,
                const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width(heads.size() + 1, corner.size());
  for (const auto& rh : rows) width[0] = std::max(width[0], rh.size());
  for (std::size_t j = 0; j < heads.size(); ++j) {
    width[j + 1] = std::max(width[j + 1], heads[j].size());
    for (const auto& row : cells)
      width[j + 1] = std::max(width[j + 1], row[j].size());
  }
  auto pad = [&](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size(), ' ');
  };
  out << pad(corner, width[0]);
  for (std::size_t j = 0; j < heads.size(); ++j)
    out << "  " << pad(heads[j], width[j + 1]);
  out << "\n";
  std::size_t total = width[0];
  for (std::size_t j = 0; j < heads.size(); ++j) total += 2 + width[j + 1];
  out << std::string(total, '-') << "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << pad(rows[i], width[0]);
    for (std::size_t j = 0; j < heads.size(); ++j)
      out << "  " << pad(cells[i][j], width[j + 1]);
    out << "\n";
  }
}

void print_csv(std::ostream& out, const std::string& corner,
               const std::vector<std::string>& heads,
               const std::vector<std::string>& rows,
               const std::vector<std::vector<std::string>>& cells) {
  out << corner;
  for (const auto& h : heads) out << "," << h;
  out << "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << rows[i];
    for (const auto& c : cells[i]) out << "," << c;
    out << "\n";
  }
}

std::string signed_blade(const Algebra& a, const Mv& prod) {
  for (unsigned k = 0; k < a.size(); ++k) {
    double c = prod.at(k);
    if (std::abs(c) > 0.5)
      return (c < 0 ? "-" : "") + a.blade_name(k);
  }
  return "0";
}

// ------------------------------------------------------------------
// table subcommand
// ------------------------------------------------------------------

struct MovementAnnotation {
  std::vector<std::string> legend;
  std::vector<std::string> names;  // 1 + the three movements
  std::vector<std::vector<std::string>> cells;  // 4x4 grid
};

// the two-generator signatures have a movement reading: generators are
// the unit movements out of a base point and the bivector closes the
// triangle
std::optional<MovementAnnotation> movement_annotation(const Algebra& a) {
  if (a.dim() != 2) return std::nullopt;
  std::vector<Extensive> elems;
  Metric g;
  if (a.square(0) == -1 && a.square(1) == -1) {
    g = {{"P0", 1}, {"P1", 1}, {"P2", 1}};
    elems = {extensive("P0", "P1"), extensive("P0", "P2"),
             extensive("P1", "P2")};
  } else if (a.square(0) == 1 && a.square(1) == -1) {
    g = {{"P0", 1}, {"P", 1}, {"T", -1}};
    elems = {extensive("P0", "T"), extensive("P0", "P"),
             extensive("P", "T")};
  } else {
    return std::nullopt;
  }
  auto bracket = [](const Extensive& e) {
    return "[" + e.source + " " + e.target + "]";
  };
  MovementAnnotation ann;
  ProcessTable t = process_table(elems, g);
  ann.names = {"1", bracket(elems[0]), bracket(elems[1]), bracket(elems[2])};
  ann.cells.assign(4, std::vector<std::string>(4));
  for (int j = 0; j < 4; ++j) ann.cells[0][j] = ann.names[j];
  for (int i = 0; i < 3; ++i) {
    ann.cells[i + 1][0] = ann.names[i + 1];
    for (int j = 0; j < 3; ++j) {
      const TableCell& c = t.cells[i][j];
      ann.cells[i + 1][j + 1] = (c.coeff < 0 ? "-" : "") + c.name;
    }
  }
  Mv e0 = Mv::generator(a, 0), e1 = Mv::generator(a, 1);
  ann.legend.push_back(a.blade_name(0b01) + " = " + bracket(elems[0]));
  ann.legend.push_back(a.blade_name(0b10) + " = " + bracket(elems[1]));
  // the third movement closes the triangle: its image is the product
  // of the second generator's movement retraced into the first
  Mv third = (a.square(0) == -1) ? e1 * e0 : e0 * e1;
  ann.legend.push_back(bracket(elems[2]) + " = " + signed_blade(a, third));
  return ann;
}

int clifford_table(const Algebra& a, const std::string& format,
                   bool generators_only, std::ostream& out) {
  if (generators_only) {
    std::vector<std::string> rows, heads = {"square"};
    std::vector<std::vector<std::string>> cells;
    for (int i = 0; i < a.dim(); ++i) {
      rows.push_back(a.label(i));
      cells.push_back({a.square(i) > 0 ? "+1" : "-1"});
    }
    double anti = 0;
    for (int i = 0; i < a.dim(); ++i)
      for (int j = i + 1; j < a.dim(); ++j) {
        Mv ei = Mv::generator(a, i), ej = Mv::generator(a, j);
        anti = std::max(anti, (ei * ej + ej * ei).norm());
      }
    if (format == "json") {
      json j;
      j["generators"] = json::array();
      for (int i = 0; i < a.dim(); ++i)
        j["generators"].push_back(
            {{"label", a.label(i)}, {"square", a.square(i)}});
      j["pairs_anticommute"] = anti == 0.0;
      out << j.dump(2) << "\n";
    } else if (format == "csv") {
      print_csv(out, "generator", heads, rows, cells);
    } else {
      out << "algebra on " << a.dim() << " generators\n";
      print_grid(out, "generator", heads, rows, cells);
      out << (anti == 0.0 ? "distinct generators anticommute\n"
                          : "warning: generator pairs fail to anticommute\n");
    }
    return 0;
  }

  if (a.dim() > 4) {
    std::cerr << "cliff: the full table over " << a.size()
              << " blades is too large to print; rerun with"
                 " --generators-only\n";
    return 2;
  }

  std::vector<std::string> names;
  for (unsigned m = 0; m < a.size(); ++m) names.push_back(a.blade_name(m));
  std::vector<std::vector<std::string>> cells(
      a.size(), std::vector<std::string>(a.size()));
  for (unsigned i = 0; i < a.size(); ++i)
    for (unsigned j = 0; j < a.size(); ++j)
      cells[i][j] = signed_blade(a, Mv::basis(a, i) * Mv::basis(a, j));

  auto ann = movement_annotation(a);
  if (format == "json") {
    json j;
    j["blades"] = names;
    j["squares"] = json::array();
    for (int i = 0; i < a.dim(); ++i) j["squares"].push_back(a.square(i));
    j["products"] = cells;
    if (ann) {
      j["movements"] = {{"legend", ann->legend},
                        {"elements", ann->names},
                        {"products", ann->cells}};
    }
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    print_csv(out, "*", names, names, cells);
  } else {
    print_grid(out, "*", names, names, cells);
    if (ann) {
      out << "\nas movements between points:\n";
      std::vector<std::string> heads(ann->names), rows(ann->names);
      print_grid(out, "*", heads, rows, ann->cells);
      out << "with ";
      for (std::size_t i = 0; i < ann->legend.size(); ++i)
        out << ann->legend[i] << (i + 1 < ann->legend.size() ? ", " : "\n");
    }
  }
  return 0;
}

int weyl_table(int n, const std::string& format, bool generators_only,
               std::ostream& out) {
  WeylAlgebra a(n);
  if (generators_only) {
    WeylElement U = weyl_shift(a), V = weyl_clock(a);
    WeylElement one = WeylElement::identity(a);
    WeylElement up = one, vp = one;
    for (int i = 0; i < n; ++i) {
      up = up * U;
      vp = vp * V;
    }
    double braid = (U * V - a.omega() * (V * U)).norm();
    double period = std::max((up - one).norm(), (vp - one).norm());
    if (format == "json") {
      json j = {{"order", n},
                {"shift", "R(1,0)"},
                {"clock", "R(0,1)"},
                {"braiding_residual", braid},
                {"period_residual", period}};
      out << j.dump(2) << "\n";
    } else if (format == "csv") {
      out << "relation,residual\n";
      out << "UV - omega VU," << fmt(braid) << "\n";
      out << "U^n - 1," << fmt((up - one).norm()) << "\n";
      out << "V^n - 1," << fmt((vp - one).norm()) << "\n";
    } else {
      out << "weyl system of order " << n << "\n";
      out << "U = R(1,0) shift, V = R(0,1) clock\n";
      out << "U V = omega V U with omega = exp(2 pi i / " << n
          << "); residual " << fmt(braid) << "\n";
      out << "U^" << n << " = V^" << n << " = 1; residual " << fmt(period)
          << "\n";
    }
    return 0;
  }

  if (n > 4) {
    std::cerr << "cliff: the weyl basis at order " << n << " has " << n * n
              << " elements; rerun with --generators-only\n";
    return 2;
  }

  auto rk = [&](int j, int k) {
    if (j == 0 && k == 0) return std::string("1");
    return "R(" + std::to_string(j) + "," + std::to_string(k) + ")";
  };
  std::vector<std::string> names;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) names.push_back(rk(j, k));
  std::vector<std::vector<std::string>> cells(
      names.size(), std::vector<std::string>(names.size()));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) {
          WeylElement prod =
              WeylElement::basis(a, j, k) * WeylElement::basis(a, l, m);
          int J = (j + l) % n, K = (k + m) % n;
          std::complex<double> c = prod.coefficient(J, K);
          long e = std::lround(std::arg(c) / (std::numbers::pi / n));
          long mod = ((e % (2 * n)) + 2 * n) % (2 * n);
          std::string cell;
          if (mod == 0) cell = rk(J, K);
          else if (mod == n) cell = "-" + rk(J, K);
          else cell = "t^" + std::to_string(mod) + " " + rk(J, K);
          cells[std::size_t(j) * n + k][std::size_t(l) * n + m] = cell;
        }
  if (format == "json") {
    json j = {{"order", n},
              {"tau", "exp(i pi / n)"},
              {"elements", names},
              {"products", cells}};
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    print_csv(out, "*", names, names, cells);
  } else {
    out << "weyl basis products at order " << n << ", t = exp(i pi / " << n
        << ")\n";
    print_grid(out, "*", names, names, cells);
  }
  return 0;
}

// ------------------------------------------------------------------
// verify subcommand
// ------------------------------------------------------------------

int run_verify(const std::string& suite, std::uint64_t seed, int weyl_n,
               const std::string& format, std::ostream& out) {
  VerifyOptions opt;
  opt.seed = seed;
  opt.weyl_n = weyl_n;
  std::vector<SuiteReport> reports;
  try {
    reports = run_requested(suite, opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "cliff: " << e.what() << "\n";
    return 2;
  }

  bool ok = true;
  for (const auto& r : reports) ok = ok && r.all_pass();

  if (format == "json") {
    auto to_json = [](const SuiteReport& r) {
      json checks = json::array();
      for (const auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"residual", c.residual},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass}});
      return json{{"suite", r.suite},
                  {"seed", r.seed},
                  {"version", library_version()},
                  {"checks", checks}};
    };
    if (reports.size() == 1) {
      out << to_json(reports[0]).dump(2) << "\n";
    } else {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      out << arr.dump(2) << "\n";
    }
  } else if (format == "csv") {
    out << "suite,check,residual,tolerance,pass\n";
    for (const auto& r : reports)
      for (const auto& c : r.checks)
        out << r.suite << "," << c.name << "," << fmt(c.residual) << ","
            << fmt(c.tolerance) << "," << (c.pass ? "true" : "false") << "\n";
  } else {
    int passed = 0, failed = 0;
    for (const auto& r : reports) {
      out << "suite " << r.suite << "  (seed " << r.seed << ", version "
          << library_version() << ")\n";
      std::size_t w = 0;
      for (const auto& c : r.checks) w = std::max(w, c.name.size());
      for (const auto& c : r.checks) {
        (c.pass ? passed : failed)++;
        out << "  " << (c.pass ? "pass  " : "FAIL  ") << c.name
            << std::string(w - c.name.size(), ' ') << "  residual "
            << fmt(c.residual) << "  tolerance " << fmt(c.tolerance) << "\n";
      }
    }
    out << (failed == 0 ? "all checks pass" : "checks failed") << " ("
        << passed << " passed, " << failed << " failed)\n";
  }
  return ok ? 0 : 1;
}

// ------------------------------------------------------------------
// emit subcommand: sampled datasets in rows-and-columns form
// ------------------------------------------------------------------

struct Dataset {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

Dataset emit_lightcone(int count, std::uint64_t seed) {
  Dataset d;
  d.columns = {"t", "x", "y", "z", "null_residual"};
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    double g0 = rng.uniform(-2, 2), g1 = rng.uniform(-2, 2);
    double g2 = rng.uniform(-2, 2), g3 = rng.uniform(-2, 2);
    auto v = hopf_map(g0, g1, g2, g3);
    double res = v[0] * v[0] - v[1] * v[1] - v[2] * v[2] - v[3] * v[3];
    d.rows.push_back({fmt(v[0]), fmt(v[1]), fmt(v[2]), fmt(v[3]), fmt(res)});
  }
  return d;
}

Dataset emit_bohm_residuals() {
  Dataset d;
  d.columns = {"x", "continuity", "quantum_hj", "commutator"};
  double h = 0.01, dt = h / 10.0, t = 0.3, x0 = -8.0;
  int nx = int(std::round(16.0 / h)) + 1;
  WaveFunction psi = gaussian_packet(1.0, 0.8);
  FieldGrid before = sample_wave(psi, nx, x0, h, t - dt);
  FieldGrid mid = sample_wave(psi, nx, x0, h, t);
  FieldGrid after = sample_wave(psi, nx, x0, h, t + dt);
  PolarField pb = decompose_polar(before), pm = decompose_polar(mid),
             pa = decompose_polar(after);
  auto cont = continuity_residual(pb, pm, pa, 1.0, dt);
  auto qhj = qhj_residual(pb, pm, pa, free_potential(), 1.0, dt);
  FieldGrid lio = liouville_residual(before, mid, after, 1.0, free_potential(),
                                     dt);
  for (int i = 2; i + 2 < nx; ++i)
    d.rows.push_back({fmt(x0 + i * h), fmt(cont[i]), fmt(qhj[i]),
                      fmt(lio.site(i).norm())});
  return d;
}

Dataset emit_quantum_potential(double sigma, double m) {
  Dataset d;
  d.columns = {"x", "Q"};
  double h = 0.01, x0 = -8.0;
  int nx = int(std::round(16.0 / h)) + 1;
  FieldGrid g = sample_wave(gaussian_packet(sigma, 0.0), nx, x0, h, 0.0);
  PolarField p = decompose_polar(g);
  auto q = quantum_potential(p, m);
  for (int i = 2; i + 2 < nx; ++i)
    d.rows.push_back({fmt(x0 + i * h), fmt(q[i])});
  return d;
}

Dataset emit_weyl_points(int n) {
  Dataset d;
  d.columns = {"family", "index", "eigenvalue", "overlap"};
  WeylAlgebra a(n);
  for (int j = 0; j < n; ++j)
    d.rows.push_back(
        {"x-point", std::to_string(j), fmt(a.dx() * j),
         fmt(std::abs(weyl_trace(idempotent_x(a, j) * idempotent_p(a, j))))});
  for (int j = 0; j < n; ++j)
    d.rows.push_back(
        {"p-point", std::to_string(j), fmt(a.dp() * j),
         fmt(std::abs(weyl_trace(idempotent_p(a, j) * idempotent_x(a, j))))});
  return d;
}

int run_emit(const std::string& name, const Dataset& d,
             const std::string& format, std::ostream& out) {
  if (format == "json") {
    json j = {{"dataset", name},
              {"columns", d.columns},
              {"rows", json::array()}};
    for (const auto& row : d.rows) {
      json jr = json::array();
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (d.columns[c] == "family") jr.push_back(row[c]);
        else if (d.columns[c] == "index") jr.push_back(std::stoi(row[c]));
        else jr.push_back(std::stod(row[c]));
      }
      j["rows"].push_back(jr);
    }
    out << j.dump(2) << "\n";
  } else if (format == "table") {
    std::vector<std::string> rows(d.rows.size());
    std::vector<std::vector<std::string>> cells;
    for (std::size_t i = 0; i < d.rows.size(); ++i) {
      rows[i] = std::to_string(i);
      cells.push_back(d.rows[i]);
    }
    print_grid(out, "row", d.columns, rows, cells);
  } else {
    out << d.columns[0];
    for (std::size_t c = 1; c < d.columns.size(); ++c)
      out << "," << d.columns[c];
    out << "\n";
    for (const auto& row : d.rows) {
      out << row[0];
      for (std::size_t c = 1; c < row.size(); ++c) out << "," << row[c];
      out << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clifford algebra tables, verification suites, and datasets"};
  app.require_subcommand(1);
  const std::vector<std::string> formats = {"table", "json", "csv"};

  std::string t_algebra, t_format = "table", t_output;
  bool t_generators = false;
  auto* table = app.add_subcommand(
      "table", "print the multiplication table of an algebra");
  table->add_option("--algebra", t_algebra,
                    "signature p,q or a name: schrodinger, pauli, dirac,"
                    " conformal, weyl:n")
      ->required();
  table->add_option("--format", t_format, "output form")
      ->check(CLI::IsMember(formats));
  table->add_flag("--generators-only", t_generators,
                  "print the generators and their relations instead of the"
                  " full table");
  table->add_option("--output", t_output, "write to a file instead of stdout");

  std::string v_suite, v_format = "table", v_output;
  std::uint64_t v_seed = 1;
  int v_n = 0;
  auto* verify = app.add_subcommand(
      "verify", "run a named residual suite and report every check");
  verify->add_option("--suite", v_suite, "suite name or all")
      ->required()
      ->check(CLI::IsMember({"groupoid", "rotors", "kcalculus", "hopf",
                             "chirality", "twistor", "bohm", "expectation",
                             "weyl", "all"}));
  verify->add_option("--seed", v_seed, "seed for the random draws");
  verify->add_option("--n", v_n,
                     "restrict the weyl sweep to one order (0 sweeps 2..12)");
  verify->add_option("--format", v_format, "output form")
      ->check(CLI::IsMember(formats));
  verify->add_option("--output", v_output,
                     "write to a file instead of stdout");

  std::string e_dataset, e_format = "csv", e_output;
  int e_count = 100, e_n = 8;
  double e_sigma = 1.0, e_mass = 1.0;
  std::uint64_t e_seed = 1;
  auto* emit = app.add_subcommand("emit", "write a sampled dataset");
  emit->add_option("dataset", e_dataset, "which dataset to emit")
      ->required()
      ->check(CLI::IsMember({"lightcone-samples", "bohm-residuals",
                             "quantum-potential-profile", "weyl-points"}));
  emit->add_option("--count", e_count, "rows for lightcone-samples")
      ->check(CLI::Range(1, 1000000));
  emit->add_option("--sigma", e_sigma,
                   "packet width for quantum-potential-profile")
      ->check(CLI::PositiveNumber);
  emit->add_option("--m", e_mass, "mass for quantum-potential-profile")
      ->check(CLI::PositiveNumber);
  emit->add_option("--n", e_n, "order for weyl-points")
      ->check(CLI::Range(2, 64));
  emit->add_option("--seed", e_seed, "seed for the random draws");
  emit->add_option("--format", e_format, "output form")
      ->check(CLI::IsMember(formats));
  emit->add_option("--output", e_output, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (table->parsed()) {
    auto sel = parse_selector(t_algebra);
    if (!sel) {
      std::cerr << "cliff: unrecognized algebra '" << t_algebra
                << "' (expected p,q or schrodinger, pauli, dirac, conformal,"
                   " weyl:n)\n";
      return 2;
    }
    Sink sink;
    if (!sink.open(t_output)) return 3;
    if (sel->weyl_n > 0)
      return weyl_table(sel->weyl_n, t_format, t_generators, sink.stream());
    return clifford_table(*sel->algebra, t_format, t_generators,
                          sink.stream());
  }

  if (verify->parsed()) {
    Sink sink;
    if (!sink.open(v_output)) return 3;
    return run_verify(v_suite, v_seed, v_n, v_format, sink.stream());
  }

  if (emit->parsed()) {
    Sink sink;
    if (!sink.open(e_output)) return 3;
    Dataset d;
    if (e_dataset == "lightcone-samples") d = emit_lightcone(e_count, e_seed);
    else if (e_dataset == "bohm-residuals") d = emit_bohm_residuals();
    else if (e_dataset == "quantum-potential-profile")
      d = emit_quantum_potential(e_sigma, e_mass);
    else d = emit_weyl_points(e_n);
    return run_emit(e_dataset, d, e_format, sink.stream());
  }
  return 2;
}
