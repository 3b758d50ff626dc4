// Builds the two small movement systems, prints their product grids,
// and shows the generated algebras recovering the right signatures.
#include <cstdio>
#include <vector>

#include "clifflab/process.hpp"

using namespace clifflab;

namespace {

void show(const char* heading, const std::vector<Extensive>& elems,
          const Metric& g) {
  std::printf("%s\n", heading);
  ProcessTable t = process_table(elems, g);
  std::printf("%-10s", "*");
  for (const auto& h : t.headers) std::printf("  %-10s", h.c_str());
  std::printf("\n");
  for (std::size_t i = 0; i < t.cells.size(); ++i) {
    std::printf("%-10s", t.headers[i].c_str());
    for (const auto& c : t.cells[i]) {
      std::string s = (c.coeff < 0 ? "-" : "") + c.name;
      std::printf("  %-10s", s.c_str());
    }
    std::printf("\n");
  }
  std::printf("\n");
}

}  // namespace

int main() {
  Metric quat = {{"P0", 1}, {"P1", 1}, {"P2", 1}};
  std::vector<Extensive> qel = {extensive("P0", "P1"), extensive("P0", "P2"),
                                extensive("P1", "P2")};
  show("movements on three equivalent points multiply like quaternions:",
       qel, quat);

  Metric st = {{"P0", 1}, {"P", 1}, {"T", -1}};
  std::vector<Extensive> sel = {extensive("P0", "T"), extensive("P0", "P"),
                                extensive("P", "T")};
  show("giving one point a negative loop value flips the squares:", sel, st);

  auto quat_real = build_clifford({qel[0], qel[1]}, quat);
  auto st_real = build_clifford({sel[0], sel[1]}, st);
  std::printf("generated signatures: ");
  for (int i = 0; i < quat_real.algebra.dim(); ++i)
    std::printf("%s^2 = %+d  ", quat_real.algebra.label(i).c_str(),
                quat_real.algebra.square(i));
  std::printf("| ");
  for (int i = 0; i < st_real.algebra.dim(); ++i)
    std::printf("%s^2 = %+d  ", st_real.algebra.label(i).c_str(),
                st_real.algebra.square(i));
  std::printf("\n");
  return 0;
}
