// End-to-end checks of the cliff binary: exit codes, output formats,
// and byte-for-byte reproducibility.  CLIFF_BINARY is injected by the
// build so the test always drives the freshly built tool.
#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

int run(const std::string& args) {
  std::string cmd = std::string(CLIFF_BINARY) + " " + args;
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("verify emits the json report schema") {
  REQUIRE(run("verify --suite hopf --seed 42 --format json"
              " --output cliffcli_hopf.json") == 0);
  json j = json::parse(slurp("cliffcli_hopf.json"));
  REQUIRE(j["suite"] == "hopf");
  REQUIRE(j["seed"] == 42);
  REQUIRE(j["version"] == "0.1.0");
  REQUIRE(j["checks"].is_array());
  REQUIRE(!j["checks"].empty());
  for (const auto& c : j["checks"]) {
    REQUIRE(c.contains("name"));
    REQUIRE(c["residual"].is_number());
    REQUIRE(c["tolerance"].is_number());
    REQUIRE(c["pass"] == true);
  }
}

TEST_CASE("verify covers every suite and honors the weyl order flag") {
  REQUIRE(run("verify --suite all --seed 7 --output cliffcli_all.txt") == 0);
  std::string text = slurp("cliffcli_all.txt");
  REQUIRE(text.find("all checks pass") != std::string::npos);
  for (const char* suite : {"groupoid", "rotors", "kcalculus", "hopf",
                            "chirality", "twistor", "bohm", "expectation",
                            "weyl"})
    REQUIRE(text.find(std::string("suite ") + suite) != std::string::npos);

  REQUIRE(run("verify --suite weyl --n 8 --format json"
              " --output cliffcli_weyl8.json") == 0);
  json j = json::parse(slurp("cliffcli_weyl8.json"));
  for (const auto& c : j["checks"])
    REQUIRE(c["name"].get<std::string>().find("(n = 8)") !=
            std::string::npos);
}

TEST_CASE("output bytes depend only on the seed and flags") {
  REQUIRE(run("emit lightcone-samples --count 40 --seed 9"
              " --output cliffcli_a.csv") == 0);
  REQUIRE(run("emit lightcone-samples --count 40 --seed 9"
              " --output cliffcli_b.csv") == 0);
  REQUIRE(slurp("cliffcli_a.csv") == slurp("cliffcli_b.csv"));

  REQUIRE(run("emit lightcone-samples --count 40 --seed 10"
              " --output cliffcli_c.csv") == 0);
  REQUIRE(slurp("cliffcli_a.csv") != slurp("cliffcli_c.csv"));

  REQUIRE(run("verify --suite rotors --seed 5 --format csv"
              " --output cliffcli_r1.csv") == 0);
  REQUIRE(run("verify --suite rotors --seed 5 --format csv"
              " --output cliffcli_r2.csv") == 0);
  REQUIRE(slurp("cliffcli_r1.csv") == slurp("cliffcli_r2.csv"));
}

TEST_CASE("csv output is comma separated with lf endings and dot decimals") {
  REQUIRE(run("emit lightcone-samples --count 5 --seed 3"
              " --output cliffcli_shape.csv") == 0);
  std::string text = slurp("cliffcli_shape.csv");
  REQUIRE(text.find('\r') == std::string::npos);
  REQUIRE(!text.empty());
  REQUIRE(text.back() == '\n');

  std::istringstream lines(text);
  std::string line;
  REQUIRE(std::getline(lines, line));
  REQUIRE(line == "t,x,y,z,null_residual");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    std::istringstream fields(line);
    std::string field;
    int cols = 0;
    while (std::getline(fields, field, ',')) {
      ++cols;
      std::size_t used = 0;
      (void)std::stod(field, &used);
      REQUIRE(used == field.size());  // plain numbers, dot decimal point
    }
    REQUIRE(cols == 5);
  }
  REQUIRE(rows == 5);
}

TEST_CASE("two-generator tables carry the movement annotation") {
  REQUIRE(run("table --algebra 0,2 --output cliffcli_t02.txt") == 0);
  std::string quat = slurp("cliffcli_t02.txt");
  REQUIRE(quat.find("[P0 P1]") != std::string::npos);
  REQUIRE(quat.find("[P1 P2]") != std::string::npos);
  REQUIRE(quat.find("e12") != std::string::npos);

  REQUIRE(run("table --algebra 1,1 --output cliffcli_t11.txt") == 0);
  std::string st = slurp("cliffcli_t11.txt");
  REQUIRE(st.find("[P0 T]") != std::string::npos);
  REQUIRE(st.find("[P T]") != std::string::npos);

  REQUIRE(run("table --algebra pauli --output cliffcli_t3.txt") == 0);
  REQUIRE(slurp("cliffcli_t3.txt").find("[P0") == std::string::npos);
}

TEST_CASE("oversized tables are refused with guidance") {
  REQUIRE(run("table --algebra 2,4 --output cliffcli_big.txt"
              " 2>cliffcli_big.err") == 2);
  REQUIRE(slurp("cliffcli_big.err").find("--generators-only") !=
          std::string::npos);
  REQUIRE(run("table --algebra 2,4 --generators-only"
              " --output cliffcli_gen.txt") == 0);
  std::string gen = slurp("cliffcli_gen.txt");
  REQUIRE(gen.find("e6") != std::string::npos);
  REQUIRE(gen.find("anticommute") != std::string::npos);

  REQUIRE(run("table --algebra weyl:8 --output /dev/null"
              " 2>cliffcli_w8.err") == 2);
  REQUIRE(run("table --algebra weyl:3 --output cliffcli_w3.txt") == 0);
  REQUIRE(slurp("cliffcli_w3.txt").find("R(1,2)") != std::string::npos);
}

TEST_CASE("usage and io failures use the documented exit codes") {
  REQUIRE(run("verify --suite nosuch >/dev/null 2>&1") == 2);
  REQUIRE(run("emit nosuch-dataset >/dev/null 2>&1") == 2);
  REQUIRE(run("table --algebra zorp >/dev/null 2>&1") == 2);
  REQUIRE(run("table --algebra weyl:99 >/dev/null 2>&1") == 2);
  REQUIRE(run("emit weyl-points --n 1 >/dev/null 2>&1") == 2);
  REQUIRE(run(">/dev/null 2>&1") == 2);  // missing subcommand
  REQUIRE(run("emit weyl-points --output /nonexistent-dir/x.csv"
              " 2>/dev/null") == 3);
  REQUIRE(run("--help >/dev/null") == 0);
}
