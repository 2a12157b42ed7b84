#include <doctest.h>

#include <array>
#include <sstream>
#include <vector>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

// Parses "keep,re,im,residual" rows.
std::vector<std::array<double, 4>> parse_rows(const std::string& csv) {
  std::vector<std::array<double, 4>> rows;
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::array<double, 4> r{};
    std::istringstream ls(line);
    std::string cell;
    for (double& v : r) {
      std::getline(ls, cell, ',');
      v = std::stod(cell);
    }
    rows.push_back(r);
  }
  return rows;
}

void check_sweep_csv(const std::string& csv, int levels) {
  REQUIRE(csv.rfind("keep,re,im,residual\n", 0) == 0);
  const auto rows = parse_rows(csv);
  REQUIRE(rows.size() == static_cast<std::size_t>(levels));
  for (int k = 0; k < levels; ++k) {
    const auto& r = rows[static_cast<std::size_t>(k)];
    CHECK(r[0] == k);
    CHECK(r[1] == 0.0);
    CHECK(r[2] == -(k + 1.0));
    CHECK(r[3] <= 1e-12);
  }
}

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " NCG_CLI_PATH " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST_CASE("commutator JSON") {
  const CliRun r = cli("commutator --N 5 --J 8 --keep 5 --output json");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["top_coefficient"] == nlohmann::json::array({0.0, -6.0}));
}

TEST_CASE("sweep CSV has one row per kept level") {
  const CliRun r = cli("sweep --N 3 --J 6 --output csv");
  CHECK(r.status == 0);
  check_sweep_csv(r.out, 4);
}

TEST_CASE("crosscheck") {
  const CliRun r = cli("crosscheck --keep 1 --grid-M 128 --output json");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["relative_difference"].get<double>() <= 0.01);
  CHECK(j["landau_top"][1].get<double>() == doctest::Approx(-2.0).epsilon(0.01));
}

TEST_CASE("spectrum and landau-gauge exit cleanly") {
  CHECK(cli("spectrum --N 6 --J 4").status == 0);
  CHECK(cli("landau-gauge --keep 0 --grid-M 64 --output csv").status == 0);
}

TEST_CASE("dump-matrix subcommand and flag agree") {
  const CliRun a = cli("dump-matrix --matrix alpha --N 1 --J 1 --output json");
  const CliRun b = cli("--dump-matrix alpha --N 1 --J 1 --output json");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["dim"] == 4);
}

TEST_CASE("environment default output, overridden by the flag") {
  const CliRun env = cli("sweep --N 1 --J 2", "NCG_DEFAULT_OUTPUT=csv");
  CHECK(env.out.rfind("keep,re,im,residual", 0) == 0);
  const CliRun flag = cli("sweep --N 1 --J 2 --output json", "NCG_DEFAULT_OUTPUT=csv");
  CHECK(nlohmann::json::parse(flag.out)["reports"].size() == 2);
}

TEST_CASE("usage errors exit 2, failed checks exit 1 with the report") {
  CHECK(cli("commutator --N 2 --keep 3").status == 2);
  CHECK(cli("commutator --output xml").status == 2);
  CHECK(cli("commutator --bogus").status == 2);
  CHECK(cli("landau-gauge --grid-M 2").status == 2);
  CHECK(cli("commutator --B -1").status == 2);
  const CliRun fail = cli("commutator --N 2 --J 0 --output json");
  CHECK(fail.status == 1);
  CHECK(nlohmann::json::parse(fail.out)["ok"] == false);
}

TEST_CASE("--out writes the file and nothing to stdout") {
  const std::string path = "/tmp/ncg_cli_test_out.csv";
  std::remove(path.c_str());
  const CliRun r = cli("sweep --N 2 --J 3 --output csv --out " + path);
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  FILE* f = std::fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  std::fclose(f);
  std::remove(path.c_str());
}

TEST_CASE("repeated invocations are byte-identical") {
  const std::string args = "sweep --N 4 --J 6 --output json";
  CHECK(cli(args).out == cli(args).out);
  CHECK(cli(args + " --parallel").out == cli(args).out);
}
