#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "mucb/cli/commands.hpp"
#include "mucb/cli/config.hpp"
#include "mucb/cli/csv.hpp"

using namespace mucb::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("mucb_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("format_double is the shortest round-trip representation") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1e-300) == "1e-300");
  CHECK(format_optional(std::nullopt) == "NA");
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> d(-1e6, 1e6);
  for (int i = 0; i < 10000; ++i) {
    const double x = d(gen) * std::pow(10.0, static_cast<int>(gen() % 40) - 20);
    REQUIRE(std::stod(format_double(x)) == x);
  }
}

TEST_CASE("list parsing") {
  CHECK(parse_double_list("means", "1.0, 0.5") == std::vector<double>{1.0, 0.5});
  CHECK(parse_uint_list("ns", "5,10,20") == std::vector<std::uint64_t>{5, 10, 20});
  CHECK_THROWS_AS(parse_double_list("means", "1.0,,2"), ConfigError);
  CHECK_THROWS_AS(parse_double_list("means", "abc"), ConfigError);
  CHECK_THROWS_AS(parse_uint_list("ns", "5,-1"), ConfigError);
  CHECK_THROWS_AS(parse_uint_list("ns", ""), ConfigError);
}

TEST_CASE("run writes both CSVs deterministically") {
  const auto dir1 = scratch_dir("run1"), dir2 = scratch_dir("run2");
  const std::vector<std::string> base{"run", "--means", "1.0,0.5", "--alpha", "4.5", "--horizon", "5000",
                                      "--runs", "20", "--seed", "42"};
  auto a1 = base, a2 = base;
  a1.insert(a1.end(), {"--out-dir", dir1.string()});
  a2.insert(a2.end(), {"--out-dir", dir2.string()});
  REQUIRE(invoke(a1).code == 0);
  setenv("MUCB_THREADS", "3", 1);
  REQUIRE(invoke(a2).code == 0);
  unsetenv("MUCB_THREADS");

  const std::string regret = slurp(dir1 / "regret.csv");
  const std::string anomalies = slurp(dir1 / "anomalies.csv");
  CHECK(regret == slurp(dir2 / "regret.csv"));
  CHECK(anomalies == slurp(dir2 / "anomalies.csv"));

  const auto rl = lines_of(regret);
  REQUIRE(rl.size() == 1 + 7);  // 10, 32, 100, 316, 1000, 3162, 5000
  CHECK(rl[0] == "t,mean_regret,stderr,theorem1_bound,policy");
  CHECK(rl[1].rfind("10,", 0) == 0);
  CHECK(rl[7].rfind("5000,", 0) == 0);
  CHECK(rl[7].substr(rl[7].size() - 5) == ",mucb");
  CHECK(regret.find('\r') == std::string::npos);

  const auto al = lines_of(anomalies);
  CHECK(al[0] == "t,arm,anomaly_type,frequency,stderr,envelope");
  CHECK(al.size() == 1 + 7 * 2);
}

TEST_CASE("config errors exit with code 2 and name the key") {
  const auto dir = scratch_dir("errors");
  auto r = invoke({"run", "--means", "1.0,0.5", "--alpha", "4", "--check-theorem", "--out-dir", dir.string()});
  CHECK(r.code == kExitConfig);
  CHECK(r.err.find("alpha > 4") != std::string::npos);

  r = invoke({"run", "--means", "1.0", "--out-dir", dir.string()});
  CHECK(r.code == kExitConfig);
  CHECK(r.err.find("means") != std::string::npos);

  r = invoke({"run", "--means", "1.0,0.5", "--bogus", "3"});
  CHECK(r.code == kExitConfig);
  CHECK(r.err.find("bogus") != std::string::npos);

  r = invoke({"run", "--means", "1.0,0.5", "--policy", "thompson"});
  CHECK(r.code == kExitConfig);
  CHECK(r.err.find("policy") != std::string::npos);

  r = invoke({"run", "--alpha", "4.5"});
  CHECK(r.code == kExitConfig);
  CHECK(r.err.find("means") != std::string::npos);

  r = invoke({"run", "--means", "1.0,0.5", "--alpha", "abc"});
  CHECK(r.code == kExitConfig);
  CHECK(r.err.find("alpha") != std::string::npos);

  CHECK(invoke({}).code == kExitConfig);
  CHECK(invoke({"frobnicate"}).code == kExitConfig);
  CHECK(fs::is_empty(dir));
}

TEST_CASE("theorem column is NA without the hypothesis, present with it") {
  const auto dir = scratch_dir("na");
  REQUIRE(invoke({"run", "--means", "1,0.5", "--alpha", "2", "--horizon", "100", "--runs", "2", "--out-dir",
                  dir.string()})
              .code == 0);
  const auto rl = lines_of(slurp(dir / "regret.csv"));
  CHECK(rl[1].find(",NA,mucb") != std::string::npos);
}

TEST_CASE("config file supplies keys; flags take precedence") {
  const auto dir = scratch_dir("config");
  const auto cfg = dir / "exp.cfg";
  {
    std::ofstream out(cfg);
    out << "# experiment\nmeans = 1.0,0.5\nalpha=4.5\nhorizon = 1000\nruns = 5\nseed = 7\n"
        << "checkpoints = 100,1000\ncheck-theorem = true\n";
  }
  const auto out1 = dir / "a", out2 = dir / "b";
  REQUIRE(invoke({"run", "--config", cfg.string(), "--out-dir", out1.string()}).code == 0);
  REQUIRE(invoke({"run", "--means", "1.0,0.5", "--alpha", "4.5", "--horizon", "1000", "--runs", "5", "--seed",
                  "7", "--checkpoints", "100,1000", "--out-dir", out2.string()})
              .code == 0);
  CHECK(slurp(out1 / "regret.csv") == slurp(out2 / "regret.csv"));

  const auto out3 = dir / "c";
  REQUIRE(invoke({"run", "--config", cfg.string(), "--seed", "8", "--out-dir", out3.string()}).code == 0);
  CHECK(slurp(out3 / "regret.csv") != slurp(out1 / "regret.csv"));

  const auto bad = dir / "bad.cfg";
  {
    std::ofstream out(bad);
    out << "means = 1.0,0.5\nhorizn = 10\n";
  }
  const auto r = invoke({"run", "--config", bad.string()});
  CHECK(r.code == kExitConfig);
  CHECK(r.err.find("horizn") != std::string::npos);

  CHECK(invoke({"run", "--config", (dir / "missing.cfg").string()}).code == kExitConfig);
}

TEST_CASE("unwritable output exits with code 3") {
  const auto dir = scratch_dir("io");
  const auto blocker = dir / "file";
  std::ofstream(blocker) << "x";
  const auto r = invoke({"run", "--means", "1,0.5", "--horizon", "50", "--runs", "1", "--out-dir",
                         (blocker / "sub").string()});
  CHECK(r.code == kExitIo);
}

TEST_CASE("ldi defaults: nine rows, every dominance check holds") {
  const auto dir = scratch_dir("ldi");
  REQUIRE(invoke({"ldi", "--out-dir", dir.string(), "--mc-samples", "20000"}).code == 0);
  const auto rows = lines_of(slurp(dir / "ldi.csv"));
  REQUIRE(rows.size() == 10);
  CHECK(rows[0] == "n,beta,exact_tail,chernoff_bound,mc_estimate,mc_stderr,minorant,rate_value");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::vector<double> v;
    std::stringstream ss(rows[i]);
    for (std::string cell; std::getline(ss, cell, ',');) v.push_back(std::stod(cell));
    REQUIRE(v.size() == 8);
    CHECK(v[2] <= v[3]);
    CHECK(v[6] <= v[7]);
  }
}

TEST_CASE("ldi row at the mean has zero rate and a trivial bound") {
  const auto dir = scratch_dir("ldi_mean");
  REQUIRE(invoke({"ldi", "--out-dir", dir.string(), "--ns", "4", "--betas", "1", "--mc-samples", "100"}).code == 0);
  const auto rows = lines_of(slurp(dir / "ldi.csv"));
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].rfind("4,1,", 0) == 0);
  CHECK(rows[1].find(",1,") != std::string::npos);
  CHECK(rows[1].substr(rows[1].size() - 4) == ",0,0");
}

TEST_CASE("malformed ldi grid exits with code 2") {
  CHECK(invoke({"ldi", "--ns", "5,x"}).code == kExitConfig);
  CHECK(invoke({"ldi", "--betas", "-1"}).code == kExitConfig);
  CHECK(invoke({"ldi", "--ns", "0"}).code == kExitConfig);
  CHECK(invoke({"ldi", "--rate", "0"}).code == kExitConfig);
}

TEST_CASE("compare writes both policies sorted by (policy, t)") {
  const auto dir = scratch_dir("compare");
  REQUIRE(invoke({"compare", "--means", "1,0.5", "--horizon", "3000", "--runs", "10", "--out-dir", dir.string()})
              .code == 0);
  const auto rows = lines_of(slurp(dir / "compare.csv"));
  REQUIRE(rows.size() == 1 + 2 * 6);
  CHECK(rows[0] == "t,mean_regret,stderr,theorem1_bound,policy");
  for (std::size_t i = 1; i <= 6; ++i) CHECK(rows[i].find(",mucb") != std::string::npos);
  for (std::size_t i = 7; i <= 12; ++i) {
    CHECK(rows[i].find(",ucb1") != std::string::npos);
    CHECK(rows[i].find(",NA,") != std::string::npos);
  }
  CHECK(invoke({"compare", "--means", "1,0.5", "--policy", "ucb1"}).code == kExitConfig);
}

TEST_CASE("binary exit codes") {
  const std::string bin = MUCB_BINARY;
  CHECK(WEXITSTATUS(std::system((bin + " run --means 1.0 >/dev/null 2>&1").c_str())) == 2);
  CHECK(WEXITSTATUS(std::system((bin + " --help >/dev/null 2>&1").c_str())) == 0);
}
