#include "rebit/cli.hpp"
#include "rebit/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace rebit;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp(const std::string &name) {
  return (std::filesystem::temp_directory_path() / ("rebit_cli_" + name)).string();
}

std::string slurp(const std::string &path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("generate writes parseable state files") {
  for (const std::vector<std::string> &args :
       {std::vector<std::string>{"generate", "bell", "--which", "psi-"}, {"generate", "omega"}, {"generate", "omega_prime"},
        {"generate", "mu", "--s", "+-"}, {"generate", "nu", "--s", "-"}, {"generate", "rho_s", "--s", "++-"}}) {
    const auto r = run(args);
    CHECK(r.code == 0);
    CHECK_NOTHROW(parse_state(r.out));
  }
  CHECK(n_systems_of(parse_state(run({"generate", "rho_s", "--s", "++-"}).out)) == 4);
  CHECK(run({"generate", "mu"}).code == 2);
  CHECK(run({"generate", "tachyon"}).code == 2);
  CHECK(run({"generate", "bell", "--which", "chi"}).code == 2);
}

TEST_CASE("concurrence of omega prime: real 1, complex 0") {
  const std::string path = temp("wp.json");
  REQUIRE(run({"generate", "omega_prime", "--out", path}).code == 0);
  const auto both = run({"concurrence", path});
  REQUIRE(both.code == 0);
  std::istringstream lines(both.out);
  std::string header, cr, c;
  std::getline(lines, header);
  std::getline(lines, cr);
  std::getline(lines, c);
  CHECK(header == "measure,value");
  CHECK(cr.rfind("C_R,", 0) == 0);
  CHECK(std::abs(std::stod(cr.substr(4)) - 1.0) < 1e-12);
  CHECK(c.rfind("C,", 0) == 0);
  CHECK(std::abs(std::stod(c.substr(2))) < 1e-10);
  CHECK(run({"concurrence", path, "--field", "complex"}).out.find("C_R") == std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("concurrence input errors") {
  const std::string complex_path = temp("xi.json");
  {
    std::ofstream f(complex_path);
    f << format_state(xi_state(1));
  }
  CHECK(run({"concurrence", complex_path, "--field", "real"}).code == 2);
  CHECK(run({"concurrence", complex_path}).code == 0);
  const std::string three = temp("mu.json");
  REQUIRE(run({"generate", "mu", "--s", "++", "--out", three}).code == 0);
  const auto r = run({"concurrence", three});
  CHECK(r.code == 2);
  CHECK(r.err.find("two-system") != std::string::npos);
  CHECK(run({"concurrence", "/nonexistent.json"}).code == 2);
  std::filesystem::remove(complex_path);
  std::filesystem::remove(three);
}

TEST_CASE("verify suites exit zero and are deterministic") {
  const auto a = run({"verify", "states", "--n", "3"});
  CHECK(a.code == 0);
  CHECK(a.out.rfind("check,target,computed,tolerance,pass\n", 0) == 0);
  CHECK(a.out.find(",false") == std::string::npos);
  const auto h1 = run({"verify", "hiding", "--n", "3", "--trials", "200", "--seed", "9"});
  const auto h2 = run({"verify", "hiding", "--n", "3", "--trials", "200", "--seed", "9"});
  CHECK(h1.code == 0);
  CHECK(h1.out == h2.out);
  CHECK(run({"verify", "coins"}).code == 0);
  CHECK(run({"verify", "factorization", "--trials", "20"}).code == 0);
  CHECK(run({"verify", "nonsense"}).code == 2);
  CHECK(run({"verify", "states", "--n", "1"}).code == 2);
}

TEST_CASE("monogamy command") {
  const std::string path = temp("mu3.json");
  REQUIRE(run({"generate", "mu", "--s", "++", "--out", path}).code == 0);
  CHECK(run({"monogamy", path}).code == 2);
  const auto r = run({"monogamy", path, "--field", "complex", "--hub", "0"});
  CHECK(r.out.rfind("hub,sum_c2,satisfied\n0,", 0) == 0);
  CHECK(r.code == 0);
  CHECK(run({"monogamy", path, "--field", "complex", "--hub", "7"}).code == 2);
  const auto sweep = run({"monogamy", "--trials", "200"});
  CHECK(sweep.code == 0);
  CHECK(sweep.out.find("haar_violations") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("hide encode, attack and recover") {
  const std::string path = temp("hidden.json");
  REQUIRE(run({"hide", "encode", "--s", "-+-", "--out", path}).code == 0);
  const auto rec = run({"hide", "recover", path});
  CHECK(rec.code == 0);
  CHECK(rec.out == "-+-\n");
  const auto a1 = run({"hide", "attack", path, "--trials", "50", "--seed", "3"});
  const auto a2 = run({"hide", "attack", "--s", "-+-", "--trials", "50", "--seed", "3"});
  CHECK(a1.code == 0);
  CHECK(a1.out == a2.out);
  CHECK(std::count(a1.out.begin(), a1.out.end(), '\n') == 51);
  CHECK(run({"hide", "attack", "--s", "+", "--strategy", "random"}).code == 0);
  CHECK(run({"hide", "attack", "--s", "+", "--strategy", "psychic"}).code == 2);
  CHECK(run({"hide", "attack"}).code == 2);

  const std::string other = temp("notrho.json");
  REQUIRE(run({"generate", "mu", "--s", "++", "--out", other}).code == 0);
  CHECK(run({"hide", "attack", other}).code == 2);
  std::filesystem::remove(path);
  std::filesystem::remove(other);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"hide"}).code == 2);
}

TEST_CASE("--out writes the same bytes as stdout") {
  const std::string path = temp("coins.csv");
  const auto r = run({"verify", "coins", "--n", "4", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(path) == run({"verify", "coins", "--n", "4"}).out);
  std::filesystem::remove(path);
}
