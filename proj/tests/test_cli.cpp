#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(TWOALG_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("twoalg_cli_" + name)).string();
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  return nlohmann::json::parse(in);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("gldim of G5") {
    auto r = run("gldim --family green:5");
    CHECK(r.code == 0);
    CHECK(r.out.find("gldim = 5") != std::string::npos);
  }

  TEST_CASE("gldim of KK2") {
    auto r = run("gldim --family kk:2");
    CHECK(r.code == 0);
    CHECK(r.out.find("gldim = 5, loewy = 4") != std::string::npos);
  }

  TEST_CASE("build-algebra writes JSON with a basis") {
    auto path = tmp("build.json");
    auto r = run("build-algebra --family kk:2 --chi 0,1,1 --out " + path);
    CHECK(r.code == 0);
    auto j = read_json(path);
    CHECK(j.contains("basis"));
    CHECK(j["basis"].size() == 12u);
  }

  TEST_CASE("check-family reports transversality failure") {
    auto path = tmp("bad_family.json");
    {
      std::ofstream f(path);
      f << R"({"n": 2, "pairs": [{"V": [["1","0"]], "W": [["1","1"]]}, {"V": [["1","1"]], "W": [["1","0"]]}]})";
    }
    auto r = run("check-family --family " + path);
    CHECK(r.code == 1);
  }

  TEST_CASE("factorize, dcat-verify and curve succeed") {
    CHECK(run("factorize --family green:4").code == 0);
    CHECK(run("factorize --family kk:2 --chi 0,1,1").code == 0);
    CHECK(run("dcat-verify --family 'random:2,1,(1),3'").code == 0);
    CHECK(run("dcat-verify --family 'random:3,2,(2,2),5' --delta 1,-1").code == 0);
    CHECK(run("curve --family 'random:2,3,(1,1,1),42'").code == 0);
    CHECK(run("verify-oracle --family kk:1").code == 0);
  }

  TEST_CASE("bad input exits with 2") {
    CHECK(run("gldim --family nonsense:3").code == 2);
    CHECK(run("gldim --family random:2,1").code == 2);
    CHECK(run("build-algebra --family kk:2 --chi 0,1").code == 2);
    CHECK(run("dcat-verify --family 'random:3,2,(2,1),4'").code == 2);
    CHECK(run("gldim").code == 2);
    CHECK(run("no-such-command").code == 2);
  }

  TEST_CASE("a cutoff that is too small exits with 1") {
    CHECK(run("verify-oracle --family green:5 --cutoff 4").code == 1);
    CHECK(run("verify-oracle --family green:5 --cutoff 2").code == 2);
    CHECK(run("gldim --family kk:3 --cutoff 1").code == 1);
  }

  TEST_CASE("demo is deterministic per seed") {
    auto a = tmp("demo_a.json");
    auto b = tmp("demo_b.json");
    auto c = tmp("demo_c.json");
    CHECK(run("demo --quick --seed 5 --out " + a).code == 0);
    CHECK(run("demo --quick --seed 5 --out " + b).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(run("demo --quick --seed 6 --out " + c).code == 0);
    CHECK(slurp(a) != slurp(c));
  }
}
