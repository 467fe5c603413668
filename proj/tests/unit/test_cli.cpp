#include <array>
#include <cstdio>
#include <sys/wait.h>

#include "helpers.hpp"

using namespace testing;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  const std::string cmd = std::string(REALMULT_CLI) + " " + args + " 2>/dev/null";
  FILE* p = ::popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze --level 23 --json") {
  auto r = run("analyze --level 23 --json");
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["level"] == 23);
  CHECK(j["schema"] == 1);
}

TEST_CASE("jp on the golden ratio") {
  auto r = run("jp --theta 'poly=-1,-1,1;root=1/1,2/1;coords=0,1' --json");
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["status"] == "periodic");
  CHECK(j["A"] == Json::parse(R"([["0","1"],["1","1"]])"));
  CHECK(AlgebraicReal::parse(j["lambdaA"].get<std::string>()) == golden());
}

TEST_CASE("modsym, classgroup, endo") {
  auto m = run("modsym --level 23 --hecke 2 3 --json");
  CHECK(m.code == 0);
  auto mj = Json::parse(m.out);
  CHECK(mj["genus"] == 2);
  CHECK(mj["orbits"][0]["anosov"] == true);
  CHECK(mj["orbits"][0]["ap"].size() == 2);
  auto c = run("classgroup --disc 12 --json");
  CHECK(c.code == 0);
  auto cj = Json::parse(c.out);
  CHECK(cj["h"] == 1);
  CHECK(cj["hPlus"] == 2);
  CHECK(cj["unitNorm"] == 1);
  auto e = run("endo --theta 'poly=-2,0,1;root=1/1,2/1;coords=0,2'");
  CHECK(e.code == 0);
  auto ej = Json::parse(e.out);
  CHECK(ej["D"] == "32");
  CHECK(ej["f"] == "2");
}

TEST_CASE("exit codes") {
  CHECK(run("analyze --level 0").code == 1);
  CHECK(run("analyze --level 23 --bogus").code == 1);
  CHECK(run("").code == 1);
  CHECK(run("classgroup --disc 7").code == 1);
  CHECK(run("jp --theta nonsense").code == 1);
  CHECK(run("analyze --level 23 --hecke-bound 0").code == 1);
}

TEST_CASE("human-readable output") {
  auto r = run("analyze --level 37");
  CHECK(r.code == 0);
  CHECK(r.out.find("does not apply") != std::string::npos);
}

}
