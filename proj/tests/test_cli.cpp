#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <string>

#include "deltalim/report.hpp"
#include "doctest.h"

using namespace deltalim;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(DELTALIM_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("resonances subcommand") {
  const auto r = run("resonances --potential square --theta-range -120:-0.1 --max 3");
  REQUIRE(r.code == 0);
  const auto t = report::Table::from_csv(r.out);
  REQUIRE(t.rows.size() == 3);
  const double want[] = {-2.4674011, -22.2066099, -61.6850275};
  for (int i = 0; i < 3; ++i) CHECK(std::abs(t.number(i, "theta") - want[i]) < 1e-7);
  CHECK(report::Table::from_csv(t.to_csv()).to_csv() == r.out);
  CHECK(run("resonances --potential square --theta-range -120:-0.1 --max 3").out == r.out);
}

TEST_CASE("alpha subcommand") {
  const auto r = run("alpha --potential square --theta -2.4674011 --omega 1");
  REQUIRE(r.code == 0);
  const auto t = report::Table::from_csv(r.out);
  CHECK(std::abs(t.number(0, "alpha") - 0.5) < 1e-8);
  CHECK(run("alpha --potential square --theta -1").code == 1);
  const auto e = run("alpha --potential square --theta -2.4674011 --eps 1e-2,1e-3,1e-4");
  REQUIRE(e.code == 0);
  CHECK(std::abs(report::Table::from_csv(e.out).number(0, "alpha_extrapolated") - 0.5) < 1e-6);
}

TEST_CASE("converge subcommand") {
  const auto r = run(
      "converge --potential square --theta -2.4674011 --omega 2 --z 0,1 --eps 1e-1,1e-2,1e-3");
  REQUIRE(r.code == 0);
  const auto t = report::Table::from_csv(r.out);
  REQUIRE(t.rows.size() == 3);
  CHECK(t.number(1, "error_L2") < t.number(0, "error_L2"));
  CHECK(t.number(2, "error_L2") < t.number(1, "error_L2"));
  CHECK(t.rows[0][t.column("reference_kind")] == "robin");
}

TEST_CASE("other subcommands") {
  auto r = run("airy-table --grid -2:2:5");
  REQUIRE(r.code == 0);
  CHECK(report::Table::from_csv(r.out).rows.size() == 5);

  r = run("kernel --kind dirichlet --z 0,1 --x 1 --y 1");
  REQUIRE(r.code == 0);
  CHECK(report::Table::from_csv(r.out).columns.at(2) == "G_re");

  r = run("classify3d --potential square --theta -2.4674011 --omega 1");
  REQUIRE(r.code == 0);
  auto t = report::Table::from_csv(r.out);
  CHECK(t.rows[0][t.column("verdict")] == "resonant");
  r = run("classify3d --potential square --theta -1");
  t = report::Table::from_csv(r.out);
  CHECK(t.rows[0][t.column("verdict")] == "non_resonant");
  CHECK(t.number(0, "alpha") == INFINITY);

  r = run("scan-xi --xi 0,1 --roots 2");
  REQUIRE(r.code == 0);
  t = report::Table::from_csv(r.out);
  REQUIRE(t.rows.size() == 4);
  for (std::size_t i = 0; i < t.rows.size(); ++i) CHECK(t.number(i, "discrepancy") <= 1e-7);
  CHECK(t.number(0, "alpha_per_omega") == 0.5);

  r = run(std::string("resonances --potential ") + DELTALIM_TEST_DATA +
          "/two_step.json --theta-range -80:-0.1 --max 2 --format json");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("\"theta\"") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("kernel --kind dirichlet --z 1,0").code == 2);
  CHECK(run("converge --theta -1 --eps 1e-3,1e-2,1e-1").code == 2);
  CHECK(run("resonances --theta-range 3:1").code == 2);
  CHECK(run("alpha --potential square --theta abc").code == 2);
  CHECK(run("resonances --potential /nonexistent.json").code == 1);
}
