#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>
#include <vector>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HILBZETA_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

bool has(const Run& r, const std::string& s) { return r.out.find(s) != std::string::npos; }

const std::string data = HILBZETA_TEST_DATA_DIR;

}  // namespace

TEST_CASE("analyze") {
  auto r = run("analyze cusp");
  CHECK(r.status == 0);
  CHECK(has(r, "s=1 δ=1 c=(2) C=2"));
  auto j = run("--json analyze node");
  CHECK(has(j, "\"delta\": 1"));
}

TEST_CASE("zeta") {
  auto r = run("zeta node --q 2");
  CHECK(r.status == 0);
  CHECK(has(r, "1 + (t + t^2)/(1-t)^2"));
  CHECK(has(r, "numerator P=[0,1,1] den_t=2"));
  CHECK(has(r, "series [1, 1, 3, 5"));

  auto l = run("zeta cusp --primes 2,3,5");
  CHECK(l.status == 0);
  CHECK(has(l, "1 + (t + Lt^2)/(1-t)"));
}

TEST_CASE("axes") {
  auto r = run("axes --n 3");
  CHECK(r.status == 0);
  CHECK(has(r, "1 + (t + (L^2+L-2)t^2 + (L^2-2L+1)t^3)/(1-t)^3"));
}

TEST_CASE("verify") {
  CHECK(run("verify axes:3 --q 2 --dmax 3").status == 0);
  CHECK(run("verify node --seed-fault").status == 2);
  CHECK(run("verify").status == 0);
}

TEST_CASE("error codes") {
  CHECK(run("strata axes:3 --dmax 10").status == 3);
  CHECK(run("analyze bogus").status == 1);
  CHECK(run("strata node --q 4").status == 1);
  CHECK(run("degenerate node --weight 1,1").status == 1);
  CHECK(run("zeta node --primes 2,3").status == 1);
  CHECK(run("global --config /nonexistent.json").status == 1);
}

TEST_CASE("json output is deterministic") {
  for (const std::string& args : std::vector<std::string>{"--json strata node --q 3 --dmax 4", "--json zeta axes:3 --primes 2,3,5,7",
                                 "--json verify cusp", "--json degenerate @" + data + "/g34.json"}) {
    CAPTURE(args);
    auto a = run(args);
    auto b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("degenerate and global") {
  auto d = run("degenerate @" + data + "/g34.json");
  CHECK(d.status == 0);
  CHECK(has(d, "δ source=3 monomial=3"));
  auto g = run("global --config " + data + "/curve_node.json");
  CHECK(g.status == 0);
  CHECK(has(g, "1 + ((2L-1)t + (-L^2+L)t^2)/(1-Lt)^2"));
}
