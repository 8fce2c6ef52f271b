#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Outcome {
  int code;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string cmd = std::string(CURVEDWAVE_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("spectrum --N-max 3").code == 0);
  CHECK(run("spectrum").code == 2);
  CHECK(run("spectrum --N-max 3 --kappa -1").code == 2);
  CHECK(run("spectrum --N-max x").code == 2);
  CHECK(run("spectrum --N-max 3 --bogus").code == 2);
  CHECK(run("plot").code == 2);
  CHECK(run("spectrum --N-max 3 --format xml").code == 2);
  CHECK(run("limit --n 20 --r-max 100").code == 2);
  CHECK(run("verify nonsense").code == 2);
  CHECK(run("verify orthogonality").code == 0);
  CHECK(run("--help").code == 0);
}

TEST_CASE("payload format") {
  const auto r = run("spectrum --N-max 1");
  CHECK(r.out == "N,n,n_r,L,type,energy_over_kappa,degeneracy_of_N,energy\n"
                 "0,0,0,0,I,0,1,0\n"
                 "1,1,0,0,II,3,4,3\n"
                 "1,0,0,1,I,3,4,3\n");
  CHECK(r.out.find('\r') == std::string::npos);
  const auto p = run("polynomials --n 2 --L 0,1 --format json");
  CHECK(p.code == 0);
  CHECK(p.out.find("\"coeffs\"") != std::string::npos);
}

TEST_CASE("files are byte-identical across runs") {
  for (const std::string args : {"spectrum --N-max 6 --kappa 2.5", "polynomials",
                                 "polynomials --format json", "limit --L 3"}) {
    REQUIRE(run(args + " --out run_a.out").code == 0);
    REQUIRE(run(args + " --out run_b.out").code == 0);
    const auto a = slurp("run_a.out");
    CHECK_FALSE(a.empty());
    CHECK(a == slurp("run_b.out"));
    CHECK(a == run(args).out);
  }
  std::remove("run_a.out");
  std::remove("run_b.out");
}
