#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "laws/common.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string out_file = "cli_test_stdout.tmp";
  std::string command = std::string(CLI_BIN) + " " + args + " > " + out_file + " 2>/dev/null";
  int status = std::system(command.c_str());
  std::ifstream in(out_file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::remove(out_file.c_str());
  int code = -1;
  if (WIFEXITED(status)) code = WEXITSTATUS(status);
  return {code, buffer.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("cli: landau law end to end with verify round trip") {
  RunResult made = run_cli("law-sym --n 4 --method landau --verify exhaustive --out cli_cert.tmp");
  CHECK(made.exit_code == 0);
  CHECK(made.out.find("outcome=verified") != std::string::npos);

  RunResult verified = run_cli("verify --law cli_cert.tmp --group sym:4 --mode exhaustive");
  CHECK(verified.exit_code == 0);
  CHECK(verified.out.find("outcome=verified") != std::string::npos);

  // the law for Sym(4) is not a law for Sym(5): exit 2 plus a witness
  RunResult failed = run_cli("verify --law cli_cert.tmp --group sym:5 --mode classes");
  CHECK(failed.exit_code == 2);
  CHECK(failed.out.find("counterexample:") != std::string::npos);
  std::remove("cli_cert.tmp");
}

TEST_CASE("cli: div prints the divisibility value") {
  RunResult r = run_cli("div --word aaaaaaaaaaaa --max-n 6");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("5\n", 0) == 0);  // first line is the value

  RunResult both = run_cli("div --word aa --max-n 5 --oracle both");
  CHECK(both.exit_code == 0);
  CHECK(both.out.rfind("3\n", 0) == 0);
  CHECK(both.out.find("subgroup oracle: 3") != std::string::npos);
}

TEST_CASE("cli: byte-identical reruns for identical argv and seed") {
  RunResult a = run_cli("law-sym --n 4 --method random --seed 99 --out cli_a.tmp");
  RunResult b = run_cli("law-sym --n 4 --method random --seed 99 --out cli_b.tmp");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(a.out.find("seed: 99") != std::string::npos);
  CHECK(slurp("cli_a.tmp") == slurp("cli_b.tmp"));
  std::remove("cli_a.tmp");
  std::remove("cli_b.tmp");
}

TEST_CASE("cli: matrix law subcommands") {
  RunResult gl = run_cli("law-gl --n 2 --q 3");
  CHECK(gl.exit_code == 0);
  CHECK(gl.out.find("outcome=verified") != std::string::npos);

  RunResult pgl = run_cli("law-pgl --n 2 --q 3");
  // either verified (exit 0) or a recorded counterexample (exit 2); never
  // silence
  CHECK((pgl.exit_code == 0 || pgl.exit_code == 2));
  CHECK(pgl.out.find("outcome=") != std::string::npos);
}

TEST_CASE("cli: div-profile emits csv") {
  RunResult r = run_cli("div-profile --max-len 3 --max-n 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("length,d_exact_length,d_cumulative,extremal_word\n", 0) == 0);
  CHECK(r.out.find("\n1,2,2,") != std::string::npos);
  CHECK(r.out.find("\n2,3,3,aa") != std::string::npos);
}

TEST_CASE("cli: cayley and classify") {
  RunResult c = run_cli("cayley --degree 3 --gens \"(0 1),(0 1 2)\" --steps 50 --target k:3");
  CHECK(c.exit_code == 0);
  CHECK(c.out.find("order=6") != std::string::npos);
  CHECK(c.out.find("diameter=2") != std::string::npos);
  CHECK(c.out.find("holds=yes") != std::string::npos);

  RunResult k = run_cli("classify --degree 5 --gens \"(0 1),(0 1 2 3 4)\"");
  CHECK(k.exit_code == 0);
  CHECK(k.out.find("label=full_sym") != std::string::npos);
}

TEST_CASE("cli: exp-ineq reports no violations") {
  RunResult r = run_cli("exp-ineq --m-lo 64 --m-hi 300");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("0 violations") != std::string::npos);
}

TEST_CASE("cli: usage errors exit 1") {
  RunResult r = run_cli("div --word xyz!");
  CHECK(r.exit_code == 1);
  RunResult u = run_cli("frobnicate");
  CHECK(u.exit_code != 0);
}

TEST_CASE("cli: results are independent of the worker count") {
  RunResult one = run_cli("--jobs 1 law-sym --n 5 --method landau --verify classes --out cli_j1.tmp");
  RunResult three = run_cli("--jobs 3 law-sym --n 5 --method landau --verify classes --out cli_j3.tmp");
  CHECK(one.exit_code == 0);
  CHECK(three.exit_code == 0);
  CHECK(slurp("cli_j1.tmp") == slurp("cli_j3.tmp"));
  std::remove("cli_j1.tmp");
  std::remove("cli_j3.tmp");

  // counterexample selection is also deterministic across J
  RunResult v1 = run_cli("--jobs 1 law-sym --n 4 --method landau --out cli_v.tmp");
  CHECK(v1.exit_code == 0);
  RunResult f1 = run_cli("--jobs 1 verify --law cli_v.tmp --group sym:5 --mode classes");
  RunResult f4 = run_cli("--jobs 4 verify --law cli_v.tmp --group sym:5 --mode classes");
  CHECK(f1.exit_code == 2);
  CHECK(f4.exit_code == 2);
  CHECK(f1.out == f4.out);
  std::remove("cli_v.tmp");
}
