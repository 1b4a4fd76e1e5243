#include <sstream>

#include "doctest.h"
#include "wrt/cli.hpp"

using namespace wrt;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cf subcommand") {
  CliResult res = run({"cf", "5/2"});
  CHECK(res.code == 0);
  CHECK(res.out == "(2, 3)\n");
  CHECK(run({"cf", "1/2"}).out == "(-2, 0)\n");
  CHECK(run({"cf", "7"}).out == "(7)\n");
  // |value| = 1 is outside the normal-form family.
  CliResult bad = run({"cf", "3/3"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("domain error") != std::string::npos);
}

TEST_CASE("invariant subcommand") {
  CliResult res =
      run({"invariant", "-p", "1", "-q", "0", "-r", "5", "--method", "both"});
  CHECK(res.code == 0);
  CHECK(res.out.find("0.85065080835204") != std::string::npos);
  CHECK(res.out.find("oracle") != std::string::npos);
  CHECK(res.out.find("closed") != std::string::npos);

  // unnormalized input gets a notice on stderr
  CliResult notice =
      run({"invariant", "-p", "5", "-q", "2", "-r", "5", "--method", "oracle"});
  CHECK(notice.code == 0);
  CHECK(notice.err.find("normalized") != std::string::npos);

  CliResult json = run({"invariant", "-p", "2", "-q", "-1", "-r", "5",
                        "--method", "oracle", "--output", "json"});
  CHECK(json.code == 0);
  CHECK(json.out.find("\"method\":\"oracle\"") != std::string::npos);
  CHECK(json.out.find("\"cf\":[2,0]") != std::string::npos);
}

TEST_CASE("invariant domain errors exit 1") {
  CliResult res = run({"invariant", "-p", "4", "-q", "2", "-r", "5"});
  CHECK(res.code == 1);
  CHECK(res.err.find("domain error") != std::string::npos);
  CHECK(run({"invariant", "-p", "2", "-q", "-1", "-r", "7"}).code == 1);
}

TEST_CASE("usage errors exit 64") {
  CHECK(run({"invariant", "-p", "2"}).code == 64);
  CHECK(run({"unknown-command"}).code == 64);
  CHECK(run({}).code == 64);
  CHECK(run({"invariant", "-p", "2", "-q", "-1", "-r", "5", "--method",
             "bogus"}).code == 64);
}

TEST_CASE("verify subcommand") {
  CliResult res = run({"verify", "--pmax", "10", "--r", "5"});
  CHECK(res.code == 0);
  CHECK(res.out.find("PASS: 31 lens spaces") != std::string::npos);

  CliResult json = run({"verify", "--pmax", "3", "--r", "5", "--output",
                        "json"});
  CHECK(json.code == 0);
  CHECK(json.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("verify exits 2 when a comparison exceeds tolerance") {
  // Path deviations sit near 1e-15, so an absurd tolerance trips the gate.
  CliResult res =
      run({"verify", "--pmax", "6", "--r", "5", "--tolerance", "1e-30"});
  CHECK(res.code == 2);
  CHECK(res.out.find("FAIL") != std::string::npos);
}

TEST_CASE("tolerance env var is picked up") {
  setenv("WRT_TOLERANCE", "0.125", 1);
  CliResult res = run({"verify", "--pmax", "3", "--r", "5", "--output",
                       "json"});
  unsetenv("WRT_TOLERANCE");
  CHECK(res.code == 0);
  CHECK(res.out.find("\"tolerance\": 0.125") != std::string::npos);
}

TEST_CASE("table subcommand emits csv") {
  CliResult res = run({"table", "--pmax", "4", "--r", "5"});
  CHECK(res.code == 0);
  CHECK(res.out.rfind("r,p,q,re,im,phi,deviation\n", 0) == 0);
  // header plus (2,-1), (3,-1), (3,-2), (4,-1), (4,-3); gcd skips (4,-2)
  int lines = 0;
  for (char ch : res.out) lines += (ch == '\n');
  CHECK(lines == 1 + 5);
}

TEST_CASE("rep subcommand") {
  CliResult res = run({"rep", "-p", "2", "-q", "-1", "-r", "5", "--output",
                       "json"});
  CHECK(res.code == 0);
  CHECK(res.out.find("\"matrix\"") != std::string::npos);
  CHECK(res.out.find("\"re\"") != std::string::npos);

  CliResult exact = run({"rep", "-p", "2", "-q", "-1", "-r", "5", "--exact",
                         "--output", "json"});
  CHECK(exact.code == 0);
  CHECK(exact.out.find("\"conductor\"") != std::string::npos);
}
