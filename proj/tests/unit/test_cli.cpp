#include <doctest.h>

#include <sstream>

#include "cli/commands.hpp"
#include "dposet/dposet.hpp"

using namespace dposet;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(DPOSET_TEST_DATA) + "/" + name; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("output formats") {
    CHECK(cli::format(DElement()) == "0\n");
    CHECK(run({"canon", "key:0205"}).out == "0205\n");
    CHECK(run({"coproduct", "key:0205"}).out == "1*00|0205\n1*01|01\n1*0205|00\n");
    CHECK(run({"antipode", "key:0205"}).out == "1*0204\n-1*0205\n");
    CHECK(run({"product", "key:01", "key:01"}).out == "1*0204\n");
    CHECK(run({"pair", "key:01", "key:01"}).out == "1\n");
    CHECK(run({"gamma", "key:01"}).out == "1*M(1)\n");
    CHECK(run({"internal", "key:01", "key:0205"}).out == "0\n");
    CHECK(run({"parse", "key:0204"}).out == "dp 2\nr1:\nr2: 0<1\n");
    CHECK(run({"linext", data("chain2_reversed.dp")}).out == "21\n");
    CHECK(run({"lmap", data("chain2_reversed.dp")}).out == "1*21\n");
    CHECK(run({"lr", "key:0205", "--partition", "2"}).out == "complement-count=1 mirror-count=1 pairing=1\n");
    CHECK(run({"fits", "key:0205", "--word", "1,1"}).out == "fits=true st-fits=true\n");
  }

  TEST_CASE("exit codes") {
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"nope"}).code == cli::kExitUsage);
    CHECK(run({"pair", "key:01"}).code == cli::kExitUsage);
    CHECK(run({"lr", "key:01", "--partition", "x"}).code == cli::kExitUsage);
    CHECK(run({"check", "--suite", "bogus"}).code == cli::kExitUsage);
    CHECK(run({"check", "--max-n", "99"}).code == cli::kExitUsage);
    CHECK(run({"canon", data("missing.dp")}).code == cli::kExitUsage);
    const Result cycle = run({"canon", data("cycle.dp")});
    CHECK(cycle.code == cli::kExitDomainError);
    CHECK(cycle.err.rfind("error: CycleError:", 0) == 0);
    CHECK(run({"canon", data("malformed.dp")}).code == cli::kExitDomainError);
    CHECK(run({"linext", "key:020f"}).code == cli::kExitDomainError);
    CHECK(run({"check", "--suite", "all", "--max-n", "2"}).code == cli::kExitOk);
    CHECK(run({"--help"}).code == cli::kExitOk);
  }

  TEST_CASE("check reports are deterministic") {
    const Result a = run({"check", "--suite", "hopf", "--max-n", "5", "--seed", "7"});
    const Result b = run({"check", "--suite", "hopf", "--max-n", "5", "--seed", "7"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("FAIL") == std::string::npos);
    CHECK(a.out.find("suite=hopf max-n=5 seed=7: PASS") != std::string::npos);
  }

  TEST_CASE("int lists") {
    CHECK(cli::parse_int_list("2,1,1") == std::vector<int>{2, 1, 1});
  }
}
