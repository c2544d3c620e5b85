#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "stabilis/cli.hpp"

using namespace stabilis;
using cli::run;

TEST_CASE("exit codes") {
  CHECK(run({"check-stability", "--poly", "z1+i"}).exit_code == cli::kAccepted);
  CHECK(run({"check-stability", "--poly", "z1-i"}).exit_code == cli::kRejected);
  CHECK(run({"check-stability", "--poly", "z1+"}).exit_code == cli::kInputError);
  CHECK(run({"bogus"}).exit_code == cli::kInputError);
  CHECK(run({"certify"}).exit_code == cli::kInputError);
}

TEST_CASE("report shape and replay") {
  auto out = run({"check-stability", "--poly", "1+z1*z2", "--seed", "7"});
  CHECK(out.report["verb"] == "check-stability");
  CHECK(out.report["exit_code"] == 1);
  CHECK(out.report["replay"]["seed"] == 7);
  CHECK(out.report["replay"]["version"] == cli::kVersion);
  CHECK(out.report["result"]["verdict"]["status"] == "RefutedWithWitness");
  auto again = run({"check-stability", "--poly", "1+z1*z2", "--seed", "7"});
  CHECK(again.output == out.output);
}

TEST_CASE("environment seed") {
  setenv("STABILIS_SEED", "99", 1);
  auto out = run({"check-stability", "--poly", "z1+z2+i"});
  unsetenv("STABILIS_SEED");
  CHECK(out.report["replay"]["seed"] == 99);
}

TEST_CASE("inline operators and strict mode") {
  std::string op = R"({"nvars":1,"kappa":[2],"kind":"differential","diff":[{"coeff":"1","zexp":[0],"dexp":[1]}]})";
  CHECK(run({"certify", "--op", op}).exit_code == cli::kAccepted);
  CHECK(run({"certify", "--op", op, "--strict"}).exit_code == cli::kInconclusive);
  auto text = run({"certify", "--op", op, "--format", "text"});
  CHECK(text.output.find("verdict: Preserver-SymbolStable") != std::string::npos);
  std::string bad = R"({"nvars":1,"kappa":[2],"kind":"nope"})";
  auto err = run({"certify", "--op", bad});
  CHECK(err.exit_code == cli::kInputError);
  CHECK(err.report.contains("pointer"));
}

TEST_CASE("other verbs") {
  CHECK(run({"polarize", "--poly", "z1^2", "--kappa", "2"}).report["result"]["polarized"] == "z_1_1*z_1_2");
  CHECK(run({"project", "--poly", "z_1_1*z_1_2", "--kappa", "2"}).exit_code == cli::kAccepted);
  CHECK(run({"szasz", "--poly", "(1+z1)^2"}).exit_code == cli::kAccepted);
  CHECK(run({"ly-member", "--poly", "z1+z2", "--domains", "D,D", "--kappa", "1,1"}).exit_code == cli::kRejected);
  CHECK(run({"transform", "--poly", "z1+i", "--domains", "D"}).exit_code == cli::kAccepted);
  CHECK(run({"--version"}).output.find(cli::kVersion) != std::string::npos);
}
