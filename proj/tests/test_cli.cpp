#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "trisum/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = trisum::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Restores TRISUM_MAX_TERMS on scope exit.
struct EnvGuard {
  explicit EnvGuard(const char* value) { setenv("TRISUM_MAX_TERMS", value, 1); }
  ~EnvGuard() { unsetenv("TRISUM_MAX_TERMS"); }
};

}  // namespace

TEST_CASE("eval closed reproduces the first printed constant") {
  const auto r = run({"eval", "--family", "A1", "--z", "2", "--m", "0", "--method", "closed",
                      "--format", "csv"});
  CHECK(r.code == 0);
  const double G = 0.915965594177219015054603514932384110774;
  const double ln2 = std::numbers::ln2, pi = std::numbers::pi;
  const double expected = pi * pi / 48 - ln2 * ln2 / 10 + 2 * G / 5;
  const auto pos = r.out.find("closed,");
  REQUIRE(pos != std::string::npos);
  const double value = std::stod(r.out.substr(pos + 7));
  CHECK(std::abs(value - expected) < 1e-15);
}

TEST_CASE("eval all prints every method and the deviation") {
  const auto r = run({"eval", "--family", "A1", "--z", "2", "--m", "0", "--method", "all"});
  CHECK(r.code == 0);
  for (const char* word : {"closed", "series", "quadrature", "max deviation", "PASS"}) {
    CHECK(r.out.find(word) != std::string::npos);
  }
}

TEST_CASE("eval json holds exactly the requested methods") {
  auto r = run({"eval", "--family", "B2", "--z", "-4", "--m", "2", "--method", "series",
                "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["values"].size() == 1);
  CHECK(j["values"].contains("series"));
  CHECK_FALSE(j.contains("max_deviation"));

  r = run({"eval", "--family", "B2", "--z", "-4", "--m", "2", "--format", "json"});
  j = nlohmann::json::parse(r.out);
  CHECK(j["values"].size() == 3);
  CHECK(j["pass"] == true);

  r = run({"eval", "--family", "C3", "--z", "0.5", "--format", "json"});
  CHECK(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["values"].size() == 2);
  CHECK_FALSE(j["values"].contains("closed"));
}

TEST_CASE("eval --w converts to z = 1/w") {
  const auto a = run({"eval", "--family", "A2", "--w", "0.5", "--m", "1", "--method", "closed",
                      "--format", "csv"});
  const auto b = run({"eval", "--family", "A2", "--z", "2", "--m", "1", "--method", "closed",
                      "--format", "csv"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("eval domain errors name the flag") {
  auto r = run({"eval", "--family", "A1", "--z", "0.5", "--m", "0"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--z") != std::string::npos);
  CHECK(r.err.find("|z| >= 1") != std::string::npos);

  r = run({"eval", "--family", "C1", "--z", "2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("|z| <= 1") != std::string::npos);

  r = run({"eval", "--family", "C1", "--z", "0.5", "--m", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--m") != std::string::npos);

  r = run({"eval", "--family", "C1", "--z", "0.5", "--method", "closed"});
  CHECK(r.code == 2);

  r = run({"eval", "--family", "X9", "--z", "2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--family") != std::string::npos);

  r = run({"eval", "--family", "A1", "--z", "2", "--w", "0.5"});
  CHECK(r.code == 2);
  r = run({"eval", "--family", "A1"});
  CHECK(r.code == 2);
  r = run({"eval", "--family", "A1", "--w", "2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--w") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"eval", "--z", "2"}).code == 2);
  CHECK(run({"eval", "--family", "A1", "--z", "two"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"verify", "--suite", "beta-terms", "--tol", "1e-20"}).code == 2);
  CHECK(run({"eval", "--family", "A1", "--z", "2", "--method", "magic"}).code == 2);
}

TEST_CASE("verify paper-constants passes with a table") {
  const auto r = run({"verify", "--suite", "paper-constants"});
  CHECK(r.code == 0);
  CHECK(r.out.find("17 records, 0 failed") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify writes a json report file") {
  const auto path = std::filesystem::temp_directory_path() / "trisum_cli_report.json";
  const auto r = run({"verify", "--suite", "paper-constants", "--tol", "1e-10", "--format",
                      "json", "--out", path.string()});
  CHECK(r.code == 0);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["suite"] == "paper-constants");
  CHECK(j["records"].size() == 17);
  std::filesystem::remove(path);

  const auto bad = run({"verify", "--suite", "beta-terms", "--out", "/nonexistent/dir/r.json"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("cannot open") != std::string::npos);
}

TEST_CASE("failing verification exits with 1") {
  EnvGuard guard("2");
  const auto r = run({"verify", "--suite", "paper-constants"});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("TRISUM_MAX_TERMS") {
  {
    EnvGuard guard("3");
    const auto r = run({"eval", "--family", "A1", "--z", "2", "--method", "series"});
    CHECK(r.code == 1);
    CHECK(r.err.find("terms") != std::string::npos);
  }
  {
    EnvGuard guard("many");
    const auto r = run({"eval", "--family", "A1", "--z", "2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("TRISUM_MAX_TERMS") != std::string::npos);
  }
  {
    EnvGuard guard("50000");
    CHECK(run({"eval", "--family", "A1", "--z", "2"}).code == 0);
  }
}

TEST_CASE("integral prints one quadrature value") {
  auto r = run({"integral", "--kernel", "lnx", "--variant", "thm1", "--z", "2", "--m", "1"});
  CHECK(r.code == 0);
  const double v = std::stod(r.out);
  // Raw integral; A1 carries (-1)^m so the series equals -v.
  CHECK(std::abs(-v - 0.025439294973341516) < 1e-13);
  CHECK(r.out.find('\n') == r.out.size() - 1);

  r = run({"integral", "--kernel", "lnratio", "--variant", "c4", "--z", "0.5", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).contains("error_estimate"));

  CHECK(run({"integral", "--kernel", "lnx", "--variant", "thm1", "--z", "0.1"}).code == 2);
  CHECK(run({"integral", "--kernel", "lnx", "--variant", "c3", "--z", "0.5"}).code == 2);
  CHECK(run({"integral", "--kernel", "log", "--variant", "thm1", "--z", "2"}).code == 2);
  CHECK(run({"integral", "--kernel", "lnx", "--variant", "thm9", "--z", "2"}).code == 2);
}

TEST_CASE("constants table") {
  const auto r = run({"constants"});
  CHECK(r.code == 0);
  for (const char* name : {"Li2(1)", "Li2(1/2)", "Li2(i)", "Li2(-i)", "Cl2(pi/2)", "G "}) {
    CHECK(r.out.find(name) != std::string::npos);
  }
  CHECK(r.out.find("0.91596559417721901") != std::string::npos);
  const auto reg = run({"constants", "--registry"});
  CHECK(reg.out.find("grfgv7c") != std::string::npos);
  CHECK(reg.out.find("b2-z2-m2") != std::string::npos);
}

TEST_CASE("every documented flag appears in --help") {
  const std::map<std::string, std::vector<std::string>> flags = {
      {"eval", {"--family", "--z", "--w", "--m", "--method", "--tol", "--format", "--out"}},
      {"verify", {"--suite", "--tol", "--format", "--out"}},
      {"integral", {"--kernel", "--variant", "--z", "--m", "--tol", "--format"}},
      {"constants", {"--registry"}},
  };
  const auto top = run({"--help"});
  CHECK(top.code == 0);
  for (const auto& [sub, list] : flags) {
    CHECK(top.out.find(sub) != std::string::npos);
    const auto help = run({sub, "--help"});
    CHECK(help.code == 0);
    for (const auto& flag : list) {
      CAPTURE(sub);
      CAPTURE(flag);
      CHECK(help.out.find(flag) != std::string::npos);
    }
  }
  const auto suites = run({"verify", "--help"}).out;
  for (const char* s : {"paper-constants", "theorem-grid", "concluding", "specfun-identities",
                        "beta-terms"}) {
    CHECK(suites.find(s) != std::string::npos);
  }
}
