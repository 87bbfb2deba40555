#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "cli.hpp"

using namespace polycells::cli;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "polycells");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = run_command_line(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("faces") {
  const auto r = run_args({"faces", "--n", "6", "--k", "1"});
  CHECK(r.status == kExitOk);
  CHECK(r.out == "n,k,faces\n6,1,14\n");
  const auto all = run_args({"faces", "--n", "4"});
  CHECK(all.out == "n,k,faces\n4,0,1\n4,1,5\n4,2,5\n");
}

TEST_CASE("faces json") {
  const auto r = run_args({"faces", "--n", "5", "--format", "json"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("\"schemaVersion\": 1") != std::string::npos);
  CHECK(r.out.find("\"total\": 45") != std::string::npos);
}

TEST_CASE("classes") {
  const auto r = run_args({"classes", "--n", "6", "--k", "3"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find(",2,") != std::string::npos);
  CHECK(r.out.find(",12,") != std::string::npos);
}

TEST_CASE("tables") {
  const auto r = run_args({"tables", "--which", "f"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.rfind("n,1,2,", 0) == 0);
  CHECK(run_args({"tables"}).status == kExitUsage);
  CHECK(run_args({"tables", "--which", "z"}).status == kExitUsage);
}

TEST_CASE("svg only for atlas") {
  CHECK(run_args({"faces", "--n", "5", "--format", "svg"}).status == kExitUsage);
  CHECK(run_args({"tables", "--which", "a", "--format", "svg"}).status == kExitUsage);
  const auto r = run_args({"atlas", "--n", "6", "--k", "3", "--format", "svg"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("<svg") != std::string::npos);
}

TEST_CASE("refusals and usage errors") {
  const auto census = run_args({"moduli", "--n", "7", "--k", "0", "--census"});
  CHECK(census.status == kExitUsage);
  CHECK(census.err.find("refused") != std::string::npos);
  CHECK(run_args({"moduli", "--n", "4", "--k", "0", "--census"}).status == kExitOk);
  CHECK(run_args({"faces", "--n", "5", "--k", "9"}).status == kExitUsage);
  const auto big = run_args({"classes", "--n", "60", "--k", "20"});
  CHECK(big.status == kExitUsage);
  CHECK(big.err.find("refused") != std::string::npos);
  CHECK(run_args({"types", "--n", "500"}).status == kExitUsage);
  CHECK(run_args({"bogus"}).status == kExitUsage);
  CHECK(run_args({}).status == kExitUsage);
  CHECK(run_args({"faces", "--help"}).status == kExitOk);
}

TEST_CASE("deterministic output") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"atlas", "--n", "8", "--k", "4", "--format", "json"},
           {"isotropy", "--n", "7", "--k", "3"},
           {"types", "--n", "7", "--k", "2", "--format", "json"},
           {"tables", "--which", "dissections"}}) {
    const auto a = run_args(args);
    const auto b = run_args(args);
    CHECK(a.status == kExitOk);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("out path") {
  const auto path = std::filesystem::temp_directory_path() / "polycells_cli_test.csv";
  std::filesystem::remove(path);
  const auto r = run_args({"faces", "--n", "6", "--k", "1", "--out", path.string()});
  CHECK(r.status == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == "n,k,faces\n6,1,14\n");
  std::filesystem::remove(path);
}

TEST_CASE("verify") {
  const auto r = run_args({"verify", "--max-size", "6"});
  CHECK(r.out.find("(partial run)") != std::string::npos);
  CHECK(r.status == kExitFailure);
  CHECK(run_args({"verify", "--max-size", "2"}).status == kExitUsage);
}

TEST_CASE("installed binary exit codes") {
  const std::string tool = POLYCELLS_TOOL;
  auto code = [&](const std::string& args) {
    const int raw = std::system((tool + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(code("faces --n 6 --k 1") == kExitOk);
  CHECK(code("moduli --n 8 --k 0 --census") == kExitUsage);
  CHECK(code("faces --n 6 --format svg") == kExitUsage);
}
