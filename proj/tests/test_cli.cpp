#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(RICHWORDS_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  CliResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("check reports richness and palindrome count") {
  const CliResult r = run_cli("check 0020102202");
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.output) == "rich: true, palindromes: 11");

  const CliResult nonrich = run_cli("check 00101100");
  CHECK(nonrich.exit_code == 1);
  CHECK(first_line(nonrich.output) == "rich: false, palindromes: 8");
}

TEST_CASE("check output is byte-stable") {
  const CliResult a = run_cli("check 0020102202");
  const CliResult b = run_cli("check 0020102202");
  CHECK(a.output == b.output);
}

TEST_CASE("compulsory chain output") {
  const CliResult r = run_cli("extend 01011011101111011111001 --chain");
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.output) == "compulsory: 1 1 1 1");
}

TEST_CASE("enumerate prints the exact column") {
  const CliResult r = run_cli("enumerate --alphabet 2 --max-n 12");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "n,exact\n0,1\n1,2\n2,4\n3,8\n4,16\n5,32\n6,64\n7,128\n8,252\n9,488\n10,932\n"
        "11,1756\n12,3246\n");
}

TEST_CASE("defect with bracket") {
  const CliResult r = run_cli("defect 110010010110010 --infinite --depth 6");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("defect: 4\n") != std::string::npos);
  CHECK(r.output.find("infinite defect: [4, 4] (exact)\n") != std::string::npos);
  CHECK(r.output.find("witness: prefix-power 1^K\xc2\xb7w\n") != std::string::npos);
}

TEST_CASE("join exit codes") {
  const CliResult no = run_cli("join 12 102");
  CHECK(no.exit_code == 1);
  CHECK(first_line(no.output) == "joinable: no");
  const CliResult maybe = run_cli("join 01 10");
  CHECK(maybe.exit_code == 0);
  CHECK(first_line(maybe.output) == "joinable: possibly");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("check 01x2").exit_code == 2);
  CHECK(run_cli("frobnicate 0").exit_code == 2);
  CHECK(run_cli("check --alphabet 2 012").exit_code == 2);  // letter outside alphabet
  CHECK(run_cli("closures \"\"").exit_code == 0);           // empty word is fine for closures
  CHECK(run_cli("enumerate --max-n 20 --budget 10").exit_code == 2);  // budget violation
}

TEST_CASE("json output mirrors text values") {
  const CliResult r = run_cli("--format json check 0020102202");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["schema_version"] == 1);
  CHECK(j["rich"] == true);
  CHECK(j["palindromes"] == 11);
  CHECK(j["lps"] == "202");
  CHECK(j["lps_unioccurrent"] == true);

  const nlohmann::json e = nlohmann::json::parse(run_cli("--format json enumerate --max-n 8").output);
  CHECK(e["exact"] == nlohmann::json::parse("[1,2,4,8,16,32,64,128,252]"));
}

TEST_CASE("sturmian subcommand") {
  const CliResult bal = run_cli("sturmian 0100101");
  CHECK(bal.exit_code == 0);
  CHECK(bal.output == "balanced: true\nextends with 0: true\nextends with 1: true\n");
  const CliResult unbal = run_cli("sturmian 0011");
  CHECK(unbal.exit_code == 1);
  CHECK(unbal.output == "balanced: false\nwitness: \n");
}

TEST_CASE("grid subcommands") {
  const std::string dir = "/tmp/richwords_cli_test";
  if (system(("mkdir -p " + dir).c_str()) != 0) FAIL("cannot create temp dir");

  {
    std::ofstream out(dir + "/grid.txt");
    out << "origin 0 0\n01\n";
  }
  const CliResult check = run_cli("grid check " + dir + "/grid.txt");
  CHECK(check.exit_code == 0);
  CHECK(first_line(check.output) == "rich: true");

  const CliResult tile = run_cli("grid tile " + dir + "/grid.txt --reps 3");
  CHECK(tile.exit_code == 0);
  CHECK(tile.output == "origin 0 0\n010101\n010101\n010101\n");

  const CliResult extend = run_cli("grid extend " + dir + "/grid.txt --margin 1 --budget 100000");
  CHECK(extend.exit_code == 0);
  CHECK(first_line(extend.output) == "verdict: extendable");

  {
    std::ofstream out(dir + "/bad.txt");
    out << "origin 0 0\n00101100\n";
  }
  const CliResult bad = run_cli("grid check " + dir + "/bad.txt");
  CHECK(bad.exit_code == 1);
  CHECK(first_line(bad.output) == "rich: false");
  CHECK(run_cli("grid tile " + dir + "/bad.txt --reps 2").exit_code == 2);
}

TEST_CASE("extend search and witness modes") {
  const CliResult search =
      run_cli("extend 11011010101010110011000111000011100 --search --ways 2 --depth 10");
  CHECK(search.exit_code == 0);
  CHECK(search.output.find("found: true\nwitness: 0\n") != std::string::npos);

  const CliResult witness =
      run_cli("extend 11011010101010110011000111000011100 --witness");
  CHECK(witness.exit_code == 0);
  CHECK(witness.output.find("extended length: 77\n") != std::string::npos);

  const CliResult letters = run_cli("extend 000 --alphabet 2");
  CHECK(letters.exit_code == 0);
  CHECK(first_line(letters.output) == "letters: 0 1");

  const CliResult exhausted = run_cli("extend 0020102202 --search --ways 3 --depth 6");
  CHECK(exhausted.exit_code == 1);
  CHECK(first_line(exhausted.output) == "found: false");
}
