#include "doctest.h"

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>

#include "fixtures.hpp"

#ifndef CMOTZKIN_CLI_PATH
#error "CMOTZKIN_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string command =
      std::string("'") + CMOTZKIN_CLI_PATH + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.out.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("cli map and unmap") {
  RunResult map = run_cli(
      "map --d 2 --path \"U1 U1 U2 D2 U2 U2 L D2 D2 U2 U2 D2 D1 D2 D1\"");
  CHECK(map.exit_code == 0);
  CHECK(map.out == std::string(fixtures::kTwoColorWord) + "\n");

  RunResult unmap =
      run_cli("unmap --d 2 --word \"1 1 2 3 2 1 3 4 2 1 1 2 5 2 4\"");
  CHECK(unmap.exit_code == 0);
  CHECK(unmap.out == std::string(fixtures::kTwoColorPath) + "\n");

  RunResult flat = run_cli("map --d 1 --path \"L L L\"");
  CHECK(flat.out == "1 1 1\n");

  // byte-identical roundtrip of canonical forms
  RunResult back = run_cli("unmap --d 2 --word \"" +
                           map.out.substr(0, map.out.size() - 1) + "\"");
  CHECK(back.out == std::string(fixtures::kTwoColorPath) + "\n");
}

TEST_CASE("cli enumerate") {
  CHECK(run_cli("enumerate motzkin --n 2 --d 1").out == "L L\nU1 D1\n");
  CHECK(run_cli("enumerate syt --n 3 --d 2").out == "1 1 1\n1 1 2\n1 2 1\n");
  CHECK(run_cli("enumerate motzkin --n 3 --d 1 --class bar").out == "U1 L D1\n");

  // line counts match the reported counts, class filter partitions
  const std::string all = run_cli("enumerate motzkin --n 5 --d 2").out;
  const auto lines = [](const std::string& s) {
    return std::count(s.begin(), s.end(), '\n');
  };
  CHECK(lines(all) == 26);
  CHECK(run_cli("count motzkin --n 5 --d 2 --method enumerate").out == "26\n");
  const long split = lines(run_cli("enumerate motzkin --n 5 --d 2 --class lower").out) +
                     lines(run_cli("enumerate motzkin --n 5 --d 2 --class hat").out) +
                     lines(run_cli("enumerate motzkin --n 5 --d 2 --class bar").out);
  CHECK(split == 26);
}

TEST_CASE("cli count") {
  CHECK(run_cli("count syt --n 5 --d 5 --method dp").out == "26\n");
  CHECK(run_cli("count syt --n 5 --d 5 --method formula").out == "26\n");
  CHECK(run_cli("count syt --n 5 --d 5 --method enumerate").out == "26\n");
  CHECK(run_cli("count motzkin --n 5 --d 2").out == "26\n");
  CHECK(run_cli("count motzkin --n 5 --d 1 --level-policy floor-only").out ==
        "10\n");
  CHECK(run_cli("count motzkin --n 5 --d 1 --level-policy floor-only "
                "--method enumerate").out == "10\n");
  CHECK(run_cli("count syt --n 30 --d 2 --method formula").out ==
        "155117520\n");
}

TEST_CASE("cli render and stats") {
  CHECK(run_cli("render tableau \"12132123\"").out == "1 3 6\n2 5 7\n4 8\n");
  CHECK(run_cli("render path \"U1 D1\"").out == "11\n/\\\n");
  CHECK(run_cli("render path \"L L\"").out == "__\n");
  RunResult stats = run_cli(
      "stats --d 2 --path \"U1 U1 U2 D2 U2 U2 L D2 D2 U2 U2 D2 D1 D2 D1\"");
  CHECK(stats.out == "level_steps=1 odd_columns=1\n");
}

TEST_CASE("cli verify") {
  RunResult verify = run_cli("verify --n-max 5 --d-max 2");
  CHECK(verify.exit_code == 0);
  CHECK(verify.out.find("bijection-image") != std::string::npos);
  RunResult kv = run_cli("verify --n-max 4 --d-max 1 --format kv --suite counts");
  CHECK(kv.exit_code == 0);
  CHECK(kv.out.find("check=generator-vs-dp") == 0);
}

TEST_CASE("cli output and trace files") {
  RunResult to_file =
      run_cli("map --d 1 --path \"L L\" --output /tmp/cmotzkin_cli_out.txt");
  CHECK(to_file.exit_code == 0);
  CHECK(to_file.out.empty());
  FILE* f = fopen("/tmp/cmotzkin_cli_out.txt", "r");
  REQUIRE(f != nullptr);
  char line[64] = {};
  REQUIRE(fgets(line, sizeof line, f) != nullptr);
  fclose(f);
  CHECK(std::string(line) == "1 1\n");

  run_cli("map --d 2 --path \"U1 U1 U2 D2 U2 U2 L D2 D2 U2 U2 D2 D1 D2 D1\" "
          "--trace /tmp/cmotzkin_cli_trace.txt");
  f = fopen("/tmp/cmotzkin_cli_trace.txt", "r");
  REQUIRE(f != nullptr);
  REQUIRE(fgets(line, sizeof line, f) != nullptr);
  fclose(f);
  CHECK(std::string(line).rfind("fwd t=2 odd anchor=7", 0) == 0);
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli("map --d 1 --path \"D1\"").exit_code == 2);
  CHECK(run_cli("unmap --d 1 --word \"2 1\"").exit_code == 2);
  CHECK(run_cli("unmap --d 1 --word \"1 2 3 4\"").exit_code == 2);
  CHECK(run_cli("map").exit_code == 1);
  CHECK(run_cli("count motzkin --n 3 --d 1 --method formula").exit_code == 1);
  CHECK(run_cli("count syt --n 3 --d 7 --method formula").exit_code == 1);
  CHECK(run_cli("enumerate syt --n 3 --d 2 --class bar").exit_code == 1);
  CHECK(run_cli("nonsense").exit_code == 1);
}
