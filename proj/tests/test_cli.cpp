#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#ifndef AJC_CLI_PATH
#error "AJC_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(AJC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("reduce") {
  CHECK(run("reduce --n 4 \"s(1,2) s(1,2) s(3,4)\"").out == "s(3,4)\n");
  CHECK(run("reduce --n 4 \"s(2,3) s(1,4) s(2,3)\"").out == "s(1,4)\n");
  const RunResult empty = run("reduce --n 2 \"\"");
  CHECK(empty.exit_code == 0);
  CHECK(empty.out.empty());
  // reduced output re-parses: feeding it back is a fixed point
  CHECK(run("reduce --n 4 \"s(1,4)\"").out == "s(1,4)\n");
  const auto json = nlohmann::json::parse(run("reduce --n 4 --json \"s(1,2) s(1,2)\"").out);
  CHECK(json.at("word").at("letters").empty());
  CHECK(json.contains("phi"));
}

TEST_CASE("equal exit codes") {
  CHECK(run("equal --n 3 \"s(1,2) s(1,3)\" \"s(1,3) s(2,3)\"").exit_code == 0);
  CHECK(run("equal --n 3 \"s(1,2)\" \"s(2,1)\"").exit_code == 1);
  CHECK(run("equal --n 3 \"s(1,2)\" \"s(1,4)\"").exit_code == 2);
  CHECK(run("equal --n 3 \"s(1,2)\" \"oops\"").exit_code == 2);
}

TEST_CASE("order") {
  CHECK(run("order --n 4 \"s(1,2) s(1,4)\"").out == "4\n");
  CHECK(run("order --n 2 \"s(1,2) s(2,1)\"").out == "infinite\n");
  CHECK(run("order --n 3 \"\"").out == "1\n");
}

TEST_CASE("perm, pure and phi") {
  CHECK(run("perm --n 4 \"s(1,3)\"").out == "[3,2,1,4]\n");
  CHECK(run("pure --n 2 \"s(1,2) s(2,1)\"").exit_code == 0);
  CHECK(run("pure --n 3 \"s(1,2)\"").exit_code == 1);
  const RunResult phi = run("phi --n 4 \"s(1,2) s(3,1) s(2,3)\"");
  CHECK(phi.out.find("diagram: t(1,2) t(3,4,2+4) t(1,2+4)") != std::string::npos);
  CHECK(phi.out.find("perm: [3,2,1,4]") != std::string::npos);
  // identical invocations are byte-identical
  CHECK(run("phi --n 4 \"s(1,2) s(3,1) s(2,3)\"").out == phi.out);
}

TEST_CASE("rotate and split") {
  CHECK(run("rotate --n 4 --by 1 \"s(4,1)\"").out == "s(1,2)\n");
  const RunResult split = run("split --n 3 --p 3 \"s(1,3) s(1,2)\"");
  CHECK(split.out == "kernel: s(1,3) s(1,2) s(1,3)\nimage: s(1,3)\n");
}

TEST_CASE("presentation") {
  const RunResult pres = run("presentation --n 2 ajn");
  CHECK(pres.exit_code == 0);
  std::size_t gens = 0, pos = 0;
  while ((pos = pres.out.find("gen: ", pos)) != std::string::npos) {
    ++gens;
    pos += 5;
  }
  CHECK(gens == 2);
  CHECK(run("presentation --n 3 adn").out.find("t(1,2,3)") != std::string::npos);
  CHECK(run("presentation --n 3 coxeter-cactus").exit_code == 0);
  CHECK(run("presentation --n 3 nonsense").exit_code == 2);
  CHECK(run("presentation --n 2 ajn --format algebra").out.find("relators := [") != std::string::npos);
}

TEST_CASE("diagram file output") {
  const std::string path = "/tmp/ajc_cli_test_diagram.svg";
  std::remove(path.c_str());
  CHECK(run("diagram --n 4 \"s(1,2) s(3,1) s(2,3)\" --out " + path).exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(body.find("<svg") == 0);
  std::remove(path.c_str());
  CHECK(run("diagram --n 4 \"s(1,2)\" --out /nonexistent-dir/x.svg").exit_code == 3);
}

TEST_CASE("rep and iso-check") {
  const auto rep = nlohmann::json::parse(run("rep --n 3").out);
  CHECK(rep.at("n") == 3);
  CHECK(rep.at("generators").size() == 6);
  CHECK(rep.at("dimension") == 3 * 2 + 3 + 1);
  CHECK(run("iso-check --n 3").exit_code == 0);
  const auto iso = nlohmann::json::parse(run("iso-check --n 4 --json").out);
  CHECK(iso.at("ok") == true);
  CHECK(iso.at("table").size() == 12);
}

TEST_CASE("selftest quick") {
  const RunResult st = run("selftest quick");
  CHECK(st.exit_code == 0);
  CHECK(st.out.find("selftest passed") != std::string::npos);
  CHECK(run("selftest bogus").exit_code == 2);
}

TEST_CASE("input validation maps to exit code 2") {
  CHECK(run("order --n 1 \"\"").exit_code == 2);
  CHECK(run("reduce --n 4 \"s(0,2)\"").exit_code == 2);
  CHECK(run("split --n 4 --p 9 \"s(1,2)\"").exit_code == 2);
}
