// Runs the command-line binary and checks exit codes and certificate files.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = KZ_CLI_PATH;
const std::string kCorpusDir = KZ_CORPUS_DIR;

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("kz_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int run(const std::string& args) {
  const std::string cmd = kCli + " " + args + " > /dev/null 2> " + (scratch() / "stderr.txt").string();
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string session(const std::string& name) { return "--session " + kCorpusDir + "/" + name; }

}  // namespace

TEST_CASE("successful commands exit zero and write canonical JSON") {
  const fs::path out = scratch() / "k0.json";
  CHECK(run("k0 P2 " + session("corpus.kz") + " --out " + out.string()) == 0);
  const std::string text = slurp(out);
  nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j["ok"] == true);
  CHECK(j.dump(2) + "\n" == text);
}

TEST_CASE("every command runs on the corpus") {
  const std::string s = session("corpus.kz");
  const fs::path out = scratch() / "c.json";
  for (const char* args : {"gb m", "resolve M", "homology P2", "depth M", "cm-check", "koszul-cover P2 fl",
                           "reduce P2 fl", "realize Mc", "roundtrip P fl", "k0 P", "hom-vanish PP2 P",
                           "hom-compare M M", "transport idM fl"}) {
    INFO(args);
    CHECK(run(std::string(args) + " " + s + " --out " + out.string()) == 0);
    CHECK(nlohmann::json::parse(slurp(out))["ok"] == true);
  }
}

TEST_CASE("repeated runs are byte identical") {
  const fs::path a = scratch() / "a.json", b = scratch() / "b.json";
  REQUIRE(run("roundtrip P2 fl " + session("corpus.kz") + " --out " + a.string()) == 0);
  REQUIRE(run("roundtrip P2 fl " + session("corpus.kz") + " --out " + b.string()) == 0);
  CHECK(slurp(a) == slurp(b));
  REQUIRE(run("roundtrip P2 fl " + session("corpus.kz") + " --seed 5 --out " + b.string()) == 0);
  CHECK(nlohmann::json::parse(slurp(a))["inputs_digest"] != nlohmann::json::parse(slurp(b))["inputs_digest"]);
}

TEST_CASE("exit codes by failure class") {
  const fs::path out = scratch() / "e.json";
  const std::string o = " --out " + out.string();
  CHECK(run("frobnicate " + session("corpus.kz") + o) == 2);
  CHECK(run("k0 NoSuch " + session("corpus.kz") + o) == 2);
  CHECK(run("k0 P") == 2);

  const fs::path bad = scratch() / "bad.kz";
  std::ofstream(bad) << "ring R = QQ[x,y]\nmodule M = quotient(x +* y)\n";
  CHECK(run("k0 P --session " + bad.string() + o) == 3);
  CHECK(slurp(scratch() / "stderr.txt").find("line 2") != std::string::npos);

  CHECK(run("roundtrip P fl " + session("non_cm.kz") + o) == 4);
  nlohmann::json j = nlohmann::json::parse(slurp(out));
  CHECK(j["ok"] == false);
  CHECK(j["error"]["kind"] == "precondition");

  CHECK(run("k0 P " + session("corpus.kz") + " --out /nonexistent/dir/x.json") == 5);
}

TEST_CASE("cleanup") {
  std::error_code ec;
  fs::remove_all(scratch(), ec);
  CHECK_FALSE(ec);
}
