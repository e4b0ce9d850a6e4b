// Exercises the shared library through koszulator.h only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "koszulator.h"

namespace {

const std::string kCorpus = std::string(KZ_CORPUS_DIR) + "/corpus.kz";

struct Session {
  kz_session* s = nullptr;
  explicit Session(const std::string& path) { REQUIRE(kz_session_parse_file(path.c_str(), &s) == KZ_OK); }
  ~Session() { kz_session_free(s); }
};

struct Cert {
  kz_certificate* c = nullptr;
  kz_status status = KZ_OK;
  Cert(kz_session* s, const char* cmd, std::initializer_list<const char*> args) {
    std::vector<const char*> a(args);
    status = kz_run_command(s, cmd, a.data(), a.size(), &c);
  }
  ~Cert() { kz_certificate_free(c); }
  nlohmann::json json() const { return nlohmann::json::parse(kz_certificate_json(c)); }
};

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(kz_version()) == "1.0.0");
  CHECK(std::string(kz_status_name(KZ_ERR_SEARCH_FAILED)) == "search-failed");
  CHECK(std::string(kz_status_name(KZ_OK)) == "ok");
}

TEST_CASE("parse errors report line and column") {
  kz_session* s = nullptr;
  CHECK(kz_session_parse("ring R = QQ[x,y]\nmodule M = quotient(x - w)\n", &s) == KZ_ERR_PARSE);
  CHECK(s == nullptr);
  CHECK(kz_last_error_line() == 2);
  CHECK(kz_last_error_column() == 25);
  CHECK(std::string(kz_last_error()).find("w") != std::string::npos);
  CHECK(kz_session_parse("ring R = QQ[x,y]\ncomplex P = [R -(x)-> R -(x)-> R]\n", &s) == KZ_ERR_VALIDATION);
  CHECK(kz_session_parse_file("/nonexistent/file.kz", &s) == KZ_ERR_IO);
  CHECK(kz_session_parse(nullptr, &s) == KZ_ERR_ARGUMENT);
}

TEST_CASE("commands return canonical certificates") {
  Session s(kCorpus);
  Cert c(s.s, "k0", {"P2"});
  REQUIRE(c.status == KZ_OK);
  CHECK(kz_certificate_ok(c.c) == 1);
  nlohmann::json j = c.json();
  CHECK(j["tool"] == "koszulator");
  CHECK(j["command"]["name"] == "k0");
  CHECK(j["ok"] == true);
  CHECK(j["inputs_digest"].get<std::string>().size() == 64);
  CHECK(j.dump(2) + "\n" == std::string(kz_certificate_json(c.c)));
  CHECK(std::string(kz_certificate_summary(c.c)).rfind("k0: ok", 0) == 0);
}

TEST_CASE("errors map to status codes and still produce a certificate") {
  Session s(kCorpus);
  Cert unknown(s.s, "frobnicate", {});
  CHECK(unknown.status == KZ_ERR_ARGUMENT);
  REQUIRE(unknown.c != nullptr);
  CHECK(kz_certificate_ok(unknown.c) == 0);
  Cert missing(s.s, "k0", {"NoSuchComplex"});
  CHECK(missing.status == KZ_ERR_ARGUMENT);
  Cert pre(s.s, "hom-vanish", {"P", "P"});
  CHECK(pre.status == KZ_ERR_PRECONDITION);
  CHECK(pre.json()["ok"] == false);

  Session n(std::string(KZ_CORPUS_DIR) + "/non_cm.kz");
  Cert rt(n.s, "roundtrip", {"P", "fl"});
  CHECK(rt.status == KZ_ERR_PRECONDITION);
  CHECK(std::string(kz_last_error()).find("Cohen-Macaulay") != std::string::npos);
}

TEST_CASE("seed and budget setters affect the certificate") {
  Session s(kCorpus);
  CHECK(kz_session_set_budget(s.s, "degree", 30) == KZ_OK);
  CHECK(kz_session_set_budget(s.s, "bogus", 3) == KZ_ERR_ARGUMENT);
  CHECK(kz_session_set_budget(s.s, "steps", 0) == KZ_ERR_ARGUMENT);
  CHECK(kz_session_set_seed(s.s, 99) == KZ_OK);
  Cert c(s.s, "depth", {"M"});
  REQUIRE(c.status == KZ_OK);
  nlohmann::json j = c.json();
  CHECK(j["seed"] == 99);
  CHECK(j["budget"]["degree"] == 30);
}

TEST_CASE("identical inputs give identical bytes") {
  Session a(kCorpus), b(kCorpus);
  Cert x(a.s, "roundtrip", {"P2", "fl"});
  Cert y(b.s, "roundtrip", {"P2", "fl"});
  REQUIRE(x.status == KZ_OK);
  REQUIRE(y.status == KZ_OK);
  CHECK(std::string(kz_certificate_json(x.c)) == std::string(kz_certificate_json(y.c)));
}

TEST_CASE("certificates are written verbatim") {
  Session s(kCorpus);
  Cert c(s.s, "gb", {"m"});
  REQUIRE(c.status == KZ_OK);
  const std::string path = "capi_gb_certificate.json";
  REQUIRE(kz_certificate_write(c.c, path.c_str()) == KZ_OK);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == kz_certificate_json(c.c));
  std::remove(path.c_str());
  CHECK(kz_certificate_write(c.c, "/nonexistent/dir/out.json") == KZ_ERR_IO);
}
