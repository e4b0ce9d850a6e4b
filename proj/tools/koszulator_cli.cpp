// Command-line front end. Talks to the engine only through koszulator.h.
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "koszulator.h"

namespace {

enum Exit { kOk = 0, kVerdictFailed = 1, kUsage = 2, kInput = 3, kComputation = 4, kIo = 5 };

int exit_for(kz_status s) {
  switch (s) {
    case KZ_OK: return kOk;
    case KZ_ERR_ARGUMENT: return kUsage;
    case KZ_ERR_PARSE:
    case KZ_ERR_VALIDATION: return kInput;
    case KZ_ERR_IO: return kIo;
    default: return kComputation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"koszulator: exact homological algebra over graded quotient rings"};
  app.set_version_flag("--version", kz_version());

  std::string command;
  std::vector<std::string> args;
  std::string session_path, out_path;
  std::optional<std::uint64_t> seed;
  std::optional<long> budget_degree, budget_steps, budget_retries;

  app.add_option("command", command,
                 "gb | resolve | homology | depth | cm-check | koszul-cover | reduce | realize | roundtrip | k0 | "
                 "hom-vanish | hom-compare | transport")
      ->required();
  app.add_option("args", args, "named session objects and spec literals");
  app.add_option("--session", session_path, "session file")->required()->check(CLI::ExistingFile);
  app.add_option("--out", out_path, "certificate output path")->required();
  app.add_option("--seed", seed, "overrides the session seed");
  app.add_option("--budget-degree", budget_degree, "Groebner degree cap")->check(CLI::PositiveNumber);
  app.add_option("--budget-steps", budget_steps, "resolution step cap")->check(CLI::PositiveNumber);
  app.add_option("--budget-retries", budget_retries, "regular-sequence retry cap")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  kz_session* session = nullptr;
  kz_status st = kz_session_parse_file(session_path.c_str(), &session);
  if (st != KZ_OK) {
    std::fprintf(stderr, "%s: %s error: %s\n", session_path.c_str(), kz_status_name(st), kz_last_error());
    return exit_for(st);
  }
  if (seed) kz_session_set_seed(session, *seed);
  if (budget_degree) kz_session_set_budget(session, "degree", *budget_degree);
  if (budget_steps) kz_session_set_budget(session, "steps", *budget_steps);
  if (budget_retries) kz_session_set_budget(session, "retries", *budget_retries);

  std::vector<const char*> argv_c;
  for (const auto& a : args) argv_c.push_back(a.c_str());
  kz_certificate* cert = nullptr;
  st = kz_run_command(session, command.c_str(), argv_c.data(), argv_c.size(), &cert);
  std::string error = st != KZ_OK ? kz_last_error() : "";

  int rc = kOk;
  if (cert) {
    if (st == KZ_OK) std::fputs(kz_certificate_summary(cert), stdout);
    kz_status ws = kz_certificate_write(cert, out_path.c_str());
    if (ws != KZ_OK) {
      std::fprintf(stderr, "%s\n", kz_last_error());
      rc = kIo;
    }
  }
  if (st != KZ_OK) {
    std::fprintf(stderr, "%s %s error: %s\n", command.c_str(), kz_status_name(st), error.c_str());
    rc = exit_for(st);
  } else if (rc == kOk && !kz_certificate_ok(cert)) {
    rc = kVerdictFailed;
  }
  kz_certificate_free(cert);
  kz_session_free(session);
  return rc;
}
