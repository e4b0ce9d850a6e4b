#include "koszulator.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "koszulator/commands.hpp"
#include "koszulator/errors.hpp"
#include "koszulator/session.hpp"

struct kz_session {
  kz::Session session;
};

struct kz_certificate {
  kz::CommandResult result;
};

namespace {

thread_local std::string g_error;
thread_local int g_line = 0;
thread_local int g_column = 0;

kz_status set_error(kz_status s, const std::string& msg, int line = 0, int column = 0) {
  g_error = msg;
  g_line = line;
  g_column = column;
  return s;
}

void clear_error() { set_error(KZ_OK, ""); }

// Maps the library exception hierarchy onto status codes.
kz_status classify(std::string& kind, std::vector<std::string>& attempted) {
  try {
    throw;
  } catch (const kz::ValidationError& e) {
    kind = "validation";
    return set_error(KZ_ERR_VALIDATION, e.what(), e.line(), e.column());
  } catch (const kz::ParseError& e) {
    kind = "parse";
    return set_error(KZ_ERR_PARSE, e.what(), e.line(), e.column());
  } catch (const kz::ArgumentError& e) {
    kind = "argument";
    return set_error(KZ_ERR_ARGUMENT, e.what());
  } catch (const kz::BudgetExceeded& e) {
    kind = "budget";
    return set_error(KZ_ERR_BUDGET, e.what());
  } catch (const kz::SearchFailed& e) {
    kind = "search-failed";
    attempted = e.attempted();
    return set_error(KZ_ERR_SEARCH_FAILED, e.what());
  } catch (const kz::PreconditionError& e) {
    kind = "precondition";
    return set_error(KZ_ERR_PRECONDITION, e.what());
  } catch (const kz::InvariantViolation& e) {
    kind = "invariant";
    return set_error(KZ_ERR_INVARIANT, e.what());
  } catch (const std::exception& e) {
    kind = "internal";
    return set_error(KZ_ERR_INTERNAL, e.what());
  } catch (...) {
    kind = "internal";
    return set_error(KZ_ERR_INTERNAL, "unknown error");
  }
}

}  // namespace

extern "C" {

kz_status kz_session_parse(const char* text, kz_session** out) {
  if (!text || !out) return set_error(KZ_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  clear_error();
  try {
    *out = new kz_session{kz::parse_session(text)};
    return KZ_OK;
  } catch (...) {
    std::string kind;
    std::vector<std::string> attempted;
    return classify(kind, attempted);
  }
}

kz_status kz_session_parse_file(const char* path, kz_session** out) {
  if (!path || !out) return set_error(KZ_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  std::ifstream in(path, std::ios::binary);
  if (!in) return set_error(KZ_ERR_IO, std::string("cannot read ") + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return kz_session_parse(ss.str().c_str(), out);
}

void kz_session_free(kz_session* session) { delete session; }

kz_status kz_session_set_seed(kz_session* session, uint64_t seed) {
  if (!session) return set_error(KZ_ERR_ARGUMENT, "null session");
  session->session.seed = seed;
  return KZ_OK;
}

kz_status kz_session_set_budget(kz_session* session, const char* which, long value) {
  if (!session || !which) return set_error(KZ_ERR_ARGUMENT, "null argument");
  if (value <= 0) return set_error(KZ_ERR_ARGUMENT, "budget must be positive");
  const std::string w = which;
  kz::Budget& b = session->session.budget;
  if (w == "degree")
    b.max_degree = static_cast<int>(value);
  else if (w == "steps")
    b.max_steps = static_cast<int>(value);
  else if (w == "retries")
    b.max_retries = static_cast<int>(value);
  else
    return set_error(KZ_ERR_ARGUMENT, "unknown budget '" + w + "'");
  return KZ_OK;
}

kz_status kz_run_command(kz_session* session, const char* command, const char* const* args, size_t nargs,
                         kz_certificate** out) {
  if (!session || !command || !out || (nargs > 0 && !args)) return set_error(KZ_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  clear_error();
  std::vector<std::string> a;
  for (size_t i = 0; i < nargs; ++i) {
    if (!args[i]) return set_error(KZ_ERR_ARGUMENT, "null command argument");
    a.emplace_back(args[i]);
  }
  try {
    *out = new kz_certificate{kz::run_command(session->session, command, a)};
    return KZ_OK;
  } catch (...) {
    std::string kind;
    std::vector<std::string> attempted;
    kz_status s = classify(kind, attempted);
    try {
      *out = new kz_certificate{kz::error_certificate(&session->session, command, a, kind, g_error, attempted)};
    } catch (...) {
      *out = nullptr;
    }
    return s;
  }
}

int kz_certificate_ok(const kz_certificate* cert) { return cert && cert->result.ok ? 1 : 0; }

const char* kz_certificate_json(const kz_certificate* cert) { return cert ? cert->result.json.c_str() : ""; }

const char* kz_certificate_summary(const kz_certificate* cert) { return cert ? cert->result.summary.c_str() : ""; }

kz_status kz_certificate_write(const kz_certificate* cert, const char* path) {
  if (!cert || !path) return set_error(KZ_ERR_ARGUMENT, "null argument");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return set_error(KZ_ERR_IO, std::string("cannot write ") + path);
  out << cert->result.json;
  out.flush();
  if (!out) return set_error(KZ_ERR_IO, std::string("write failed: ") + path);
  return KZ_OK;
}

void kz_certificate_free(kz_certificate* cert) { delete cert; }

const char* kz_last_error(void) { return g_error.c_str(); }
int kz_last_error_line(void) { return g_line; }
int kz_last_error_column(void) { return g_column; }

const char* kz_status_name(kz_status status) {
  switch (status) {
    case KZ_OK: return "ok";
    case KZ_ERR_PARSE: return "parse";
    case KZ_ERR_VALIDATION: return "validation";
    case KZ_ERR_ARGUMENT: return "argument";
    case KZ_ERR_BUDGET: return "budget";
    case KZ_ERR_SEARCH_FAILED: return "search-failed";
    case KZ_ERR_PRECONDITION: return "precondition";
    case KZ_ERR_INVARIANT: return "invariant";
    case KZ_ERR_IO: return "io";
    case KZ_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* kz_version(void) { return kz::kVersion; }

}  // extern "C"
