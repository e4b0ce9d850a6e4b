#pragma once

#include <string>
#include <vector>

#include "koszulator/session.hpp"

namespace kz {

inline constexpr const char* kVersion = "1.0.0";

/// Canonical JSON certificate (sorted keys, two-space indent, trailing newline) plus a short human summary.
struct CommandResult {
  std::string json;
  std::string summary;
  bool ok = false;
};

/// Commands: gb, resolve, homology, depth, cm-check, koszul-cover, reduce, realize,
/// roundtrip, k0, hom-vanish, plus hom-compare and transport.
/// Throws ArgumentError for unknown commands or arguments; other library errors propagate.
CommandResult run_command(const Session& session, const std::string& command, const std::vector<std::string>& args);

/// Certificate recording a failed command (ok = false).
CommandResult error_certificate(const Session* session, const std::string& command,
                                const std::vector<std::string>& args, const std::string& kind,
                                const std::string& message, const std::vector<std::string>& attempted = {});

/// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& data);

}  // namespace kz
