#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

namespace anglespread::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitDomain = 3,
  kExitGuard = 4,
};

/// Runs one subcommand. `args` is a full argv (args[0] is the program name).
/// The result document goes to `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Serializes a document as JSON with every floating-point number written
/// using 17 significant digits, so doubles round-trip exactly.
std::string to_structured_text(const nlohmann::json& doc);

}  // namespace anglespread::cli
