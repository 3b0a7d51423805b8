#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace jantzenlab::cli {

enum ExitCode : int { kPass = 0, kMismatch = 1, kUsage = 2, kInternal = 3 };

/// Record of one run. Every emitted table carries hash().
struct RunManifest {
  std::string command;
  int n = 0;
  int r = 0;
  std::vector<std::string> methods;
  std::map<std::string, std::string> conventions;
  std::map<std::string, bool> checks;
  std::string payload_digest;
  double wall_seconds = 0;

  /// Digest of every field except the wall time.
  std::string hash() const;
  std::string to_json() const;
};

/// Runs the tool on args (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jantzenlab::cli
