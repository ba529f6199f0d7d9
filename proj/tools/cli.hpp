#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace raag::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kParseError = 2, kResourceLimit = 3 };

struct JobConfig {
  std::string subcommand;
  std::string graph_path;
  std::vector<std::string> words;
  std::optional<unsigned> order;      // N, PCSeries truncation
  std::optional<std::size_t> upto;    // M, series length / degree bound
  std::string domain = "Q";
  std::optional<std::uint32_t> p;
  std::optional<std::size_t> radius;  // ball radius, growth oracle radius
  std::string kind = "lcs";
  bool json = false;
  std::string output_path;
};

/// Executes one job; output goes to `out` unless an output path is set.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a JobConfig and runs it.
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace raag::cli
