#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace osc::cli {

enum class Format { text, json, csv };

// Everything parsed from argv, validated before any computation runs.
struct RunConfig {
  std::string subcommand;
  int n = 0;
  std::vector<std::string> weights;
  std::vector<std::string> distribution;
  std::string preset;
  std::optional<int> t_index;
  std::optional<int> t_prime_index;
  bool transition = false;
  std::string basis = "std";
  std::string order = "lex";
  std::string suite = "all";
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  bool fast = false;
  bool minpoly = false;
  Format format = Format::text;
  std::optional<int> cap;
  std::string output;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name. Normal output goes to out (or to the
// --output file), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace osc::cli
