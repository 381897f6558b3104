#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>

namespace incexc::cli {

enum class Command { Sieve, Atoms, Moments, Bracket, Check, Gen };

/// One invocation. `params` holds the command-specific keys (k, d, r, eps,
/// k_max, l, target, atoms, events, seed) exactly as given on the command line.
struct JobSpec {
  Command command = Command::Sieve;
  std::string input_path;
  std::map<std::string, std::string> params;
  bool json = false;
  unsigned precision_bits = 128;
  std::size_t max_events = 24;
  std::size_t max_terms = 1'000'000;
};

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitComputation = 3;
inline constexpr int kExitResource = 4;

/// Validates params for the command, reads the input, and prints a report.
int run(const JobSpec& spec, std::ostream& out, std::ostream& err);

/// Parses argv into a JobSpec and runs it.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace incexc::cli
