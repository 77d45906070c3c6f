#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "octo/scalar.hpp"

namespace octo::cli {

enum class OutputFormat { text, json };

struct RunConfig {
  std::string subcommand;
  int level = 3;
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  double tolerance = kDefaultTolerance;
  OutputFormat format = OutputFormat::text;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind the octo-tool binary. `args` excludes the program
/// name. Returns 0 when every verdict matches expectation, 1 on a mismatch
/// or internal inconsistency, 2 on bad flags.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace octo::cli
