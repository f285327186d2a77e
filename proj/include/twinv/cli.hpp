#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twinv {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;

struct CliStreams {
  std::ostream& out;
  std::ostream& err;
  bool color = false;  // ANSI colors in text output
};

// Runs one command line (without the program name). Returns 0 on success,
// 1 when a check found violations, 2 on usage or I/O errors.
int dispatch(const std::vector<std::string>& args, CliStreams streams);

}  // namespace twinv
