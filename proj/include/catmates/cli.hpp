#pragma once

#include <string>
#include <vector>

#include "catmates/io.hpp"

namespace catmates::cli {

enum class Status { Ok, Violations, Error };

struct CommandResult {
  Status status = Status::Ok;
  io::Json payload;    // always carries "status"
  std::string output;  // rendered according to --out, newline-terminated
  int exit_code() const { return static_cast<int>(status); }
};

// args excludes the program name. Never throws; errors become Status::Error.
CommandResult run(const std::vector<std::string>& args);

}  // namespace catmates::cli
