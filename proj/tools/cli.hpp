#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "robnash/errors.hpp"

namespace robnash::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kValidationError = 1;
inline constexpr int kCapacityError = 2;
inline constexpr int kDomainError = 3;
inline constexpr int kInvariantViolation = 4;
inline constexpr int kUsageError = 64;

/// Status for a library error; unknown subclasses count as validation errors.
int exit_code_for(const Error& e);
std::string error_label(const Error& e);

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace robnash::cli
