#pragma once

#include <stdexcept>
#include <string>

namespace demdetect {

// Error categories map onto process exit codes: usage/config errors exit 1,
// data/format errors exit 2, numerical failures exit 3.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised by timestamp normalization when a sentence lacks word timing;
// callers decide whether to exclude the sentence or fail.
struct NoTimestamps : DataError {
  explicit NoTimestamps(const std::string& msg) : DataError(msg) {}
};

}  // namespace demdetect
