#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eotree {

// Single exception type for the whole library. `code` is a stable,
// machine-checkable name (UnbalancedBrackets, MalformedSegment, ...);
// what() carries the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Parse failures additionally carry a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::string code, const std::string& message, std::size_t offset)
      : Error(std::move(code), message + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_ = 0;
};

enum class ViolationCode {
  Arity,
  UnbalancedBrackets,
  YieldMismatch,
  NullResidue,
  FunctionalResidue,
  NotNormalized,
  IdOrder,
  DetokenizeMismatch,
};

const char* to_string(ViolationCode code);

// One validator finding. `location` is a node path ("0.2.1"), a token id,
// or a line number as a string, depending on what was being checked.
struct Violation {
  ViolationCode code;
  std::string location;
  std::string message;

  bool operator==(const Violation&) const = default;
};

std::string format_violation(const Violation& v);

// Non-fatal findings (surface synthesis fell back, text line rewritten, ...).
// Passes append to this when the caller provides one.
using WarningList = std::vector<std::string>;

inline void warn(WarningList* sink, std::string message) {
  if (sink) sink->push_back(std::move(message));
}

}  // namespace eotree
