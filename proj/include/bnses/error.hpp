#pragma once

#include <stdexcept>
#include <string>

namespace bnses {

/// Machine-readable failure categories. The command-line tool maps these
/// onto its exit codes, so the set must stay in sync with the CLI contract.
enum class ErrorCategory {
  parse,       ///< malformed input text
  validation,  ///< well-formed input violating a structural or range constraint
  domain,      ///< operation argument outside its mathematical domain
  io,          ///< file system failure
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, std::string message)
      : std::runtime_error(std::move(message)), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

inline const char* to_string(ErrorCategory category) noexcept {
  switch (category) {
    case ErrorCategory::parse: return "parse";
    case ErrorCategory::validation: return "validation";
    case ErrorCategory::domain: return "domain";
    case ErrorCategory::io: return "io";
  }
  return "unknown";
}

}  // namespace bnses
