#pragma once

#include <stdexcept>
#include <string>

namespace toda {

// Malformed user input (partition text, rational text, cache file syntax).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid input outside an operation's domain
// (weight mismatch, empty partition where one is required, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// The brute-force oracle refused to start because the estimated work
// exceeds the configured budget.  Never raised mid-enumeration.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// Cache file cannot be used (version mismatch, corrupt line).
struct CacheError : std::runtime_error {
  explicit CacheError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace toda
