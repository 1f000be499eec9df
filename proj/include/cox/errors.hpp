#pragma once

#include <stdexcept>
#include <string>

namespace cox {

// Malformed input files, words with bad letters, asymmetric matrices, ...
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An operation was called outside its stated domain (e.g. centre assertion
// on a non-indefinite system).
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap was hit.  Thrown only where the contract makes
// budget overrun an error; searches that treat it as an outcome return a
// variant instead.
class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cox
