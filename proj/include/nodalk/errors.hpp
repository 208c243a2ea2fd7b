#pragma once

#include <stdexcept>
#include <string>

namespace nodalk {

/// A value violates a type invariant (g_i >= 2, k >= r+1, ...).
class InvariantError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called without the hypotheses its bound depends on.
class HypothesisError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Asserted facts disagree with each other or with the numerics.
class ContradictionError : public std::runtime_error {
public:
  ContradictionError(const std::string& what, std::string first, std::string second)
      : std::runtime_error(what + " [" + first + "] vs [" + second + "]"),
        first_(std::move(first)), second_(std::move(second)) {}

  const std::string& first_source() const { return first_; }
  const std::string& second_source() const { return second_; }

private:
  std::string first_;
  std::string second_;
};

} // namespace nodalk
