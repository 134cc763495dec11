#pragma once

#include <stdexcept>
#include <string>

namespace cmk {

// Malformed or inconsistent input. The CLI maps this to exit code 1.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A quiver file that could not be parsed. `field` is a JSON pointer to the
// offending value, or empty when the text itself is not valid JSON.
class ParseError : public InputError {
public:
  ParseError(std::string field, std::string detail)
      : InputError(field.empty() ? detail : field + ": " + detail), field_(std::move(field)),
        detail_(std::move(detail)) {}

  const std::string &field() const noexcept { return field_; }
  const std::string &detail() const noexcept { return detail_; }

private:
  std::string field_;
  std::string detail_;
};

// The computation is well-posed but a hypothesis it depends on does not hold
// (or cannot be checked within budget). The CLI maps this to exit code 2.
class Refusal : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public Refusal {
public:
  using Refusal::Refusal;
};

} // namespace cmk
