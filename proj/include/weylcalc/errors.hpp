#pragma once

#include <stdexcept>
#include <string>

namespace weylcalc {

// Malformed or mismatched input (shape, context, unparsable document).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical hypothesis of an operation is violated. `hypothesis` is a
// short stable identifier that the CLI reports verbatim.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(std::string hypothesis, const std::string& detail)
      : std::runtime_error(hypothesis + ": " + detail), hypothesis_(std::move(hypothesis)) {}
  const std::string& hypothesis() const { return hypothesis_; }

 private:
  std::string hypothesis_;
};

class WallError : public PreconditionError {
 public:
  explicit WallError(const std::string& detail) : PreconditionError("off-wall", detail) {}
};

class RegularityError : public PreconditionError {
 public:
  explicit RegularityError(const std::string& detail) : PreconditionError("regular", detail) {}
};

}  // namespace weylcalc
