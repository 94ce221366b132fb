#pragma once

#include <stdexcept>
#include <string>

namespace graybox {

// All contract violations throw Error. `kind` is a stable machine-checkable
// tag (e.g. "NonDivisorPart", "ShapeMismatch"); `what()` carries the details.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

}  // namespace graybox
