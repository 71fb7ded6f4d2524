#pragma once

#include <stdexcept>
#include <string>

namespace rex {

// Input and resource errors thrown by the library. The CLI maps these to
// exit codes: usage problems exit 2, budget and overflow problems exit 3.

struct MalformedCartan : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonFiniteType : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownType : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadIndex : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadSyntax : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TypeUnsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InsufficientPoints : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
  long long predicted;
  BudgetExceeded(const std::string& msg, long long predicted_count)
      : std::runtime_error(msg), predicted(predicted_count) {}
};

}  // namespace rex
