#pragma once

#include <stdexcept>
#include <string>

namespace hallq {

// Exit codes used by the command line tool.
enum ExitCode { kExitOk = 0, kExitGuard = 2, kExitValidation = 3, kExitInput = 4 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A brute-force enumeration or Hom search would exceed the configured bound.
struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computed quantity disagreed with an independent check.
struct ValidationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A structural expectation failed (bad tame data, missing tube simple, ...).
struct TheoryViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hallq
