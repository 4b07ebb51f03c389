#ifndef TMODEXT_ERRORS_HPP
#define TMODEXT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tmodext {

// Exit codes reported by the CLI for each error class.
inline constexpr int kExitOk = 0;
inline constexpr int kExitHypothesis = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitInternal = 4;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input fails a documented hypothesis of the requested operation
// (degree ordering, invertible leading matrix, triangular shape, ...).
struct HypothesisError : Error {
  using Error::Error;
};

// Malformed text or JSON input.
struct ParseError : Error {
  int line = 0;
  int col = 0;
  explicit ParseError(const std::string& msg, int line_ = 0, int col_ = 0)
      : Error(msg), line(line_), col(col_) {}
};

// A structural invariant the engine itself guarantees was violated.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace tmodext

#define TMODEXT_CHECK(cond, msg)                       \
  do {                                                 \
    if (!(cond)) throw ::tmodext::InternalError(msg);  \
  } while (0)

#endif
