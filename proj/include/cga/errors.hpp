#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cga {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Geometric failure: degenerate construction, invalid operand, or an empty
/// result where one was required.
struct GeomError : Error {
  using Error::Error;
};

/// Scene or query text error. `code` is a stable diagnostic tag
/// (E_SYNTAX, E_UNKNOWN_REF, E_DIM, E_DEGENERATE, E_DUPLICATE, E_QUERY).
struct ParseError : Error {
  ParseError(std::string code_, int line_, int col_, const std::string& msg)
      : Error(msg), code(std::move(code_)), line(line_), col(col_) {}

  std::string code;
  int line = 0;
  int col = 0;
};

}  // namespace cga
