#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ccsp/syntax.hpp"

namespace ccsp {

/// Raised for malformed input and for a construct of the wrong process
/// category (a compensation pair where a standard term is required, or the
/// reverse). `position` is the byte offset of the offending lexeme.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::string expected, std::string found);

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::size_t position_;
  std::string expected_;
  std::string found_;
};

/// Operator precedence, tightest first: `%`, `;`, `|>`, `[]`, `||`.
/// Binary operators are left-associative; `%` does not associate.
StdTerm parse_standard(std::string_view text);
CompTerm parse_compensable(std::string_view text);

/// Parses according to `kind`.
AnyTerm parse_term(std::string_view text, TermKind kind);

}  // namespace ccsp
