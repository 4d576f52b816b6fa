#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "molq/term.hpp"

namespace molq {

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position(position) {}
    std::size_t position;
};

/// Grammar: identifiers [A-Za-z_][A-Za-z0-9_]*, constants 0 and 1, postfix '
/// (tightest, left-stacking), infix & over |, both left-associative,
/// parentheses, insignificant whitespace.
TermPtr parse(std::string_view text);

}  // namespace molq
