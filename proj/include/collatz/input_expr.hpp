#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "collatz/natural.hpp"

namespace collatz {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Grammar: expr := term (('+'|'-') term)? ; term := literal ('^' literal)?.
// Literals are decimal; ',' and '_' digit separators are ignored, whitespace
// is skipped. Evaluation is exact; a result of 0 is rejected.
Natural parse_input(std::string_view text);

}  // namespace collatz
