#pragma once

#include "dvc/poly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace dvc {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos)
    {
    }
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// Grammar: integer and rational literals, variable names, + - * / ^ and parentheses.
// Division is only by nonzero constants; exponents are nonnegative integer literals.
MultiPoly parse_poly(std::string_view text, const VarList& vars = default_vars());

}  // namespace dvc
