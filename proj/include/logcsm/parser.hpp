#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "logcsm/polynomial.hpp"

namespace logcsm {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    size_t position;
};

// Grammar: integers, variable tokens, `+ - * ^ ( )`; `^` takes positive
// integer exponents; implicit multiplication is not allowed.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& varnames);

// Identifiers in order of first appearance; used when a job file omits an
// explicit variable list.
std::vector<std::string> detect_variables(const std::string& text);

}  // namespace logcsm
