#pragma once

#include <stdexcept>
#include <string>

#include "teamlogic/formula.hpp"
#include "teamlogic/profile.hpp"

namespace teamlogic {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg), position(pos) {}
    std::size_t position;  // 1-based character offset into the input
};

struct ProfileViolation : std::runtime_error {
    explicit ProfileViolation(const std::string& msg) : std::runtime_error(msg) {}
};

// Grammar (ASCII). Atoms [a-z][a-z0-9_]* except reserved words. Unary
// prefix (tightest): neg bneg dia box hdia. Infix by decreasing
// precedence: & / and / hand; | / or / hor; gor; -> (right-assoc).
// dep(p1,...,pn ; q) with n >= 0, con(q) == dep(;q). Sugar expanded at
// parse time: top, botbar, box. In the HS profile '&' and '|' map to
// hand/hor; in the nestar profile botbar maps to the NE* strong
// contradiction.
Formula parse(const std::string& text, LogicProfile profile);

// Canonical text; parse(print(f), p) is structurally equal to f for any
// profile p admitting f.
std::string print(const Formula& f);

}  // namespace teamlogic
