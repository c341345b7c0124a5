#pragma once

// Text form of polynomials.
//
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := int | var | '(' expr ')'
//   var    := 'x' | 'y' | 'z'          ('a' = extension generator over F_{p^k})
//
// Printing emits graded-lex descending order with explicit '*' and '^'.

#include "pfol/poly.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pfol {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses `text` over `ring` in `nvars` variables (z requires nvars == 3).
SparsePoly parse_poly(std::string_view text, const Ring& ring, int nvars = 2);
std::string print_poly(const SparsePoly& f);

}  // namespace pfol
