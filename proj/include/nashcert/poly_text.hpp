#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "nashcert/multi_poly.hpp"

namespace nashcert {

/// Canonical text form, e.g. "t - x1^2 + y1^2", "(1+2i)*t - 1/2i*z1". The
/// zero polynomial renders as "0". Output is a pure function of the terms.
std::string render_poly(const MultiPoly& p);

inline std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << render_poly(p); }

/// Parses the canonical grammar
///
///   poly  := ['-'] term (('+'|'-') term)*
///   term  := coeff ('*' monomial)? | monomial
///   coeff := rational | rational? 'i' | '(' ['-'] rational ('+'|'-') rational 'i' ')'
///   monomial := var ('^' int)? ('*' var ('^' int)?)*
///
/// into the given space, or into the smallest space holding the variables
/// that occur (n = largest index, at least 1) when none is given.
/// Throws ParseError on bad syntax, Error(UnknownVariable) when a variable
/// is missing from the requested space.
MultiPoly parse_poly(const std::string& text, const std::optional<VarSpace>& space = std::nullopt);

}  // namespace nashcert
