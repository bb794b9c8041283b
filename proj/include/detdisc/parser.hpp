#pragma once

#include "detdisc/poly.hpp"

#include <string>

namespace detdisc {

/// Parse a polynomial in the library's text grammar: variables are
/// identifiers, operators `+ - * ^`, integer and `num/den` rational
/// literals, parentheses; multiplication is always explicit.
Poly parse_poly(const std::string& text, const RingPtr& ring);

/// Canonical text form: terms descending under the ring's canonical order.
/// Inverse of parse_poly on its image.
std::string to_string(const Poly& p);

/// Module elements print as a bracketed component list.
std::string module_to_string(const Poly& p, std::uint32_t rank);

} // namespace detdisc
