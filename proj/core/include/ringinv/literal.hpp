#pragma once

#include "ringinv/ring.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace ringinv {

/// Parses `zmod:<n>` (n >= 1) or `gqmat:<k>` (k >= 1). Throws ParseError.
RingContext parse_ring_spec(std::string_view text);

/// Element literal grammar:
///   residue: optional sign and decimal digits, reduced mod n
///   matrix:  `[[e,e],[e,e]]` with entries `p`, `p/q`, `r/si`, `p/q+r/si`, `i`, `-i`
/// Whitespace between tokens is ignored. Throws ParseError.
Element parse_element(const RingContext& ring, std::string_view text);

GaussianRational parse_gaussian_rational(std::string_view text);

/// Canonical literal; parse_element(ring, format_element(x)) == x.
std::string format_element(const Element& e);

std::ostream& operator<<(std::ostream& os, const Element& e);
std::ostream& operator<<(std::ostream& os, const RingContext& ring);

}  // namespace ringinv
