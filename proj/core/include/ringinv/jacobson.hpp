#pragma once

#include "ringinv/along.hpp"
#include "ringinv/ring.hpp"

namespace ringinv {

/// Completes a one-sided inverse of 1 + ab to one of 1 + ba.
///
/// Side::left expects (1 + ab) c = 1 and returns r = 1 - bca with
/// (1 + ba) r = 1. Side::right expects c (1 + ab) = 1 and returns r = 1 - bca
/// with r (1 + ba) = 1. Throws PreconditionFailed when the stated identity
/// does not hold for the inputs.
Element jacobson_complete(const Element& a, const Element& b, const Element& c, Side side);

/// (1 + ba)^-1 = 1 - b (1 + ab)^-1 a. Throws NotAUnit if 1 + ab is not a unit.
Element jacobson_inverse(const Element& a, const Element& b);

}  // namespace ringinv
