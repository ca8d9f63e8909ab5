#pragma once

#include "ringinv/centralizer.hpp"
#include "ringinv/outcome.hpp"
#include "ringinv/ring.hpp"

#include <optional>
#include <vector>

namespace ringinv {

enum class Side { left, right };

/// A one-sided inverse of a along d.
///   left:  b a d = d, b = witness * d
///   right: d a b = d, b = d * witness
struct SidedInverse {
    Side side;
    Element b;
    Element witness;
};

/// The inverse of a along d with the certificates of the unit criterion.
///
/// Invariants: b a d = d = d a b; b = left_witness * d = d * right_witness;
/// u, v are units with the given inverses. For the centralizer route
/// left_witness = sigma(u^-1) and right_witness = sigma(v^-1).
struct AlongInverseResult {
    Element b;
    Element u;
    Element u_inv;
    Element v;
    Element v_inv;
    Element left_witness;
    Element right_witness;
    Element d_inner;  // the inner inverse of d the criterion was evaluated with
};

/// x with b = x d (left) or y with b = d y (right). Z_n: smallest witness by
/// exhaustive search; matrices: exact linear solve, free unknowns zero.
std::optional<Element> ideal_membership(const Element& b, const Element& d, Side side);

/// Definitional one-sided inverse. Z_n: smallest witness; matrices: linear
/// solve of x (d a d) = d (left) or (d a d) y = d (right).
Outcome<SidedInverse> sided_inverse_along(const Element& a, const Element& d, Side side);

/// Every distinct one-sided inverse b in a finite ring, ascending by b, each
/// with its smallest witness. Throws NotFinite for matrix rings.
std::vector<SidedInverse> all_sided_inverses_along(const Element& a, const Element& d, Side side);

/// b a d = d = d a b and b in Rd and dR (membership decided by ideal_membership).
bool satisfies_along_definition(const Element& b, const Element& a, const Element& d);

/// a^||d via the left and right definitional inverses, which must coincide.
/// Independent of the unit criterion.
Outcome<Element> inverse_along_by_definition(const Element& a, const Element& d);

/// Unit criterion with the canonical inner inverse of d:
/// u = da + 1 - dd^-, v = ad + 1 - d^-d, a^||d = u^-1 d = d v^-1.
Outcome<AlongInverseResult> invert_along(const Element& a, const Element& d);

/// Same criterion evaluated with a caller-chosen inner inverse of d.
/// Throws PreconditionFailed unless d d_inner d = d.
Outcome<AlongInverseResult> invert_along(const Element& a, const Element& d, const Element& d_inner);

/// enforce: sigma must be a bijective centralizer (NotBijectiveCentralizer
/// otherwise). bypass: only the centralizer laws are required, so the
/// non-bijective failure of the criterion can be reproduced.
enum class SigmaGuard { enforce, bypass };

/// Centralizer form: u = sigma(da) + 1 - dd^-, v = sigma(ad) + 1 - d^-d,
/// a^||d = sigma(u^-1) d = d sigma(v^-1).
Outcome<AlongInverseResult> invert_along_sigma(const Element& a, const Element& d, const CentralizerMap& sigma,
                                               SigmaGuard guard = SigmaGuard::enforce);
Outcome<AlongInverseResult> invert_along_sigma(const Element& a, const Element& d, const CentralizerMap& sigma,
                                               const Element& d_inner, SigmaGuard guard = SigmaGuard::enforce);

bool exists_along(const Element& a, const Element& d);

}  // namespace ringinv
