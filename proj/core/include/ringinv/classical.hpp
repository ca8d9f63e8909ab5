#pragma once

#include "ringinv/along.hpp"
#include "ringinv/centralizer.hpp"
#include "ringinv/outcome.hpp"
#include "ringinv/ring.hpp"

#include <cstdint>
#include <optional>

namespace ringinv {

/// a^D with its Drazin index and the power at which the criterion fired.
/// Invariants: ab = ba, b^2 a = b, a^index = a^(index+1) b, index minimal.
struct DrazinResult {
    Element b;
    std::uint64_t index;
    std::uint64_t n_used;
};

/// Optional centralizer argument; absent means sigma = identity.
using OptionalSigma = std::optional<CentralizerMap>;

/// a^# = sigma(u^-1) a with u = sigma(a^2) + 1 - a a^-.
/// Throws NotBijectiveCentralizer for a sigma that is not a bijective centralizer.
Outcome<Element> group_inverse(const Element& a, const OptionalSigma& sigma = std::nullopt);

/// Scans n = 1, 2, ... up to drazin_scan_bound(a) for the first n where a^n
/// is regular and u = sigma(a^(n+1)) + 1 - a^n (a^n)^- is a unit, then
/// returns b = sigma(u^-1) a^n.
Outcome<DrazinResult> drazin_inverse(const Element& a, const OptionalSigma& sigma = std::nullopt);

/// Matrices: the dimension k. Z_n: the index at which the power sequence
/// a, a^2, ... enters its cycle (at least 1).
std::uint64_t drazin_scan_bound(const Element& a);

/// a^dagger = a* (sigma(u^-1))^2 a a* with u = sigma(a a*) + 1 - a a^-.
/// The candidate is checked against all four Penrose equations; a failure
/// raises InternalFormulaMismatch.
Outcome<Element> moore_penrose(const Element& a, const OptionalSigma& sigma = std::nullopt);

/// a* (sigma(u_l))^2 a a*, for a left inverse u_l of u = sigma(a a*) + 1 - a a^-.
Element moore_penrose_from_u(const Element& a, const Element& u_left_inv, const CentralizerMap& sigma);
/// a* a (sigma(v_r))^2 a*, for a right inverse v_r of v = sigma(a* a) + 1 - a^- a.
Element moore_penrose_from_v(const Element& a, const Element& v_right_inv, const CentralizerMap& sigma);
/// (y a)* a (y a)* with y = sigma(u_l).
Element moore_penrose_alternate(const Element& a, const Element& u_left_inv, const CentralizerMap& sigma);

/// v_r^-1 = 1 - (sigma(a*) - a^-) u_r^-1 a, obtained from a right inverse of
/// u through jacobson_complete.
Element v_right_inverse_from_u(const Element& a, const Element& a_inner, const Element& u_right_inv,
                               const CentralizerMap& sigma);

/// Moore-Penrose inverse from a one-sided inverse of u.
///   left:  u_l with u_l u = 1, a^dagger = a* (sigma(u_l))^2 a a*
///   right: u_r with u u_r = 1, converted to v_r, a^dagger = a* a (sigma(v_r))^2 a*
Outcome<Element> mp_one_sided(const Element& a, Side side, const OptionalSigma& sigma = std::nullopt);

enum class Specialization { group, drazin, moore_penrose };

/// a^||a, a^||a^n, a^||a* via the plain unit criterion. n is used only for
/// Specialization::drazin.
Outcome<Element> inverse_along_specialization(const Element& a, Specialization which, std::uint64_t n = 1);

}  // namespace ringinv
