#pragma once

#include "ringinv/along.hpp"
#include "ringinv/centralizer.hpp"
#include "ringinv/jacobson.hpp"
#include "ringinv/ring.hpp"

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ringinv {

enum class Verdict { holds, violated, hypotheses_unmet };

std::string_view to_string(Verdict v) noexcept;

/// Outcome of checking one identity on one input tuple.
///
/// verdict == holds iff hypotheses_met and lhs == rhs. lhs/rhs carry the
/// headline identity, or the first sub-identity that diverged; they are also
/// filled for hypotheses_unmet reports whenever both sides are computable.
struct LawReport {
    std::string law;
    std::vector<Element> inputs;
    std::optional<Element> sigma;  // scaling element, for laws that take one
    bool hypotheses_met = false;
    std::optional<Element> lhs;
    std::optional<Element> rhs;
    Verdict verdict = Verdict::hypotheses_unmet;
    std::string certificate;
};

/// Side conditions that counterexample search may switch off. A dropped
/// hypothesis is treated as satisfied without being checked.
enum class Hypothesis {
    sigma_bijective,       // sigma is a bijective centralizer
    d1_eq_sigma_d2,        // d1 = sigma(d2)
    a_eq_sigma_b,          // a = sigma(b)
    an_eq_sigma_bm,        // a^n = sigma(b^m) for some n, m
    astar_eq_sigma_bstar,  // a* = sigma(b*)
    a_eq_sigma_bstar,      // a = sigma(b*)
    ad_eq_sigma_da,        // ad = sigma(da)
};

using HypothesisSet = std::set<Hypothesis>;

std::string_view to_string(Hypothesis h) noexcept;
std::optional<Hypothesis> parse_hypothesis(std::string_view text);

// One-sided inverses along the same d.

/// a_l a b_r = b_r and a_l b b_r = a_l for given a_l (left inverse of a along
/// some d) and b_r (right inverse of b along the same d).
LawReport check_sided_products_with(const Element& a, const Element& b, const Element& a_left,
                                    const Element& b_right);

/// The product identities for the canonical one-sided inverses, in both
/// orientations (a_l with b_r, and b_l with a_r).
LawReport check_sided_products(const Element& a, const Element& b, const Element& d);

/// a_l + b_r = a_l (a + b) b_r, plus the product identities it rests on.
LawReport check_absorption_one_sided_with(const Element& a, const Element& b, const Element& a_left,
                                          const Element& b_right);

/// Both orientations: a_l + b_r = a_l(a+b)b_r and a_r + b_l = b_l(a+b)a_r.
LawReport check_absorption_one_sided(const Element& a, const Element& b, const Element& d);

// Two-sided inverses along elements.

/// a^||d + b^||d = a^||d (a + b) b^||d.
LawReport check_absorption(const Element& a, const Element& b, const Element& d);

/// a^||d1 + b^||d2 = a^||d1 (a + b) b^||d2 under d1 = sigma(d2).
LawReport check_absorption_cross(const Element& a, const Element& b, const Element& d1, const Element& d2,
                                 const CentralizerMap& sigma, const HypothesisSet& dropped = {});

enum class AbsorptionPreset {
    group,          // a = sigma(b):            a^# + b^# = a^#(a+b)b^#
    drazin,         // a^n = sigma(b^m):        a^D + b^D = a^D(a+b)b^D
    moore_penrose,  // a* = sigma(b*):          a^+ + b^+ = a^+(a+b)b^+
    mixed,          // a = sigma(b*):           a^# + b^+ = a^#(a+b)b^+
};

/// Absorption for classical inverses linked by sigma. For the Drazin preset
/// the exponents are searched in 1..drazin_scan_bound.
LawReport check_absorption_preset(AbsorptionPreset preset, const Element& a, const Element& b,
                                  const CentralizerMap& sigma, const HypothesisSet& dropped = {});

/// a^||d a = a a^||d under ad = sigma(da).
LawReport check_commutation(const Element& a, const Element& d, const CentralizerMap& sigma,
                            const HypothesisSet& dropped = {});

/// Under ad = sigma(da): (ab)^||d = b^||d a^||d and (ba)^||d = a^||d b^||d,
/// both existing. With sigma = identity this is the commuting case ad = da.
LawReport check_reverse_order(const Element& a, const Element& b, const Element& d, const CentralizerMap& sigma,
                              const HypothesisSet& dropped = {});

/// a^||d exists iff a^||sigma(d) does, with equal values; a^||d exists iff
/// sigma(a)^||d does, with sigma(a)^||d = sigma^-1(a^||d).
LawReport check_shift_invariance(const Element& a, const Element& d, const CentralizerMap& sigma,
                                 const HypothesisSet& dropped = {});

/// 1 + ab is a unit iff 1 + ba is, (1 + ba)^-1 = 1 - b(1 + ab)^-1 a, and in
/// finite rings every one-sided inverse of 1 + ab completes through
/// jacobson_complete.
LawReport check_jacobson(const Element& a, const Element& b);

/// The centralizer unit criterion against the definitional inverse: a^||d
/// exists iff u = sigma(da) + 1 - dd^- is a unit, with equal values. In finite
/// rings every inner inverse of d is tried.
LawReport check_along_sigma_criterion(const Element& a, const Element& d, const CentralizerMap& sigma,
                                      const HypothesisSet& dropped = {});

}  // namespace ringinv
