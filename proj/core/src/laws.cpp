#include "ringinv/laws.hpp"

#include "ringinv/classical.hpp"
#include "ringinv/errors.hpp"
#include "ringinv/literal.hpp"
#include "ringinv/regular.hpp"

#include <algorithm>
#include <type_traits>
#include <utility>

namespace ringinv {

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::violated: return "violated";
        case Verdict::hypotheses_unmet: return "hypotheses-unmet";
    }
    return "unknown";
}

namespace {

constexpr std::pair<Hypothesis, std::string_view> kHypothesisNames[] = {
    {Hypothesis::sigma_bijective, "sigma-bijective"},
    {Hypothesis::d1_eq_sigma_d2, "d1-eq-sigma-d2"},
    {Hypothesis::a_eq_sigma_b, "a-eq-sigma-b"},
    {Hypothesis::an_eq_sigma_bm, "an-eq-sigma-bm"},
    {Hypothesis::astar_eq_sigma_bstar, "astar-eq-sigma-bstar"},
    {Hypothesis::a_eq_sigma_bstar, "a-eq-sigma-bstar"},
    {Hypothesis::ad_eq_sigma_da, "ad-eq-sigma-da"},
};

}  // namespace

std::string_view to_string(Hypothesis h) noexcept {
    for (const auto& [id, name] : kHypothesisNames) {
        if (id == h) {
            return name;
        }
    }
    return "unknown";
}

std::optional<Hypothesis> parse_hypothesis(std::string_view text) {
    for (const auto& [id, name] : kHypothesisNames) {
        if (name == text) {
            return id;
        }
    }
    if (text == "ad-eq-da") {
        return Hypothesis::ad_eq_sigma_da;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Jacobson completion

Element jacobson_complete(const Element& a, const Element& b, const Element& c, Side side) {
    require_same_ring(a, b);
    require_same_ring(a, c);
    const Element one = a.ring().one();
    const Element one_ab = one + a * b;
    const Element one_ba = one + b * a;
    if ((side == Side::left ? one_ab * c : c * one_ab) != one) {
        throw PreconditionFailed(side == Side::left ? "(1 + ab) c != 1" : "c (1 + ab) != 1");
    }
    Element r = one - b * c * a;
    if ((side == Side::left ? one_ba * r : r * one_ba) != one) {
        throw InternalFormulaMismatch("Jacobson completion failed for a = " + format_element(a) +
                                      ", b = " + format_element(b));
    }
    return r;
}

Element jacobson_inverse(const Element& a, const Element& b) {
    const Element c = unit_inverse(a.ring().one() + a * b);
    return a.ring().one() - b * c * a;
}

namespace {

// Accumulates hypotheses and sub-identities into a LawReport.
class Check {
public:
    Check(std::string_view law, std::vector<Element> inputs, const CentralizerMap* sigma = nullptr) {
        report_.law = std::string(law);
        report_.inputs = std::move(inputs);
        if (sigma) {
            report_.sigma = sigma->scaling_element();
        }
    }

    void unmet(const std::string& why) {
        if (met_) {
            met_ = false;
            report_.certificate = why;
        }
    }
    bool met() const noexcept { return met_; }

    void headline(std::optional<Element> lhs, std::optional<Element> rhs) {
        if (!failed_) {
            report_.lhs = std::move(lhs);
            report_.rhs = std::move(rhs);
        }
    }

    /// Records the first diverging sub-identity. Returns whether it held.
    bool expect_equal(const std::optional<Element>& lhs, const std::optional<Element>& rhs,
                      std::string_view label) {
        if (lhs == rhs) {
            return true;
        }
        if (!failed_) {
            failed_ = true;
            report_.lhs = lhs;
            report_.rhs = rhs;
            report_.certificate = std::string(label) + ": " + show(lhs) + " != " + show(rhs);
        }
        return false;
    }

    LawReport finish() {
        report_.hypotheses_met = met_;
        if (!met_) {
            report_.verdict = Verdict::hypotheses_unmet;
        } else if (failed_) {
            report_.verdict = Verdict::violated;
        } else {
            report_.verdict = Verdict::holds;
        }
        return std::move(report_);
    }

    static std::string show(const std::optional<Element>& e) { return e ? format_element(*e) : "absent"; }

private:
    LawReport report_;
    bool met_ = true;
    bool failed_ = false;
};

std::optional<Element> along_value(const Element& a, const Element& d) {
    auto r = invert_along(a, d);
    if (!r) {
        return std::nullopt;
    }
    return r->b;
}

template <class T>
std::optional<Element> value_of(const Outcome<T>& o) {
    if (!o) {
        return std::nullopt;
    }
    if constexpr (std::is_same_v<T, Element>) {
        return *o;
    } else {
        return o->b;
    }
}

bool dropped_has(const HypothesisSet& dropped, Hypothesis h) { return dropped.count(h) > 0; }

void require_bijective_sigma(Check& check, const CentralizerMap& sigma, const HypothesisSet& dropped) {
    if (!dropped_has(dropped, Hypothesis::sigma_bijective) && !sigma.is_bijective_centralizer()) {
        check.unmet("sigma(x) = " + sigma.describe() + " x is not a bijective centralizer");
    }
}

// a_l a b_r = b_r and a_l b b_r = a_l.
void products_identities(Check& check, const Element& a, const Element& b, const Element& al, const Element& br,
                         std::string_view tag) {
    check.expect_equal(al * a * br, br, std::string(tag) + " left(a) a right(b) = right(b)");
    check.expect_equal(al * b * br, al, std::string(tag) + " left(a) b right(b) = left(a)");
}

void absorption_identity(Check& check, const Element& a, const Element& b, const Element& al, const Element& br,
                         std::string_view tag) {
    products_identities(check, a, b, al, br, tag);
    check.expect_equal(al + br, al * (a + b) * br, std::string(tag) + " absorption");
}

struct SidedQuad {
    std::optional<Element> a_left, a_right, b_left, b_right;
};

SidedQuad sided_quad(const Element& a, const Element& b, const Element& d) {
    auto get = [&](const Element& x, Side s) -> std::optional<Element> {
        auto r = sided_inverse_along(x, d, s);
        if (!r) {
            return std::nullopt;
        }
        return r->b;
    };
    return {get(a, Side::left), get(a, Side::right), get(b, Side::left), get(b, Side::right)};
}

}  // namespace

LawReport check_sided_products_with(const Element& a, const Element& b, const Element& a_left,
                                    const Element& b_right) {
    Check check("sided-products", {a, b, a_left, b_right});
    check.headline(a_left * a * b_right, b_right);
    products_identities(check, a, b, a_left, b_right, "(i)");
    return check.finish();
}

LawReport check_sided_products(const Element& a, const Element& b, const Element& d) {
    Check check("sided-products", {a, b, d});
    const SidedQuad q = sided_quad(a, b, d);
    const bool first = q.a_left && q.b_right;
    const bool second = q.a_right && q.b_left;
    if (!first && !second) {
        check.unmet("neither (left of a, right of b) nor (right of a, left of b) along d exists");
        return check.finish();
    }
    if (first) {
        check.headline(*q.a_left * a * *q.b_right, *q.b_right);
        products_identities(check, a, b, *q.a_left, *q.b_right, "(i)");
    } else {
        check.headline(*q.b_left * b * *q.a_right, *q.a_right);
    }
    if (second) {
        products_identities(check, b, a, *q.b_left, *q.a_right, "(ii)");
    }
    return check.finish();
}

LawReport check_absorption_one_sided_with(const Element& a, const Element& b, const Element& a_left,
                                          const Element& b_right) {
    Check check("absorption-one-sided", {a, b, a_left, b_right});
    check.headline(a_left + b_right, a_left * (a + b) * b_right);
    absorption_identity(check, a, b, a_left, b_right, "(i)");
    return check.finish();
}

LawReport check_absorption_one_sided(const Element& a, const Element& b, const Element& d) {
    Check check("absorption-one-sided", {a, b, d});
    const SidedQuad q = sided_quad(a, b, d);
    const bool first = q.a_left && q.b_right;
    const bool second = q.a_right && q.b_left;
    if (!first && !second) {
        check.unmet("neither (left of a, right of b) nor (right of a, left of b) along d exists");
        return check.finish();
    }
    if (first) {
        check.headline(*q.a_left + *q.b_right, *q.a_left * (a + b) * *q.b_right);
        absorption_identity(check, a, b, *q.a_left, *q.b_right, "(i)");
    } else {
        check.headline(*q.a_right + *q.b_left, *q.b_left * (a + b) * *q.a_right);
    }
    if (second) {
        // a_r + b_l = b_l (a + b) a_r is the first form with a and b exchanged.
        absorption_identity(check, b, a, *q.b_left, *q.a_right, "(ii)");
    }
    return check.finish();
}

LawReport check_absorption(const Element& a, const Element& b, const Element& d) {
    Check check("absorption", {a, b, d});
    auto ad = along_value(a, d);
    auto bd = along_value(b, d);
    if (!ad) {
        check.unmet("a is not invertible along d");
    }
    if (!bd) {
        check.unmet("b is not invertible along d");
    }
    if (ad && bd) {
        check.headline(*ad + *bd, *ad * (a + b) * *bd);
        check.expect_equal(*ad + *bd, *ad * (a + b) * *bd, "absorption");
    }
    return check.finish();
}

LawReport check_absorption_cross(const Element& a, const Element& b, const Element& d1, const Element& d2,
                                 const CentralizerMap& sigma, const HypothesisSet& dropped) {
    Check check("absorption-cross", {a, b, d1, d2}, &sigma);
    require_bijective_sigma(check, sigma, dropped);
    if (!dropped_has(dropped, Hypothesis::d1_eq_sigma_d2) && d1 != sigma.apply(d2)) {
        check.unmet("d1 != sigma(d2)");
    }
    auto a1 = along_value(a, d1);
    auto b2 = along_value(b, d2);
    if (!a1) {
        check.unmet("a is not invertible along d1");
    }
    if (!b2) {
        check.unmet("b is not invertible along d2");
    }
    if (a1 && b2) {
        const Element lhs = *a1 + *b2;
        const Element rhs = *a1 * (a + b) * *b2;
        check.headline(lhs, rhs);
        if (check.met()) {
            check.expect_equal(lhs, rhs, "cross absorption");
        }
    }
    return check.finish();
}

namespace {

std::optional<std::pair<std::uint64_t, std::uint64_t>> find_linked_powers(const Element& a, const Element& b,
                                                                          const CentralizerMap& sigma) {
    const std::uint64_t bound = std::max(drazin_scan_bound(a), drazin_scan_bound(b)) + 1;
    for (std::uint64_t n = 1; n <= bound; ++n) {
        const Element an = power(a, n);
        for (std::uint64_t m = 1; m <= bound; ++m) {
            if (an == sigma.apply(power(b, m))) {
                return std::pair{n, m};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

LawReport check_absorption_preset(AbsorptionPreset preset, const Element& a, const Element& b,
                                  const CentralizerMap& sigma, const HypothesisSet& dropped) {
    static constexpr std::string_view kNames[] = {"absorption-group", "absorption-drazin", "absorption-mp",
                                                  "absorption-mixed"};
    Check check(kNames[static_cast<int>(preset)], {a, b}, &sigma);
    require_bijective_sigma(check, sigma, dropped);

    std::optional<Element> ai;
    std::optional<Element> bi;
    switch (preset) {
        case AbsorptionPreset::group:
            if (!dropped_has(dropped, Hypothesis::a_eq_sigma_b) && a != sigma.apply(b)) {
                check.unmet("a != sigma(b)");
            }
            ai = value_of(group_inverse(a));
            bi = value_of(group_inverse(b));
            break;
        case AbsorptionPreset::drazin:
            if (!dropped_has(dropped, Hypothesis::an_eq_sigma_bm)) {
                if (!find_linked_powers(a, b, sigma)) {
                    check.unmet("no n, m with a^n = sigma(b^m)");
                }
            }
            ai = value_of(drazin_inverse(a));
            bi = value_of(drazin_inverse(b));
            break;
        case AbsorptionPreset::moore_penrose:
            if (!dropped_has(dropped, Hypothesis::astar_eq_sigma_bstar) &&
                involution(a) != sigma.apply(involution(b))) {
                check.unmet("a* != sigma(b*)");
            }
            ai = value_of(moore_penrose(a));
            bi = value_of(moore_penrose(b));
            break;
        case AbsorptionPreset::mixed:
            if (!dropped_has(dropped, Hypothesis::a_eq_sigma_bstar) && a != sigma.apply(involution(b))) {
                check.unmet("a != sigma(b*)");
            }
            ai = value_of(group_inverse(a));
            bi = value_of(moore_penrose(b));
            break;
    }
    if (!ai) {
        check.unmet("the inverse of a does not exist");
    }
    if (!bi) {
        check.unmet("the inverse of b does not exist");
    }
    if (ai && bi) {
        const Element lhs = *ai + *bi;
        const Element rhs = *ai * (a + b) * *bi;
        check.headline(lhs, rhs);
        if (check.met()) {
            check.expect_equal(lhs, rhs, "absorption");
        }
    }
    return check.finish();
}

LawReport check_commutation(const Element& a, const Element& d, const CentralizerMap& sigma,
                            const HypothesisSet& dropped) {
    Check check("commutation", {a, d}, &sigma);
    require_bijective_sigma(check, sigma, dropped);
    if (!dropped_has(dropped, Hypothesis::ad_eq_sigma_da) && a * d != sigma.apply(d * a)) {
        check.unmet("ad != sigma(da)");
    }
    auto x = along_value(a, d);
    if (!x) {
        check.unmet("a is not invertible along d");
        return check.finish();
    }
    check.headline(*x * a, a * *x);
    if (check.met()) {
        check.expect_equal(*x * a, a * *x, "a^||d a = a a^||d");
    }
    return check.finish();
}

LawReport check_reverse_order(const Element& a, const Element& b, const Element& d, const CentralizerMap& sigma,
                              const HypothesisSet& dropped) {
    Check check("reverse-order", {a, b, d}, &sigma);
    require_bijective_sigma(check, sigma, dropped);
    if (!dropped_has(dropped, Hypothesis::ad_eq_sigma_da) && a * d != sigma.apply(d * a)) {
        check.unmet("ad != sigma(da)");
    }
    auto ad = along_value(a, d);
    auto bd = along_value(b, d);
    if (!ad) {
        check.unmet("a is not invertible along d");
    }
    if (!bd) {
        check.unmet("b is not invertible along d");
    }
    if (!ad || !bd) {
        return check.finish();
    }
    auto abd = along_value(a * b, d);
    auto bad = along_value(b * a, d);
    check.headline(abd, *bd * *ad);
    if (check.met()) {
        check.expect_equal(abd, *bd * *ad, "(ab)^||d = b^||d a^||d");
        check.expect_equal(bad, *ad * *bd, "(ba)^||d = a^||d b^||d");
    }
    return check.finish();
}

LawReport check_shift_invariance(const Element& a, const Element& d, const CentralizerMap& sigma,
                                 const HypothesisSet& dropped) {
    Check check("shift-invariance", {a, d}, &sigma);
    require_bijective_sigma(check, sigma, dropped);
    auto base = along_value(a, d);
    auto shifted_d = along_value(a, sigma.apply(d));
    auto shifted_a = along_value(sigma.apply(a), d);
    check.headline(shifted_d, base);
    if (!check.met()) {
        return check.finish();
    }
    check.expect_equal(shifted_d, base, "a^||sigma(d) = a^||d");
    if (sigma.bijective()) {
        std::optional<Element> expected;
        if (base) {
            expected = sigma.inverse_apply(*base);
        }
        check.expect_equal(shifted_a, expected, "sigma(a)^||d = sigma^-1(a^||d)");
    } else if (shifted_a.has_value() != base.has_value()) {
        check.expect_equal(shifted_a, base, "sigma(a)^||d exists iff a^||d exists");
    }
    return check.finish();
}

LawReport check_jacobson(const Element& a, const Element& b) {
    Check check("jacobson", {a, b});
    const Element one = a.ring().one();
    const Element one_ab = one + a * b;
    const Element one_ba = one + b * a;
    auto ab_inv = try_unit_inverse(one_ab);
    auto ba_inv = try_unit_inverse(one_ba);

    std::optional<Element> formula;
    if (ab_inv) {
        formula = one - b * *ab_inv * a;
    }
    check.headline(ba_inv, formula);
    check.expect_equal(ba_inv, formula, "(1 + ba)^-1 = 1 - b (1 + ab)^-1 a");

    std::vector<Element> candidates;
    if (a.ring().is_finite()) {
        candidates = enumerate(a.ring());
    } else if (ab_inv) {
        candidates.push_back(*ab_inv);
    }
    for (const Element& c : candidates) {
        const Element r = one - b * c * a;
        if (one_ab * c == one) {
            check.expect_equal(one_ba * r, one, "(1 + ab) c = 1 implies (1 + ba)(1 - bca) = 1");
        }
        if (c * one_ab == one) {
            check.expect_equal(r * one_ba, one, "c (1 + ab) = 1 implies (1 - bca)(1 + ba) = 1");
        }
    }
    return check.finish();
}

LawReport check_along_sigma_criterion(const Element& a, const Element& d, const CentralizerMap& sigma,
                                      const HypothesisSet& dropped) {
    Check check("along-sigma-criterion", {a, d}, &sigma);
    const bool bypass = dropped_has(dropped, Hypothesis::sigma_bijective);
    if (!sigma.is_centralizer()) {
        check.unmet("sigma(x) = " + sigma.describe() + " x is not a centralizer");
    } else if (!bypass && !sigma.bijective()) {
        check.unmet("sigma(x) = " + sigma.describe() + " x is not bijective");
    }
    if (!is_regular(d)) {
        check.unmet("d is not regular");
    }
    auto truth = value_of(inverse_along_by_definition(a, d));
    if (!check.met()) {
        check.headline(truth, std::nullopt);
        return check.finish();
    }

    std::vector<Element> inners;
    if (d.ring().is_finite()) {
        inners = all_inner_inverses(d);
    } else {
        inners.push_back(inner_inverse(d));
    }
    const SigmaGuard guard = bypass ? SigmaGuard::bypass : SigmaGuard::enforce;
    bool first = true;
    for (const Element& d_inner : inners) {
        auto crit = invert_along_sigma(a, d, sigma, d_inner, guard);
        std::optional<Element> value;
        if (crit) {
            value = crit->b;
        }
        if (first) {
            check.headline(truth, value);
            first = false;
        }
        if (!check.expect_equal(truth, value, "criterion with d^- = " + format_element(d_inner))) {
            break;
        }
    }
    return check.finish();
}

}  // namespace ringinv
