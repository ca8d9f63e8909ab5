#include "ringinv/classical.hpp"

#include "ringinv/errors.hpp"
#include "ringinv/jacobson.hpp"
#include "ringinv/literal.hpp"
#include "ringinv/regular.hpp"

#include <vector>

namespace ringinv {

namespace {

CentralizerMap resolve_sigma(const Element& a, const OptionalSigma& sigma) {
    if (!sigma) {
        return CentralizerMap::identity(a.ring());
    }
    require_same_ring(a, sigma->scaling_element());
    if (!sigma->is_bijective_centralizer()) {
        throw NotBijectiveCentralizer("sigma(x) = " + sigma->describe() + " x is not a bijective centralizer");
    }
    return *sigma;
}

[[noreturn]] void mismatch(const char* what, const Element& a, const Element& candidate) {
    throw InternalFormulaMismatch(std::string(what) + " for a = " + format_element(a) +
                                  ": candidate " + format_element(candidate));
}

bool drazin_axioms_hold(const Element& a, const Element& b, std::uint64_t k) {
    return a * b == b * a && b * b * a == b && power(a, k) == power(a, k + 1) * b;
}

}  // namespace

Outcome<Element> group_inverse(const Element& a, const OptionalSigma& sigma) {
    const CentralizerMap s = resolve_sigma(a, sigma);
    auto a_inner = try_inner_inverse(a);
    if (!a_inner) {
        return Absent{AbsentReason::not_regular};
    }
    const Element u = s.apply(a * a) + a.ring().one() - a * *a_inner;
    auto u_inv = try_unit_inverse(u);
    if (!u_inv) {
        return Absent{AbsentReason::unit_criterion_failed};
    }
    Element b = s.apply(*u_inv) * a;
    if (!drazin_axioms_hold(a, b, 1)) {
        mismatch("group inverse formula", a, b);
    }
    return b;
}

std::uint64_t drazin_scan_bound(const Element& a) {
    if (!a.is_residue()) {
        return a.ring().dimension();
    }
    std::vector<Element> powers;
    Element p = a;
    while (true) {
        for (std::size_t j = 0; j < powers.size(); ++j) {
            if (powers[j] == p) {
                return j + 1;
            }
        }
        powers.push_back(p);
        p = p * a;
    }
}

Outcome<DrazinResult> drazin_inverse(const Element& a, const OptionalSigma& sigma) {
    const CentralizerMap s = resolve_sigma(a, sigma);
    const Element one = a.ring().one();
    const std::uint64_t bound = drazin_scan_bound(a);

    Element an = a;
    for (std::uint64_t n = 1; n <= bound; ++n, an = an * a) {
        auto an_inner = try_inner_inverse(an);
        if (!an_inner) {
            continue;
        }
        const Element u = s.apply(an * a) + one - an * *an_inner;
        auto u_inv = try_unit_inverse(u);
        if (!u_inv) {
            continue;
        }
        Element b = s.apply(*u_inv) * an;
        if (a * b != b * a || b * b * a != b) {
            mismatch("Drazin formula", a, b);
        }
        for (std::uint64_t k = 1; k <= n; ++k) {
            if (power(a, k) == power(a, k + 1) * b) {
                return DrazinResult{std::move(b), k, n};
            }
        }
        mismatch("Drazin formula (no index <= n)", a, b);
    }
    return Absent{AbsentReason::bound_exhausted};
}

Element moore_penrose_from_u(const Element& a, const Element& u_left_inv, const CentralizerMap& sigma) {
    const Element a_star = involution(a);
    const Element y = sigma.apply(u_left_inv);
    return a_star * y * y * a * a_star;
}

Element moore_penrose_from_v(const Element& a, const Element& v_right_inv, const CentralizerMap& sigma) {
    const Element a_star = involution(a);
    const Element x = sigma.apply(v_right_inv);
    return a_star * a * x * x * a_star;
}

Element moore_penrose_alternate(const Element& a, const Element& u_left_inv, const CentralizerMap& sigma) {
    const Element ya_star = involution(sigma.apply(u_left_inv) * a);
    return ya_star * a * ya_star;
}

Element v_right_inverse_from_u(const Element& a, const Element& a_inner, const Element& u_right_inv,
                               const CentralizerMap& sigma) {
    // u = 1 + a (sigma(a*) - a^-) and v = 1 + (sigma(a*) - a^-) a.
    const Element shift = sigma.apply(involution(a)) - a_inner;
    return jacobson_complete(a, shift, u_right_inv, Side::left);
}

namespace {

struct MpSetup {
    Element a_inner;
    Element u;
};

std::optional<MpSetup> mp_setup(const Element& a, const CentralizerMap& s) {
    auto a_inner = try_inner_inverse(a);
    if (!a_inner) {
        return std::nullopt;
    }
    Element u = s.apply(a * involution(a)) + a.ring().one() - a * *a_inner;
    return MpSetup{*a_inner, std::move(u)};
}

Element penrose_validated(const Element& a, Element candidate, const char* route) {
    if (!penrose_check(a, candidate).is_moore_penrose()) {
        mismatch(route, a, candidate);
    }
    return candidate;
}

}  // namespace

Outcome<Element> moore_penrose(const Element& a, const OptionalSigma& sigma) {
    const CentralizerMap s = resolve_sigma(a, sigma);
    auto setup = mp_setup(a, s);
    if (!setup) {
        return Absent{AbsentReason::not_regular};
    }
    auto u_inv = try_unit_inverse(setup->u);
    if (!u_inv) {
        return Absent{AbsentReason::unit_criterion_failed};
    }
    return penrose_validated(a, moore_penrose_from_u(a, *u_inv, s), "Moore-Penrose formula");
}

Outcome<Element> mp_one_sided(const Element& a, Side side, const OptionalSigma& sigma) {
    const CentralizerMap s = resolve_sigma(a, sigma);
    auto setup = mp_setup(a, s);
    if (!setup) {
        return Absent{AbsentReason::not_regular};
    }
    if (side == Side::left) {
        auto u_left = try_left_inverse(setup->u);
        if (!u_left) {
            return Absent{AbsentReason::unit_criterion_failed};
        }
        return penrose_validated(a, moore_penrose_from_u(a, *u_left, s), "Moore-Penrose formula (left)");
    }
    auto u_right = try_right_inverse(setup->u);
    if (!u_right) {
        return Absent{AbsentReason::unit_criterion_failed};
    }
    const Element v_right = v_right_inverse_from_u(a, setup->a_inner, *u_right, s);
    return penrose_validated(a, moore_penrose_from_v(a, v_right, s), "Moore-Penrose formula (right)");
}

Outcome<Element> inverse_along_specialization(const Element& a, Specialization which, std::uint64_t n) {
    Element d = a;
    switch (which) {
        case Specialization::group: break;
        case Specialization::drazin: d = power(a, n); break;
        case Specialization::moore_penrose: d = involution(a); break;
    }
    auto r = invert_along(a, d);
    if (!r) {
        return Absent{r.reason()};
    }
    return r->b;
}

}  // namespace ringinv
