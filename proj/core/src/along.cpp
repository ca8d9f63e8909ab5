#include "ringinv/along.hpp"

#include "ringinv/errors.hpp"
#include "ringinv/literal.hpp"
#include "ringinv/regular.hpp"

#include <algorithm>

namespace ringinv {

std::optional<Element> ideal_membership(const Element& b, const Element& d, Side side) {
    require_same_ring(b, d);
    if (b.is_residue()) {
        for (const Element& w : enumerate(b.ring())) {
            if ((side == Side::left ? w * d : d * w) == b) {
                return w;
            }
        }
        return std::nullopt;
    }
    auto w = side == Side::left ? solve_left(d.matrix(), b.matrix()) : solve_right(d.matrix(), b.matrix());
    if (!w) {
        return std::nullopt;
    }
    return Element::from_matrix(std::move(*w));
}

namespace {

bool sided_equation_holds(const Element& b, const Element& a, const Element& d, Side side) {
    return side == Side::left ? b * a * d == d : d * a * b == d;
}

Element sided_candidate(const Element& witness, const Element& d, Side side) {
    return side == Side::left ? witness * d : d * witness;
}

}  // namespace

Outcome<SidedInverse> sided_inverse_along(const Element& a, const Element& d, Side side) {
    require_same_ring(a, d);
    if (a.is_residue()) {
        for (const Element& w : enumerate(a.ring())) {
            Element b = sided_candidate(w, d, side);
            if (sided_equation_holds(b, a, d, side)) {
                return SidedInverse{side, std::move(b), w};
            }
        }
        return Absent{AbsentReason::no_witness};
    }
    const Matrix dad = (d * a * d).matrix();
    auto w = side == Side::left ? solve_left(dad, d.matrix()) : solve_right(dad, d.matrix());
    if (!w) {
        return Absent{AbsentReason::no_witness};
    }
    Element witness = Element::from_matrix(std::move(*w));
    Element b = sided_candidate(witness, d, side);
    return SidedInverse{side, std::move(b), std::move(witness)};
}

std::vector<SidedInverse> all_sided_inverses_along(const Element& a, const Element& d, Side side) {
    require_same_ring(a, d);
    std::vector<SidedInverse> out;
    for (const Element& w : enumerate(a.ring())) {
        Element b = sided_candidate(w, d, side);
        if (!sided_equation_holds(b, a, d, side)) {
            continue;
        }
        bool seen = std::any_of(out.begin(), out.end(), [&](const SidedInverse& s) { return s.b == b; });
        if (!seen) {
            out.push_back({side, std::move(b), w});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const SidedInverse& x, const SidedInverse& y) { return x.b.residue() < y.b.residue(); });
    return out;
}

bool satisfies_along_definition(const Element& b, const Element& a, const Element& d) {
    require_same_ring(a, d);
    require_same_ring(b, d);
    return b * a * d == d && d * a * b == d && ideal_membership(b, d, Side::left) &&
           ideal_membership(b, d, Side::right);
}

Outcome<Element> inverse_along_by_definition(const Element& a, const Element& d) {
    auto left = sided_inverse_along(a, d, Side::left);
    if (!left) {
        return Absent{AbsentReason::no_witness};
    }
    auto right = sided_inverse_along(a, d, Side::right);
    if (!right) {
        return Absent{AbsentReason::no_witness};
    }
    // A left and a right inverse along d always coincide.
    if (left->b != right->b) {
        throw InternalFormulaMismatch("left and right inverses along d differ: " + format_element(left->b) +
                                      " vs " + format_element(right->b));
    }
    return left->b;
}

namespace {

Outcome<AlongInverseResult> evaluate_criterion(const Element& a, const Element& d, const CentralizerMap& sigma,
                                               const Element& d_inner) {
    const RingContext& ring = a.ring();
    const Element one = ring.one();
    Element u = sigma.apply(d * a) + one - d * d_inner;
    Element v = sigma.apply(a * d) + one - d_inner * d;

    auto u_inv = try_unit_inverse(u);
    auto v_inv = try_unit_inverse(v);
    if (u_inv.has_value() != v_inv.has_value()) {
        throw InternalFormulaMismatch("u and v disagree on invertibility for a = " + format_element(a) +
                                      ", d = " + format_element(d));
    }
    if (!u_inv) {
        return Absent{AbsentReason::unit_criterion_failed};
    }
    Element left_witness = sigma.apply(*u_inv);
    Element right_witness = sigma.apply(*v_inv);
    Element b = left_witness * d;
    if (b != d * right_witness || b * a * d != d || d * a * b != d) {
        throw InternalFormulaMismatch("unit-criterion candidate fails the along equations for a = " +
                                      format_element(a) + ", d = " + format_element(d));
    }
    return AlongInverseResult{std::move(b),           std::move(u),      std::move(*u_inv),
                              std::move(v),           std::move(*v_inv), std::move(left_witness),
                              std::move(right_witness), d_inner};
}

void require_inner(const Element& d, const Element& d_inner) {
    require_same_ring(d, d_inner);
    if (d * d_inner * d != d) {
        throw PreconditionFailed(format_element(d_inner) + " is not an inner inverse of " + format_element(d));
    }
}

void require_guard(const CentralizerMap& sigma, SigmaGuard guard) {
    if (!sigma.is_centralizer()) {
        throw NotBijectiveCentralizer("sigma(x) = " + sigma.describe() + " x is not a centralizer");
    }
    if (guard == SigmaGuard::enforce && !sigma.bijective()) {
        throw NotBijectiveCentralizer("sigma(x) = " + sigma.describe() +
                                      " x is not bijective; the unit criterion does not apply");
    }
}

}  // namespace

Outcome<AlongInverseResult> invert_along(const Element& a, const Element& d, const Element& d_inner) {
    require_same_ring(a, d);
    require_inner(d, d_inner);
    return evaluate_criterion(a, d, CentralizerMap::identity(a.ring()), d_inner);
}

Outcome<AlongInverseResult> invert_along(const Element& a, const Element& d) {
    require_same_ring(a, d);
    auto d_inner = try_inner_inverse(d);
    if (!d_inner) {
        return Absent{AbsentReason::not_regular};
    }
    return evaluate_criterion(a, d, CentralizerMap::identity(a.ring()), *d_inner);
}

Outcome<AlongInverseResult> invert_along_sigma(const Element& a, const Element& d, const CentralizerMap& sigma,
                                               const Element& d_inner, SigmaGuard guard) {
    require_same_ring(a, d);
    require_same_ring(a, sigma.scaling_element());
    require_guard(sigma, guard);
    require_inner(d, d_inner);
    return evaluate_criterion(a, d, sigma, d_inner);
}

Outcome<AlongInverseResult> invert_along_sigma(const Element& a, const Element& d, const CentralizerMap& sigma,
                                               SigmaGuard guard) {
    require_same_ring(a, d);
    require_same_ring(a, sigma.scaling_element());
    require_guard(sigma, guard);
    auto d_inner = try_inner_inverse(d);
    if (!d_inner) {
        return Absent{AbsentReason::not_regular};
    }
    return evaluate_criterion(a, d, sigma, *d_inner);
}

bool exists_along(const Element& a, const Element& d) { return invert_along(a, d).has_value(); }

}  // namespace ringinv
