#include "ringinv/regular.hpp"

#include "ringinv/errors.hpp"

namespace ringinv {

PenroseProfile::PenroseProfile(std::initializer_list<int> equations) {
    for (int e : equations) {
        set(e);
    }
}

std::string PenroseProfile::to_string() const {
    std::string out = "{";
    for (int e = 1; e <= 4; ++e) {
        if (satisfies(e)) {
            if (out.size() > 1) {
                out += ',';
            }
            out += std::to_string(e);
        }
    }
    return out + "}";
}

PenroseProfile penrose_check(const Element& a, const Element& b) {
    require_same_ring(a, b);
    PenroseProfile p;
    const Element ab = a * b;
    const Element ba = b * a;
    if (ab * a == a) {
        p.set(1);
    }
    if (ba * b == b) {
        p.set(2);
    }
    if (involution(ab) == ab) {
        p.set(3);
    }
    if (involution(ba) == ba) {
        p.set(4);
    }
    return p;
}

Outcome<Element> try_inner_inverse(const Element& a) {
    if (a.is_residue()) {
        for (const Element& x : enumerate(a.ring())) {
            if (a * x * a == a) {
                return x;
            }
        }
        return Absent{AbsentReason::not_regular};
    }
    const Matrix& m = a.matrix();
    RankNormalForm nf = rank_normal_form(m);
    return Element::from_matrix(nf.col_ops * rank_projector(m.dim(), nf.rank) * nf.row_ops);
}

Element inner_inverse(const Element& a) {
    auto x = try_inner_inverse(a);
    if (!x) {
        throw NotRegular(a.ring().spec() + ": element is not regular");
    }
    return *x;
}

bool is_regular(const Element& a) { return try_inner_inverse(a).has_value(); }

std::vector<Element> all_inner_inverses(const Element& a) {
    std::vector<Element> out;
    for (const Element& x : enumerate(a.ring())) {
        if (a * x * a == a) {
            out.push_back(x);
        }
    }
    return out;
}

}  // namespace ringinv
