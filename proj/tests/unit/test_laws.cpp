#include "helpers.hpp"

#include "ringinv/along.hpp"
#include "ringinv/errors.hpp"
#include "ringinv/jacobson.hpp"
#include "ringinv/laws.hpp"
#include "ringinv/search.hpp"

#include <doctest.h>

using namespace ringinv;
using testing::m2;
using testing::zn;

namespace {

const Element kA = m2("[[1,0],[1,0]]");
const Element kB = m2("[[0,0],[1,1]]");
const Element kD1 = m2("[[1,1],[0,0]]");
const Element kD2 = m2("[[1,1],[1,1]]");

CentralizerMap scale(const Element& c) { return CentralizerMap::scaling(c); }

void check_holds(const LawReport& r, const Element& both) {
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.hypotheses_met);
    REQUIRE(r.lhs.has_value());
    REQUIRE(r.rhs.has_value());
    CHECK(*r.lhs == both);
    CHECK(*r.rhs == both);
}

}  // namespace

TEST_CASE("hypothesis names") {
    for (auto h : {Hypothesis::sigma_bijective, Hypothesis::d1_eq_sigma_d2, Hypothesis::a_eq_sigma_b,
                   Hypothesis::an_eq_sigma_bm, Hypothesis::astar_eq_sigma_bstar, Hypothesis::a_eq_sigma_bstar,
                   Hypothesis::ad_eq_sigma_da}) {
        CHECK(parse_hypothesis(to_string(h)) == h);
    }
    CHECK(parse_hypothesis("ad-eq-da") == Hypothesis::ad_eq_sigma_da);
    CHECK_FALSE(parse_hypothesis("nope").has_value());
    CHECK(to_string(Verdict::hypotheses_unmet) == "hypotheses-unmet");
}

TEST_CASE("one-sided absorption") {
    check_holds(check_absorption_one_sided(zn(9, 7), zn(9, 5), zn(9, 4)), zn(9, 6));
    check_holds(check_absorption_one_sided(zn(5, 1), zn(5, 1), zn(5, 1)), zn(5, 2));
    CHECK(check_absorption_one_sided(zn(4, 1), zn(4, 1), zn(4, 2)).verdict == Verdict::hypotheses_unmet);
    CHECK(check_sided_products(zn(9, 7), zn(9, 5), zn(9, 4)).verdict == Verdict::holds);
}

TEST_CASE("product identities hold for every choice of one-sided inverses") {
    for (std::int64_t n = 2; n <= 6; ++n) {
        const auto all = enumerate(RingContext::modular(n));
        for (const auto& a : all) {
            for (const auto& b : all) {
                for (const auto& d : all) {
                    for (const auto& al : all_sided_inverses_along(a, d, Side::left)) {
                        for (const auto& br : all_sided_inverses_along(b, d, Side::right)) {
                            CHECK(check_sided_products_with(a, b, al.b, br.b).verdict == Verdict::holds);
                            CHECK(check_absorption_one_sided_with(a, b, al.b, br.b).verdict == Verdict::holds);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("two-sided absorption") {
    check_holds(check_absorption(zn(9, 7), zn(9, 5), zn(9, 4)), zn(9, 6));
    CHECK(check_absorption(kA, kA, kD1).verdict == Verdict::holds);
    check_holds(check_absorption(zn(7, 1), zn(7, 1), zn(7, 1)), zn(7, 2));
    check_holds(check_absorption(kA, kA, kD1), m2("[[1,1],[0,0]]"));
}

TEST_CASE("cross absorption") {
    const auto half = scale(m2("[[1/2,0],[0,1/2]]"));
    check_holds(check_absorption_cross(kB, kA, m2("[[1/2,1/2],[0,0]]"), kD1, half), m2("[[3/2,3/2],[0,0]]"));
    check_holds(check_absorption_cross(kB, m2("[[1,0],[0,0]]"), m2("[[1/2,1/2],[0,0]]"), kD1, half),
                m2("[[2,2],[0,0]]"));
    CHECK(invert_along(m2("[[1,0],[0,0]]"), kD1)->b == kD1);
    CHECK(invert_along(kA, kD1)->b == m2("[[1/2,1/2],[0,0]]"));
    check_holds(check_absorption_cross(zn(9, 7), zn(9, 5), zn(9, 4), zn(9, 2), scale(zn(9, 2))), zn(9, 6));

    const auto id = CentralizerMap::identity(RingContext::matrix(2));
    const auto unmet = check_absorption_cross(kA, kB, kD1, kD2, id);
    CHECK(unmet.verdict == Verdict::hypotheses_unmet);
    CHECK(unmet.lhs == m2("[[1,1],[1/2,1/2]]"));
    CHECK(unmet.rhs == m2("[[1,1],[0,0]]"));

    const auto broken = check_absorption_cross(kA, kB, kD1, kD2, id, {Hypothesis::d1_eq_sigma_d2});
    CHECK(broken.verdict == Verdict::violated);
    CHECK(broken.lhs == m2("[[1,1],[1/2,1/2]]"));
    CHECK(broken.rhs == m2("[[1,1],[0,0]]"));
    CHECK_FALSE(broken.certificate.empty());

    CHECK(check_absorption_cross(zn(9, 7), zn(9, 5), zn(9, 4), zn(9, 2), scale(zn(9, 3))).verdict ==
          Verdict::hypotheses_unmet);
}

TEST_CASE("absorption for classical inverses") {
    const auto id9 = CentralizerMap::identity(RingContext::modular(9));
    CHECK(check_absorption_preset(AbsorptionPreset::group, zn(9, 4), zn(9, 2), scale(zn(9, 2))).verdict ==
          Verdict::holds);
    CHECK(check_absorption_preset(AbsorptionPreset::group, zn(9, 4), zn(9, 2), id9).verdict ==
          Verdict::hypotheses_unmet);
    CHECK(check_absorption_preset(AbsorptionPreset::drazin, zn(8, 2), zn(8, 6), CentralizerMap::identity(RingContext::modular(8)))
              .verdict == Verdict::holds);
    CHECK(check_absorption_preset(AbsorptionPreset::moore_penrose, kD2, kD2, scale(m2("[[1,0],[0,1]]"))).verdict ==
          Verdict::holds);
    CHECK(check_absorption_preset(AbsorptionPreset::mixed, kD2, kD2, scale(m2("[[1,0],[0,1]]"))).verdict ==
          Verdict::holds);
}

TEST_CASE("commutation") {
    const auto id9 = CentralizerMap::identity(RingContext::modular(9));
    CHECK(check_commutation(zn(9, 7), zn(9, 4), id9).verdict == Verdict::holds);
    const auto id2 = CentralizerMap::identity(RingContext::matrix(2));
    CHECK(check_commutation(m2("[[2,0],[0,2]]"), kD1, id2).verdict == Verdict::holds);
    CHECK(check_commutation(m2("[[1,0],[0,0]]"), m2("[[0,1],[0,0]]"), id2).verdict == Verdict::hypotheses_unmet);
}

TEST_CASE("reverse order") {
    const auto r = check_reverse_order(zn(9, 7), zn(9, 5), zn(9, 4), CentralizerMap::identity(RingContext::modular(9)));
    check_holds(r, zn(9, 8));
    CHECK(invert_along(zn(9, 5), zn(9, 4))->b * invert_along(zn(9, 7), zn(9, 4))->b == zn(9, 8));
    const auto id2 = CentralizerMap::identity(RingContext::matrix(2));
    CHECK(check_reverse_order(m2("[[2,0],[0,2]]"), kB, kD2, id2).verdict == Verdict::holds);
    CHECK(check_reverse_order(zn(5, 1), zn(5, 1), zn(5, 1), CentralizerMap::identity(RingContext::modular(5)))
              .verdict == Verdict::holds);
}

TEST_CASE("shift invariance") {
    const auto r = check_shift_invariance(zn(7, 5), zn(7, 3), scale(zn(7, 2)));
    check_holds(r, zn(7, 3));
    CHECK(invert_along(zn(7, 5), zn(7, 6))->b == zn(7, 3));
    CHECK(invert_along(zn(7, 3), zn(7, 3))->b == zn(7, 5));  // 2 * 5 = 3
    CHECK(scale(zn(7, 2)).inverse_apply(zn(7, 3)) == zn(7, 5));
    CHECK(check_shift_invariance(zn(6, 4), zn(6, 2), CentralizerMap::identity(RingContext::modular(6))).verdict ==
          Verdict::holds);
}

TEST_CASE("Jacobson completion") {
    CHECK(jacobson_complete(zn(9, 1), zn(9, 1), zn(9, 5), Side::left) == zn(9, 5));
    CHECK(jacobson_complete(zn(9, 0), zn(9, 4), zn(9, 1), Side::left) == zn(9, 1));
    const Element a = m2("[[0,1],[0,0]]");
    const Element b = m2("[[0,0],[1,0]]");
    const Element c = unit_inverse(RingContext::matrix(2).one() + a * b);
    CHECK(c == m2("[[1/2,0],[0,1]]"));
    const Element r = jacobson_complete(a, b, c, Side::left);
    CHECK(r == m2("[[1,0],[0,1/2]]"));
    CHECK((RingContext::matrix(2).one() + b * a) * r == RingContext::matrix(2).one());
    CHECK(jacobson_inverse(a, b) == r);
    CHECK_THROWS_AS(jacobson_complete(zn(9, 1), zn(9, 1), zn(9, 2), Side::left), PreconditionFailed);
    CHECK(check_jacobson(zn(9, 1), zn(9, 1)).verdict == Verdict::holds);
    CHECK(check_jacobson(a, b).verdict == Verdict::holds);
}

TEST_CASE("sigma criterion against the definition") {
    const auto s3 = scale(zn(6, 3));
    const auto unmet = check_along_sigma_criterion(zn(6, 4), zn(6, 2), s3);
    CHECK(unmet.verdict == Verdict::hypotheses_unmet);
    const auto broken = check_along_sigma_criterion(zn(6, 4), zn(6, 2), s3, {Hypothesis::sigma_bijective});
    CHECK(broken.verdict == Verdict::violated);
    CHECK(broken.lhs == zn(6, 4));
    CHECK_FALSE(broken.rhs.has_value());
    CHECK(check_along_sigma_criterion(zn(9, 7), zn(9, 4), scale(zn(9, 2))).verdict == Verdict::holds);
    CHECK(check_along_sigma_criterion(kA, kD1, scale(m2("[[1/2,0],[0,1/2]]"))).verdict == Verdict::holds);
}

TEST_CASE("every law holds exhaustively in small Z_n") {
    for (const auto& info : law_catalog()) {
        for (std::int64_t n = 2; n <= 6; ++n) {
            CAPTURE(info.id);
            CAPTURE(n);
            const auto summary = verify_exhaustive(info.law, make_universe(RingContext::modular(n)), {},
                                                   RunOptions{1, 3});
            for (const auto& v : summary.violations) {
                INFO(v.certificate);
            }
            CHECK(summary.violated == 0);
            CHECK(summary.tuples == summary.holds + summary.hypotheses_unmet);
        }
    }
}
