#include "helpers.hpp"
#include "oracles.hpp"

#include "ringinv/classical.hpp"
#include "ringinv/errors.hpp"
#include "ringinv/regular.hpp"

#include <doctest.h>

#include <random>

using namespace ringinv;
using testing::m2;
using testing::zn;

TEST_CASE("group inverse") {
    CHECK(group_inverse(m2("[[1,1],[0,0]]")).value() == m2("[[1,1],[0,0]]"));
    CHECK(group_inverse(zn(6, 2)).value() == zn(6, 2));
    CHECK(group_inverse(zn(4, 2)).reason() == AbsentReason::not_regular);
    CHECK(group_inverse(m2("[[0,1],[0,0]]")).reason() == AbsentReason::unit_criterion_failed);
    CHECK_THROWS_AS(group_inverse(zn(6, 2), CentralizerMap::scaling(zn(6, 3))), NotBijectiveCentralizer);
}

TEST_CASE("Drazin inverse") {
    auto nil = drazin_inverse(m2("[[0,1],[0,0]]"));
    REQUIRE(nil.has_value());
    CHECK(nil->b.is_zero());
    CHECK(nil->index == 2);

    auto z8 = drazin_inverse(zn(8, 2));
    REQUIRE(z8.has_value());
    CHECK(z8->b == zn(8, 0));
    CHECK(z8->index == 3);

    auto unit = drazin_inverse(zn(7, 3));
    REQUIRE(unit.has_value());
    CHECK(unit->b == zn(7, 5));
    CHECK(unit->index == 1);
}

TEST_CASE("Moore-Penrose inverse") {
    CHECK(moore_penrose(m2("[[1,0],[1,0]]")).value() == m2("[[1/2,1/2],[0,0]]"));
    CHECK(moore_penrose(m2("[[1,1],[1,1]]")).value() == m2("[[1/4,1/4],[1/4,1/4]]"));
    CHECK(moore_penrose(m2("[[0,0],[0,0]]")).value().is_zero());
    CHECK(moore_penrose(zn(9, 0)).value() == zn(9, 0));
    CHECK(moore_penrose(m2("[[0,i],[0,0]]")).value() == m2("[[0,0],[-i,0]]"));
    CHECK(moore_penrose(zn(4, 2)).reason() == AbsentReason::not_regular);
}

TEST_CASE("one-sided Moore-Penrose routes") {
    CHECK(mp_one_sided(m2("[[1,0],[1,0]]"), Side::left).value() == m2("[[1/2,1/2],[0,0]]"));
    CHECK(mp_one_sided(m2("[[1,0],[1,0]]"), Side::right).value() == m2("[[1/2,1/2],[0,0]]"));
    CHECK(mp_one_sided(zn(9, 7), Side::left).value() == zn(9, 4));
    CHECK(mp_one_sided(m2("[[0,0],[0,0]]"), Side::left).value().is_zero());
}

TEST_CASE("specializations of the inverse along an element") {
    CHECK(inverse_along_specialization(zn(7, 3), Specialization::group).value() == zn(7, 5));
    CHECK(group_inverse(zn(7, 3)).value() == zn(7, 5));
    CHECK(inverse_along_specialization(m2("[[1,0],[1,0]]"), Specialization::moore_penrose).value() ==
          m2("[[1/2,1/2],[0,0]]"));
    CHECK(inverse_along_specialization(zn(8, 2), Specialization::drazin, 3).value() == zn(8, 0));
}

TEST_CASE("classical inverses in Z_n agree with exhaustive search") {
    for (std::int64_t n = 1; n <= 12; ++n) {
        const auto ring = RingContext::modular(n);
        const auto sigmas = oracle::units(ring);
        for (const auto& a : oracle::elements(ring)) {
            CAPTURE(a);
            const auto g = oracle::group_inverse(a);
            const auto dz = oracle::drazin(a);
            const auto mp = oracle::moore_penrose(a);
            REQUIRE(dz.has_value());
            for (const auto& c : sigmas) {
                const OptionalSigma s = CentralizerMap::scaling(c);
                CAPTURE(c);
                auto gi = group_inverse(a, s);
                REQUIRE(gi.has_value() == g.has_value());
                if (g) CHECK(*gi == *g);

                auto di = drazin_inverse(a, s);
                REQUIRE(di.has_value());
                CHECK(di->b == dz->b);
                CHECK(di->index == dz->index);
                CHECK(di->index <= di->n_used);

                auto mi = moore_penrose(a, s);
                REQUIRE(mi.has_value() == mp.has_value());
                if (mp) {
                    CHECK(*mi == *mp);
                    CHECK(mp_one_sided(a, Side::left, s).value() == *mp);
                    CHECK(mp_one_sided(a, Side::right, s).value() == *mp);
                }
            }
            if (g) CHECK(inverse_along_specialization(a, Specialization::group).value() == *g);
            if (mp) CHECK(inverse_along_specialization(a, Specialization::moore_penrose).value() == *mp);
        }
    }
}

TEST_CASE("Moore-Penrose of random matrices") {
    std::mt19937_64 rng(31);
    for (int n = 0; n < 150; ++n) {
        const std::size_t k = 1 + static_cast<std::size_t>(n % 3);
        const Element a = testing::random_low_rank(k, rng);
        auto mp = moore_penrose(a);
        REQUIRE(mp.has_value());  // every complex matrix has one
        CHECK(penrose_check(a, *mp).is_moore_penrose());
        CHECK(mp_one_sided(a, Side::left).value() == *mp);
        CHECK(mp_one_sided(a, Side::right).value() == *mp);
        CHECK(inverse_along_specialization(a, Specialization::moore_penrose).value() == *mp);
        CHECK(moore_penrose(*mp).value() == a);
        CHECK(moore_penrose(involution(a)).value() == involution(*mp));

        const auto id = CentralizerMap::identity(a.ring());
        const Element one = a.ring().one();
        const Element x = inner_inverse(a);
        const Element u = a * involution(a) + one - a * x;
        const Element v = involution(a) * a + one - x * a;
        const Element u_inv = unit_inverse(u);
        CHECK(moore_penrose_from_u(a, u_inv, id) == *mp);
        CHECK(moore_penrose_alternate(a, u_inv, id) == *mp);
        const Element v_r = v_right_inverse_from_u(a, x, u_inv, id);
        CHECK(v * v_r == one);
        CHECK(moore_penrose_from_v(a, v_r, id) == *mp);
    }
}

TEST_CASE("rank-one matrices: a+ = a* / tr(a* a)") {
    std::mt19937_64 rng(37);
    for (int n = 0; n < 60; ++n) {
        Matrix col(2);
        Matrix row(2);
        for (std::size_t i = 0; i < 2; ++i) {
            col(i, 0) = testing::random_scalar(rng);
            row(0, i) = testing::random_scalar(rng);
        }
        const Matrix m = col * row;
        if (m.is_zero()) {
            continue;
        }
        const Matrix g = m.conjugate_transpose() * m;
        const GaussianRational trace = g(0, 0) + g(1, 1);
        const Element expected = Element::from_matrix(trace.reciprocal() * m.conjugate_transpose());
        CHECK(moore_penrose(Element::from_matrix(m)).value() == expected);
    }
}

TEST_CASE("Drazin inverse of random 3x3 matrices") {
    std::mt19937_64 rng(41);
    for (int n = 0; n < 60; ++n) {
        Element a = testing::random_low_rank(3, rng);
        if (n % 4 == 0) {
            a = a * testing::mat(3, "[[0,1,0],[0,0,1],[0,0,0]]");  // often nilpotent-heavy
        }
        auto r = drazin_inverse(a);
        REQUIRE(r.has_value());
        CHECK(a * r->b == r->b * a);
        CHECK(r->b * r->b * a == r->b);
        CHECK(power(a, r->index) == power(a, r->index + 1) * r->b);
        if (r->index > 1) {
            CHECK(power(a, r->index - 1) != power(a, r->index) * r->b);
        }
        CHECK(inverse_along_specialization(a, Specialization::drazin, r->n_used).value() == r->b);
    }
}
