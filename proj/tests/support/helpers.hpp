#pragma once

#include "ringinv/literal.hpp"
#include "ringinv/ring.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string_view>

namespace testing {

using ringinv::Element;
using ringinv::RingContext;

inline Element zn(std::int64_t n, std::int64_t v) { return Element::residue(RingContext::modular(n), v); }

inline Element mat(std::size_t k, std::string_view text) {
    return ringinv::parse_element(RingContext::matrix(k), text);
}

inline Element m2(std::string_view text) { return mat(2, text); }

// p/q + (r/s) i with p, r in [-bound, bound] and q, s in [1, bound] up to sign.
inline ringinv::GaussianRational random_scalar(std::mt19937_64& rng, int bound = 3) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, bound);
    std::bernoulli_distribution flip(0.5);
    auto part = [&] {
        const int q = den(rng) * (flip(rng) ? -1 : 1);
        return mpq_class(num(rng), q);
    };
    mpq_class re = part();
    mpq_class im = part();
    re.canonicalize();
    im.canonicalize();
    return {re, im};
}

inline Element random_matrix(std::size_t k, std::mt19937_64& rng, int bound = 3) {
    ringinv::Matrix m(k);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
            m(r, c) = random_scalar(rng, bound);
        }
    }
    return Element::from_matrix(std::move(m));
}

// Low-rank matrices make the interesting cases common: rank(a b) <= rank(a).
inline Element random_low_rank(std::size_t k, std::mt19937_64& rng, int bound = 3) {
    std::uniform_int_distribution<int> pick(0, 2);
    Element x = random_matrix(k, rng, bound);
    switch (pick(rng)) {
        case 0: return x;
        case 1: {
            ringinv::Matrix col(k);
            ringinv::Matrix row(k);
            for (std::size_t i = 0; i < k; ++i) {
                col(i, 0) = random_scalar(rng, bound);
                row(0, i) = random_scalar(rng, bound);
            }
            return Element::from_matrix(col * row);
        }
        default: {
            ringinv::Matrix m = x.matrix();
            for (std::size_t c = 0; c < k; ++c) {
                m(k - 1, c) = m(0, c);  // repeat a row
            }
            return Element::from_matrix(std::move(m));
        }
    }
}

}  // namespace testing
