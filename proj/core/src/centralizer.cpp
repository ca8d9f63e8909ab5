#include "ringinv/centralizer.hpp"

#include "ringinv/errors.hpp"
#include "ringinv/literal.hpp"

#include <random>

namespace ringinv {

CentralizerMap::CentralizerMap(const Element& c)
    : scaling_(c), left_(true), right_(is_central(c)), inverse_(try_unit_inverse(c)) {}

CentralizerMap CentralizerMap::scaling(const Element& c) { return CentralizerMap(c); }

CentralizerMap CentralizerMap::identity(const RingContext& ring) { return CentralizerMap(ring.one()); }

Element CentralizerMap::apply(const Element& a) const { return scaling_ * a; }

Element CentralizerMap::inverse_apply(const Element& a) const {
    if (!inverse_) {
        throw NotBijective("sigma(x) = " + describe() + " x is not bijective");
    }
    return *inverse_ * a;
}

CentralizerMap CentralizerMap::inverse() const {
    if (!inverse_) {
        throw NotBijective("sigma(x) = " + describe() + " x is not bijective");
    }
    return CentralizerMap(*inverse_);
}

std::string CentralizerMap::describe() const { return format_element(scaling_); }

CentralizerMap make_scaling_centralizer(const RingContext& ring, const Element& c) {
    if (c.ring() != ring) {
        throw RingMismatch("scaling element from " + c.ring().spec() + " for ring " + ring.spec());
    }
    return CentralizerMap::scaling(c);
}

namespace {

bool laws_hold(const CentralizerMap& sigma, const Element& a, const Element& b) {
    const Element image = sigma.apply(a * b);
    return a * sigma.apply(b) == image && image == sigma.apply(a) * b;
}

}  // namespace

bool verify_centralizer(const CentralizerMap& sigma, VerificationMode mode, std::size_t samples,
                        std::uint64_t seed) {
    const RingContext& ring = sigma.ring();
    if (mode == VerificationMode::exhaustive) {
        if (!ring.is_finite()) {
            throw NotFinite("exhaustive centralizer check on " + ring.spec());
        }
        const auto elements = enumerate(ring);
        for (const auto& a : elements) {
            for (const auto& b : elements) {
                if (!laws_hold(sigma, a, b)) {
                    return false;
                }
            }
        }
        return true;
    }

    if (!ring.is_finite() && !is_central(sigma.scaling_element())) {
        return false;
    }
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        Element a = random_element(ring, rng);
        Element b = random_element(ring, rng);
        if (!laws_hold(sigma, a, b)) {
            return false;
        }
    }
    return true;
}

}  // namespace ringinv
