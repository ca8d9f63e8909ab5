#pragma once

#include "ringinv/ring.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>

namespace ringinv {

/// The scaling map sigma(x) = c x together with its verified status.
///
/// sigma is always a left centralizer (sigma(ab) = sigma(a) b). It is a right
/// centralizer (sigma(ab) = a sigma(b)) iff c is central, and bijective iff c
/// is a unit, in which case sigma^-1(x) = c^-1 x.
class CentralizerMap {
public:
    static CentralizerMap scaling(const Element& c);
    static CentralizerMap identity(const RingContext& ring);

    const RingContext& ring() const noexcept { return scaling_.ring(); }
    const Element& scaling_element() const noexcept { return scaling_; }
    bool left_verified() const noexcept { return left_; }
    bool right_verified() const noexcept { return right_; }
    bool bijective() const noexcept { return inverse_.has_value(); }
    const std::optional<Element>& inverse_scaling() const noexcept { return inverse_; }

    /// Two-sided: a sigma(b) = sigma(ab) = sigma(a) b.
    bool is_centralizer() const noexcept { return left_ && right_; }
    bool is_bijective_centralizer() const noexcept { return is_centralizer() && bijective(); }

    Element apply(const Element& a) const;
    /// Throws NotBijective unless c is a unit.
    Element inverse_apply(const Element& a) const;
    /// sigma^-1 as a map; throws NotBijective.
    CentralizerMap inverse() const;

    /// The scaling element as a literal, e.g. "2" or "[[1/2,0],[0,1/2]]".
    std::string describe() const;

private:
    explicit CentralizerMap(const Element& c);

    Element scaling_;
    bool left_;
    bool right_;
    std::optional<Element> inverse_;
};

CentralizerMap make_scaling_centralizer(const RingContext& ring, const Element& c);

enum class VerificationMode { exhaustive, sampled };

/// Checks a sigma(b) = sigma(ab) = sigma(a) b. Exhaustive mode walks every
/// pair of a finite ring (NotFinite otherwise). Sampled mode draws `samples`
/// pseudo-random pairs from a fixed seed; in matrix rings it additionally
/// decides centrality of c exactly through the elementary matrices.
bool verify_centralizer(const CentralizerMap& sigma, VerificationMode mode, std::size_t samples = 500,
                        std::uint64_t seed = 0x5eed);

}  // namespace ringinv
