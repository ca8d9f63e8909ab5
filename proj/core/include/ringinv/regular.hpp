#pragma once

#include "ringinv/outcome.hpp"
#include "ringinv/ring.hpp"

#include <bitset>
#include <initializer_list>
#include <string>
#include <vector>

namespace ringinv {

/// Which of the four Penrose equations a pair (a, b) satisfies:
///   1: aba = a   2: bab = b   3: (ab)* = ab   4: (ba)* = ba
class PenroseProfile {
public:
    PenroseProfile() = default;
    PenroseProfile(std::initializer_list<int> equations);

    bool satisfies(int equation) const { return bits_.test(static_cast<std::size_t>(equation - 1)); }
    void set(int equation) { bits_.set(static_cast<std::size_t>(equation - 1)); }

    bool is_inner() const { return satisfies(1); }
    bool is_one_three() const { return satisfies(1) && satisfies(3); }
    bool is_one_four() const { return satisfies(1) && satisfies(4); }
    bool is_moore_penrose() const { return bits_.all(); }

    /// e.g. "{1,3,4}".
    std::string to_string() const;

    friend bool operator==(const PenroseProfile&, const PenroseProfile&) = default;

private:
    std::bitset<4> bits_;
};

PenroseProfile penrose_check(const Element& a, const Element& b);

/// Canonical inner inverse x (axa = a). Z_n: the smallest residue;
/// matrices: Q^-1 [I_r 0; 0 0] P^-1 from a rank factorization A = P [I_r 0; 0 0] Q.
Outcome<Element> try_inner_inverse(const Element& a);

/// Throws NotRegular when a has no inner inverse.
Element inner_inverse(const Element& a);

bool is_regular(const Element& a);

/// Every inner inverse of a, ascending. Throws NotFinite for matrix rings.
std::vector<Element> all_inner_inverses(const Element& a);

}  // namespace ringinv
