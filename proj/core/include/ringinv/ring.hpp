#pragma once

#include "ringinv/matrix.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace ringinv {

class Element;

enum class RingKind { modular, matrix };

/// A concrete unital ring with involution: Z_n (identity involution) or the
/// k x k matrices over the Gaussian rationals (conjugate transpose).
class RingContext {
public:
    /// Z_n, n >= 1. Z_1 is the zero ring.
    static RingContext modular(std::int64_t n);
    /// M_k(Q(i)), k >= 1.
    static RingContext matrix(std::size_t k);

    RingKind kind() const noexcept { return kind_; }
    bool is_modular() const noexcept { return kind_ == RingKind::modular; }
    bool is_finite() const noexcept { return kind_ == RingKind::modular; }

    /// n for Z_n; throws std::logic_error for matrix rings.
    std::int64_t modulus() const;
    /// k for M_k; throws std::logic_error for modular rings.
    std::size_t dimension() const;

    Element zero() const;
    Element one() const;
    /// Image of an integer under Z -> R.
    Element from_integer(std::int64_t v) const;

    /// `zmod:<n>` or `gqmat:<k>`.
    std::string spec() const;

    friend bool operator==(const RingContext&, const RingContext&) = default;

private:
    RingContext(RingKind kind, std::int64_t param) : kind_(kind), param_(param) {}

    RingKind kind_;
    std::int64_t param_;
};

/// Immutable ring element in canonical form. Equality is structural.
class Element {
public:
    /// Residue of v modulo ring.modulus(); ring must be modular.
    static Element residue(const RingContext& ring, std::int64_t v);
    static Element from_matrix(Matrix m);

    const RingContext& ring() const noexcept { return ring_; }

    bool is_residue() const noexcept { return ring_.is_modular(); }
    std::int64_t residue() const;
    const Matrix& matrix() const;

    bool is_zero() const;

    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Element& a, const Element& b);
    Element operator-() const;

    friend bool operator==(const Element& a, const Element& b) = default;

private:
    Element(RingContext ring, std::variant<std::int64_t, Matrix> payload)
        : ring_(ring), payload_(std::move(payload)) {}

    RingContext ring_;
    std::variant<std::int64_t, Matrix> payload_;
};

/// Throws RingMismatch unless a and b share a ring.
void require_same_ring(const Element& a, const Element& b);

Element power(const Element& a, std::uint64_t exponent);

/// Identity on Z_n, conjugate transpose on matrices.
Element involution(const Element& a);

/// Two-sided inverse; throws NotAUnit.
Element unit_inverse(const Element& a);
std::optional<Element> try_unit_inverse(const Element& a);
bool is_unit(const Element& a);

/// Some x with x*a = 1. Smallest residue for Z_n; the inverse for matrices,
/// where one-sided and two-sided invertibility coincide.
std::optional<Element> try_left_inverse(const Element& a);
/// Some x with a*x = 1; same conventions as try_left_inverse.
std::optional<Element> try_right_inverse(const Element& a);

/// a commutes with every element. Matrix rings test the elementary matrices
/// E_pq, which generate M_k additively.
bool is_central(const Element& a);

/// Every element of a finite ring in ascending residue order.
/// Throws NotFinite for matrix rings.
std::vector<Element> enumerate(const RingContext& ring);

/// Scalar c times the identity.
Element scalar(const RingContext& ring, const GaussianRational& c);

/// Pseudo-random element. Matrix entries have real and imaginary parts p/q
/// with p in [-bound, bound] and q in [-bound, bound] \ {0}.
Element random_element(const RingContext& ring, std::mt19937_64& rng, int bound = 3);

}  // namespace ringinv
