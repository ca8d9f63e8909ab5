#include "ringinv/ring.hpp"

#include "ringinv/errors.hpp"

#include <stdexcept>

namespace ringinv {

namespace {

__extension__ using wide_int = __int128;

std::int64_t reduce(std::int64_t v, std::int64_t n) {
    std::int64_t r = v % n;
    return r < 0 ? r + n : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
    return static_cast<std::int64_t>((static_cast<wide_int>(a) * b) % n);
}

// Extended Euclid: returns g = gcd(a, n) and x with a*x = g (mod n).
std::pair<std::int64_t, std::int64_t> extended_gcd(std::int64_t a, std::int64_t n) {
    wide_int old_r = a, r = n;
    wide_int old_s = 1, s = 0;
    while (r != 0) {
        wide_int q = old_r / r;
        wide_int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    return {static_cast<std::int64_t>(old_r), static_cast<std::int64_t>(old_s % n)};
}

}  // namespace

RingContext RingContext::modular(std::int64_t n) {
    if (n < 1) {
        throw std::invalid_argument("modulus must be >= 1");
    }
    return {RingKind::modular, n};
}

RingContext RingContext::matrix(std::size_t k) {
    if (k < 1) {
        throw std::invalid_argument("matrix dimension must be >= 1");
    }
    return {RingKind::matrix, static_cast<std::int64_t>(k)};
}

std::int64_t RingContext::modulus() const {
    if (kind_ != RingKind::modular) {
        throw std::logic_error("modulus() on a matrix ring");
    }
    return param_;
}

std::size_t RingContext::dimension() const {
    if (kind_ != RingKind::matrix) {
        throw std::logic_error("dimension() on a modular ring");
    }
    return static_cast<std::size_t>(param_);
}

Element RingContext::zero() const { return from_integer(0); }

Element RingContext::one() const { return from_integer(1); }

Element RingContext::from_integer(std::int64_t v) const {
    if (is_modular()) {
        return Element::residue(*this, v);
    }
    return scalar(*this, GaussianRational(static_cast<long>(v)));
}

std::string RingContext::spec() const {
    return (is_modular() ? "zmod:" : "gqmat:") + std::to_string(param_);
}

Element Element::residue(const RingContext& ring, std::int64_t v) {
    return {ring, reduce(v, ring.modulus())};
}

Element Element::from_matrix(Matrix m) {
    RingContext ring = RingContext::matrix(m.dim());
    return {ring, std::move(m)};
}

std::int64_t Element::residue() const {
    if (!is_residue()) {
        throw std::logic_error("residue() on a matrix element");
    }
    return std::get<std::int64_t>(payload_);
}

const Matrix& Element::matrix() const {
    if (is_residue()) {
        throw std::logic_error("matrix() on a residue element");
    }
    return std::get<Matrix>(payload_);
}

bool Element::is_zero() const {
    return is_residue() ? residue() == 0 : matrix().is_zero();
}

void require_same_ring(const Element& a, const Element& b) {
    if (a.ring() != b.ring()) {
        throw RingMismatch("operands from " + a.ring().spec() + " and " + b.ring().spec());
    }
}

Element operator+(const Element& a, const Element& b) {
    require_same_ring(a, b);
    if (a.is_residue()) {
        return Element::residue(a.ring_, a.residue() - a.ring_.modulus() + b.residue());
    }
    return {a.ring_, a.matrix() + b.matrix()};
}

Element operator-(const Element& a, const Element& b) {
    require_same_ring(a, b);
    if (a.is_residue()) {
        return Element::residue(a.ring_, a.residue() - b.residue());
    }
    return {a.ring_, a.matrix() - b.matrix()};
}

Element operator*(const Element& a, const Element& b) {
    require_same_ring(a, b);
    if (a.is_residue()) {
        return {a.ring_, mul_mod(a.residue(), b.residue(), a.ring_.modulus())};
    }
    return {a.ring_, a.matrix() * b.matrix()};
}

Element Element::operator-() const {
    if (is_residue()) {
        return residue(ring_, -residue());
    }
    return {ring_, -matrix()};
}

Element power(const Element& a, std::uint64_t exponent) {
    Element result = a.ring().one();
    Element base = a;
    while (exponent > 0) {
        if (exponent & 1U) {
            result = result * base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base = base * base;
        }
    }
    return result;
}

Element involution(const Element& a) {
    if (a.is_residue()) {
        return a;
    }
    return Element::from_matrix(a.matrix().conjugate_transpose());
}

std::optional<Element> try_unit_inverse(const Element& a) {
    const RingContext& ring = a.ring();
    if (ring.is_modular()) {
        if (ring.modulus() == 1) {
            return ring.zero();
        }
        auto [g, x] = extended_gcd(a.residue(), ring.modulus());
        if (g != 1) {
            return std::nullopt;
        }
        return Element::residue(ring, x);
    }
    auto inv = invert(a.matrix());
    if (!inv) {
        return std::nullopt;
    }
    return Element::from_matrix(std::move(*inv));
}

Element unit_inverse(const Element& a) {
    auto inv = try_unit_inverse(a);
    if (!inv) {
        throw NotAUnit(a.ring().spec() + ": element has no two-sided inverse");
    }
    return std::move(*inv);
}

bool is_unit(const Element& a) { return try_unit_inverse(a).has_value(); }

// Z_n is commutative and finite; square matrices over a field have
// one-sided inverses only when invertible.
std::optional<Element> try_left_inverse(const Element& a) { return try_unit_inverse(a); }

std::optional<Element> try_right_inverse(const Element& a) { return try_unit_inverse(a); }

bool is_central(const Element& a) {
    if (a.is_residue()) {
        return true;
    }
    const Matrix& m = a.matrix();
    const std::size_t k = m.dim();
    for (std::size_t p = 0; p < k; ++p) {
        for (std::size_t q = 0; q < k; ++q) {
            Matrix e(k);
            e(p, q) = GaussianRational(1);
            if (m * e != e * m) {
                return false;
            }
        }
    }
    return true;
}

std::vector<Element> enumerate(const RingContext& ring) {
    if (!ring.is_finite()) {
        throw NotFinite(ring.spec() + " is infinite");
    }
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(ring.modulus()));
    for (std::int64_t v = 0; v < ring.modulus(); ++v) {
        out.push_back(Element::residue(ring, v));
    }
    return out;
}

Element scalar(const RingContext& ring, const GaussianRational& c) {
    if (ring.is_modular()) {
        if (sgn(c.imag()) != 0 || c.real().get_den() != 1) {
            throw std::invalid_argument("non-integer scalar in " + ring.spec());
        }
        mpz_class r = c.real().get_num() % ring.modulus();
        return Element::residue(ring, r.get_si());
    }
    return Element::from_matrix(c * Matrix::identity(ring.dimension()));
}

Element random_element(const RingContext& ring, std::mt19937_64& rng, int bound) {
    if (ring.is_modular()) {
        std::uniform_int_distribution<std::int64_t> dist(0, ring.modulus() - 1);
        return Element::residue(ring, dist(rng));
    }
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, 2 * bound);
    auto part = [&] {
        int q = den(rng);
        q = q <= bound ? q : bound - q;  // maps (bound, 2*bound] onto [-bound, -1]
        return mpq_class(num(rng), q);
    };
    Matrix m(ring.dimension());
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            mpq_class re = part();
            mpq_class im = part();
            m(r, c) = GaussianRational(re, im);
        }
    }
    return Element::from_matrix(std::move(m));
}

}  // namespace ringinv
