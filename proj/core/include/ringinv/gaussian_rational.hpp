#pragma once

#include <gmpxx.h>

#include <string>

namespace ringinv {

/// Exact complex number p/q + (r/s)i with rational parts.
///
/// Both parts are kept in lowest terms with positive denominators, so two
/// values are equal iff their parts compare equal.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long value) : re_(value) {}
    GaussianRational(mpq_class re, mpq_class im = 0);

    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

    const mpq_class& real() const noexcept { return re_; }
    const mpq_class& imag() const noexcept { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2 as a rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    /// Multiplicative inverse; throws std::domain_error on zero.
    GaussianRational reciprocal() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.reciprocal();
    }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Canonical literal: `0`, `p`, `p/q`, `i`, `-i`, `r/si`, `p/q+r/si`, `p/q-r/si`.
    std::string to_string() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

}  // namespace ringinv
