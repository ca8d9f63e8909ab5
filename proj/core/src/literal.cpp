#include "ringinv/literal.hpp"

#include "ringinv/errors.hpp"

#include <cctype>
#include <ostream>

namespace ringinv {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }
    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("bad literal '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                         ": " + what);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

// term := [digits ['/' digits]] ['i'], at least one of the two parts present.
// Returns the coefficient and whether the term is imaginary.
std::pair<mpq_class, bool> parse_term(Cursor& cur) {
    std::string num = cur.digits();
    mpq_class value(1);
    if (!num.empty()) {
        mpz_class p(num);
        mpz_class q(1);
        if (cur.accept('/')) {
            std::string den = cur.digits();
            if (den.empty()) {
                cur.fail("missing denominator");
            }
            q = mpz_class(den);
            if (q == 0) {
                cur.fail("zero denominator");
            }
        }
        value = mpq_class(p, q);
        value.canonicalize();
    }
    bool imaginary = cur.accept('i');
    if (num.empty() && !imaginary) {
        cur.fail("expected number or 'i'");
    }
    return {value, imaginary};
}

GaussianRational parse_entry(Cursor& cur) {
    mpq_class re(0);
    mpq_class im(0);
    bool seen_re = false;
    bool seen_im = false;
    bool first = true;
    while (true) {
        bool negative = false;
        if (cur.accept('-')) {
            negative = true;
        } else if (cur.accept('+')) {
            if (first) {
                cur.fail("leading '+'");
            }
        } else if (!first) {
            break;
        }
        auto [value, imaginary] = parse_term(cur);
        if (negative) {
            value = -value;
        }
        if (imaginary) {
            if (seen_im) {
                cur.fail("two imaginary parts");
            }
            im = value;
            seen_im = true;
        } else {
            if (seen_re || seen_im) {
                cur.fail("real part must come first and only once");
            }
            re = value;
            seen_re = true;
        }
        first = false;
    }
    return {re, im};
}

}  // namespace

RingContext parse_ring_spec(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw ParseError("ring spec must be zmod:<n> or gqmat:<k>, got '" + std::string(text) + "'");
    }
    std::string_view kind = text.substr(0, colon);
    std::string_view param = text.substr(colon + 1);
    if (param.empty() || param.size() > 18) {
        throw ParseError("bad ring parameter in '" + std::string(text) + "'");
    }
    std::int64_t value = 0;
    for (char c : param) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError("bad ring parameter in '" + std::string(text) + "'");
        }
        value = value * 10 + (c - '0');
    }
    if (value < 1) {
        throw ParseError("ring parameter must be >= 1 in '" + std::string(text) + "'");
    }
    if (kind == "zmod") {
        return RingContext::modular(value);
    }
    if (kind == "gqmat") {
        return RingContext::matrix(static_cast<std::size_t>(value));
    }
    throw ParseError("unknown ring kind '" + std::string(kind) + "'");
}

GaussianRational parse_gaussian_rational(std::string_view text) {
    Cursor cur(text);
    GaussianRational z = parse_entry(cur);
    if (!cur.at_end()) {
        cur.fail("trailing characters");
    }
    return z;
}

Element parse_element(const RingContext& ring, std::string_view text) {
    Cursor cur(text);
    if (ring.is_modular()) {
        bool negative = cur.accept('-');
        if (!negative) {
            cur.accept('+');
        }
        std::string num = cur.digits();
        if (num.empty() || !cur.at_end()) {
            cur.fail("expected a decimal integer");
        }
        mpz_class v(num);
        if (negative) {
            v = -v;
        }
        mpz_class r = v % ring.modulus();
        return Element::residue(ring, r.get_si());
    }

    const std::size_t k = ring.dimension();
    Matrix m(k);
    cur.expect('[');
    for (std::size_t r = 0; r < k; ++r) {
        if (r > 0) {
            cur.expect(',');
        }
        cur.expect('[');
        for (std::size_t c = 0; c < k; ++c) {
            if (c > 0) {
                cur.expect(',');
            }
            m(r, c) = parse_entry(cur);
        }
        cur.expect(']');
    }
    cur.expect(']');
    if (!cur.at_end()) {
        cur.fail("trailing characters (matrix larger than " + ring.spec() + "?)");
    }
    return Element::from_matrix(std::move(m));
}

std::string format_element(const Element& e) {
    if (e.is_residue()) {
        return std::to_string(e.residue());
    }
    const Matrix& m = e.matrix();
    std::string out = "[";
    for (std::size_t r = 0; r < m.dim(); ++r) {
        out += r == 0 ? "[" : ",[";
        for (std::size_t c = 0; c < m.dim(); ++c) {
            if (c > 0) {
                out += ',';
            }
            out += m(r, c).to_string();
        }
        out += ']';
    }
    return out + "]";
}

std::ostream& operator<<(std::ostream& os, const Element& e) { return os << format_element(e); }

std::ostream& operator<<(std::ostream& os, const RingContext& ring) { return os << ring.spec(); }

}  // namespace ringinv
