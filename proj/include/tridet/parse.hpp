#pragma once

// Text form of polynomials: a whitespace-insensitive sum of terms
//
//   term := [coef '*'] 'x' ['^' exp] | coef
//   coef := integer | integer '/' integer
//
// e.g. "x^3 - 2*x + 1", "1/2*x^2 - 1/3". parse_poly reports malformed input
// with the byte offset of the offending character; poly_to_string renders
// the canonical descending form.

#include "tridet/poly.hpp"
#include "tridet/rational.hpp"

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tridet {

struct ParseError : std::runtime_error {
    std::size_t offset;  // byte position in the input

    ParseError(const std::string& what, std::size_t at)
        : std::runtime_error(what + " at offset " + std::to_string(at)), offset(at) {}
};

namespace parse_detail {

class Cursor {
  public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    std::size_t pos() const { return pos_; }

    bool accept(char c) {
        if (!done() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Int integer() {
        if (done() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("expected digit", pos_);
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return Int(std::string(text_.substr(start, pos_ - start)));
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace parse_detail

inline Poly parse_poly(std::string_view text) {
    parse_detail::Cursor cur(text);
    std::vector<Rat> coeffs;
    auto add = [&](int exp, const Rat& c) {
        if (static_cast<size_t>(exp) >= coeffs.size()) coeffs.resize(exp + 1, Rat(0));
        coeffs[exp] += c;
    };

    cur.skip_ws();
    if (cur.done()) throw ParseError("empty input", cur.pos());
    bool first = true;
    while (true) {
        cur.skip_ws();
        if (cur.done()) break;

        int sign = 1;
        if (cur.accept('+')) {
            sign = 1;
        } else if (cur.accept('-')) {
            sign = -1;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", cur.pos());
        }
        cur.skip_ws();
        if (cur.done()) throw ParseError("expected term", cur.pos());

        Rat coef = 1;
        bool saw_coef = false;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            const Int num = cur.integer();
            Int den = 1;
            cur.skip_ws();
            if (cur.accept('/')) {
                cur.skip_ws();
                const std::size_t den_at = cur.pos();
                den = cur.integer();
                if (den == 0) throw ParseError("zero denominator", den_at);
            }
            coef = Rat(num, den);
            saw_coef = true;
        }

        int exp = 0;
        bool saw_x = false;
        cur.skip_ws();
        if (saw_coef && cur.accept('*')) {
            cur.skip_ws();
            if (!cur.accept('x')) throw ParseError("expected 'x' after '*'", cur.pos());
            saw_x = true;
        } else if (cur.accept('x')) {
            saw_x = true;
        }
        if (saw_x) {
            exp = 1;
            cur.skip_ws();
            if (cur.accept('^')) {
                cur.skip_ws();
                const std::size_t exp_at = cur.pos();
                const Int e = cur.integer();
                if (e > 1000) throw ParseError("exponent too large", exp_at);
                exp = static_cast<int>(e);
            }
        } else if (!saw_coef) {
            throw ParseError("expected term", cur.pos());
        }

        add(exp, sign * coef);
        first = false;
    }
    if (first) throw ParseError("empty input", cur.pos());
    return Poly(std::move(coeffs));
}

// Canonical text: descending powers, "-" binding into the term, rationals as
// num/den, unit coefficients and x^1/x^0 elided. Zero prints as "0".
inline std::string poly_to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rat& c = p[k];
        if (c == 0) continue;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        const Rat mag = abs(c);
        const bool unit = (mag == 1);
        if (!unit || k == 0) out += to_string(mag);
        if (k > 0) {
            if (!unit) out += "*";
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << poly_to_string(p); }

}  // namespace tridet
