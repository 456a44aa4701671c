#pragma once

// Dense univariate polynomials over Rat. Coefficients are stored in ascending
// degree order: coeffs()[i] multiplies x^i. The zero polynomial stores no
// coefficients and reports degree -1; otherwise the top coefficient is
// guaranteed nonzero.

#include "tridet/rational.hpp"

#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tridet {

class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rat> ascending) : c_(ascending) { trim(); }
    explicit Poly(std::vector<Rat> ascending) : c_(std::move(ascending)) { trim(); }

    static Poly constant(const Rat& a) { return Poly{a}; }

    // a * x^k
    static Poly monomial(int k, const Rat& a = 1) {
        std::vector<Rat> c(static_cast<size_t>(k) + 1);
        c.back() = a;
        return Poly(std::move(c));
    }

    static Poly x() { return monomial(1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    // Coefficient of x^i; zero outside the stored range.
    const Rat& operator[](int i) const {
        static const Rat zero{};
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<size_t>(i)];
    }

    const std::vector<Rat>& coeffs() const { return c_; }

    Rat lc() const { return c_.empty() ? Rat(0) : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    // Horner evaluation.
    Rat operator()(const Rat& at) const {
        Rat acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    friend Poly operator-(const Poly& a) {
        std::vector<Rat> c(a.c_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = -a.c_[i];
        return Poly(std::move(c));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) {
            if (i < a.c_.size()) c[i] += a.c_[i];
            if (i < b.c_.size()) c[i] += b.c_[i];
        }
        return Poly(std::move(c));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }

    friend Poly operator*(const Rat& s, const Poly& a) {
        if (s == 0) return {};
        std::vector<Rat> c(a.c_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = s * a.c_[i];
        return Poly(std::move(c));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rat> c_;
};

// Euclidean division: num = quotient * den + remainder with
// deg(remainder) < deg(den). Throws std::invalid_argument on a zero divisor.
inline std::pair<Poly, Poly> poly_divrem(const Poly& num, const Poly& den) {
    if (den.is_zero())
        throw std::invalid_argument("poly_divrem: division by zero polynomial");
    if (num.degree() < den.degree()) return {Poly{}, num};
    std::vector<Rat> rem(num.coeffs());
    const int dd = den.degree();
    const Rat lead = den[dd];
    std::vector<Rat> quo(static_cast<size_t>(num.degree() - dd) + 1);
    for (int k = num.degree() - dd; k >= 0; --k) {
        Rat f = rem[static_cast<size_t>(k + dd)] / lead;
        quo[static_cast<size_t>(k)] = f;
        if (f != 0)
            for (int i = 0; i <= dd; ++i) rem[static_cast<size_t>(k + i)] -= f * den[i];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

inline Poly poly_quo(const Poly& num, const Poly& den) {
    return poly_divrem(num, den).first;
}

inline Poly poly_rem(const Poly& num, const Poly& den) {
    return poly_divrem(num, den).second;
}

// p / lc(p). Throws std::invalid_argument on the zero polynomial.
inline Poly monic(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("monic: zero polynomial");
    if (p.is_monic()) return p;
    return (Rat(1) / p.lc()) * p;
}

// Monic greatest common divisor; poly_gcd(p, 0) = p / lc(p). Throws
// std::invalid_argument when both inputs are zero.
inline Poly poly_gcd(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("poly_gcd: both inputs zero");
    while (!b.is_zero()) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

inline Poly derivative(const Poly& p) {
    if (p.degree() < 1) return {};
    std::vector<Rat> c(static_cast<size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i)
        c[static_cast<size_t>(i - 1)] = Rat(i) * p[i];
    return Poly(std::move(c));
}

// B = 1 + max_i |a_i| over the non-leading coefficients of a monic p with
// deg >= 1; every real root lies strictly inside (-B, B).
inline Rat cauchy_bound(const Poly& p) {
    if (!p.is_monic() || p.degree() < 1)
        throw std::invalid_argument("cauchy_bound: monic polynomial of degree >= 1 required");
    Rat m = 0;
    for (int i = 0; i < p.degree(); ++i)
        if (abs(p[i]) > m) m = abs(p[i]);
    return 1 + m;
}

}  // namespace tridet
