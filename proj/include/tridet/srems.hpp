#pragma once

// Signed remainder sequences with monic normalization, their sign sequences,
// Sturm-style root counting and Tarski queries.

#include "tridet/errors.hpp"
#include "tridet/hankel.hpp"
#include "tridet/poly.hpp"
#include "tridet/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace tridet::srems {

// Normalized signed remainder sequence of monic (p, q), deg q = deg p - 1:
//
//   p_0 = p,  p_1 = q,
//   p_k = (x - alpha_{k+1}) p_{k+1} - eps_{k+1} beta_sq_{k+1} p_{k+2},
//
// every p_k monic, each eps in {-1, +1} and each beta_sq > 0: a remainder r
// is normalized by eps = -sign(lc r), beta_sq = |lc r|, next poly = r/lc(r).
//
// `breakdown` holds the index k of the failing division p_k by p_{k+1} when
// a remainder vanished early (nonconstant gcd) or lost more than one degree;
// the arrays keep whatever was gathered before the failure. Without
// breakdown, deg p_k = n - k throughout and the sequence has length n+1.
struct Sequence {
    std::vector<Poly> polys;    // p_0, p_1, ...
    std::vector<Rat> alphas;    // alpha_1 ... alpha_n
    std::vector<int> epsilons;  // eps_1 ... eps_{n-1}
    std::vector<Rat> beta_sqs;  // beta_sq_1 ... beta_sq_{n-1}
    std::vector<int> nu;        // leading-sign sequence, length n+1; empty on breakdown
    std::optional<int> breakdown;
};

inline Sequence compute(const Poly& p, const Poly& q) {
    if (!p.is_monic() || p.degree() < 1)
        throw std::invalid_argument("srems: monic p of degree >= 1 required");
    if (!q.is_monic() || q.degree() != p.degree() - 1)
        throw std::invalid_argument("srems: monic q with deg q = deg p - 1 required");
    Sequence s;
    s.polys = {p, q};
    while (s.polys.back().degree() >= 1) {
        const Poly& a = s.polys[s.polys.size() - 2];
        const Poly& b = s.polys.back();
        auto [quo, rem] = poly_divrem(a, b);
        // consecutive degrees and monicity make the quotient x - alpha
        s.alphas.push_back(-quo[0]);
        if (rem.is_zero() || rem.degree() != b.degree() - 1) {
            s.breakdown = static_cast<int>(s.polys.size()) - 2;
            return s;
        }
        const Rat lead = rem.lc();
        s.epsilons.push_back(-sign(lead));
        s.beta_sqs.push_back(abs(lead));
        s.polys.push_back(monic(rem));
    }
    // the last division, by the constant p_n = 1, is exact: p_{n-1} = x - alpha_n
    s.alphas.push_back(-s.polys[s.polys.size() - 2][0]);
    const int n = static_cast<int>(s.alphas.size());
    s.nu.assign(static_cast<size_t>(n) + 1, 1);
    for (int k = 1; k <= n - 1; ++k)
        s.nu[static_cast<size_t>(k + 1)] =
            s.nu[static_cast<size_t>(k - 1)] * s.epsilons[static_cast<size_t>(k - 1)];
    return s;
}

// The leading-coefficient sign sequence nu_0 ... nu_n of the classical
// (unnormalized) signed remainder chain: nu_0 = nu_1 = 1 and
// nu_{k+1} = nu_{k-1} * eps_k.
inline std::vector<int> sign_sequence(const Sequence& s) {
    if (s.breakdown)
        throw MathError("sign_sequence: breakdown present");
    return s.nu;
}

// Permanences minus variations: sum of nu_i * nu_{i+1}.
inline int pmv(const std::vector<int>& nu) {
    if (nu.size() < 2)
        throw std::invalid_argument("pmv: sequence of length >= 2 required");
    int acc = 0;
    for (size_t i = 0; i + 1 < nu.size(); ++i) acc += nu[i] * nu[i + 1];
    return acc;
}

// Classical signed remainder chain f_0 = p, f_1 = q,
// f_{k+1} = -rem(f_{k-1}, f_k), zero tail dropped. Unlike the normalized
// sequence it tolerates degree gaps, so it remains usable on defective
// inputs.
inline std::vector<Poly> classical_chain(const Poly& p, const Poly& q) {
    std::vector<Poly> f{p};
    if (q.is_zero()) return f;
    f.push_back(q);
    while (true) {
        Poly r = -poly_rem(f[f.size() - 2], f.back());
        if (r.is_zero()) return f;
        f.push_back(std::move(r));
    }
}

namespace detail {

inline int variations(const std::vector<int>& signs) {
    int v = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

inline int variations_at(const std::vector<Poly>& chain, const Rat& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const Poly& f : chain) signs.push_back(sign(f(x)));
    return variations(signs);
}

// Sign of f at -infinity / +infinity.
inline int sign_at_minus_inf(const Poly& f) {
    return (f.degree() % 2 ? -1 : 1) * sign(f.lc());
}
inline int sign_at_plus_inf(const Poly& f) { return sign(f.lc()); }

}  // namespace detail

// Number of distinct real roots of p in the open interval (a, b), via the
// classical chain of (p, p'); p may have multiple roots. Throws
// std::invalid_argument when a >= b or an endpoint is a root.
inline int classical_sturm_query(const Poly& p, const Rat& a, const Rat& b) {
    if (p.is_zero()) throw std::invalid_argument("classical_sturm_query: zero polynomial");
    if (!(a < b)) throw std::invalid_argument("classical_sturm_query: empty interval");
    if (p(a) == 0 || p(b) == 0)
        throw std::invalid_argument("classical_sturm_query: endpoint is a root");
    if (p.degree() < 1) return 0;
    const std::vector<Poly> chain = classical_chain(p, derivative(p));
    return detail::variations_at(chain, a) - detail::variations_at(chain, b);
}

// Number of distinct real roots of a monic squarefree p, as PmV of the sign
// sequence of the remainder sequence of (p, p'/n). Throws NotSquarefree, and
// DegreeBreakdown when the sequence is defective (callers may fall back to
// classical_sturm_query over (-B, B)).
inline int sturm_count(const Poly& p) {
    if (!p.is_monic() || p.degree() < 1)
        throw std::invalid_argument("sturm_count: monic polynomial of degree >= 1 required");
    if (poly_gcd(p, derivative(p)).degree() > 0) throw NotSquarefree();
    const Sequence s = compute(p, monic(derivative(p)));
    if (s.breakdown) throw DegreeBreakdown(*s.breakdown);
    return pmv(s.nu);
}

// Tarski query: #{x : p(x)=0, r(x)>0} - #{x : p(x)=0, r(x)<0} for monic
// squarefree p. Computed as the signature of H_n(g/p) with g = rem(p' r, p);
// when that LDL^T hits a zero pivot, falls back to the variation difference
// V(-inf) - V(+inf) of the classical chain of (p, g), which computes the same
// Cauchy index.
inline int tarski_query(const Poly& r, const Poly& p) {
    if (!p.is_monic() || p.degree() < 1)
        throw std::invalid_argument("tarski_query: monic p of degree >= 1 required");
    if (poly_gcd(p, derivative(p)).degree() > 0) throw NotSquarefree();
    const Poly g = poly_rem(derivative(p) * r, p);
    if (g.is_zero()) return 0;  // r vanishes at every root of p
    try {
        return hankel::signature(hankel::series_expand(p, g));
    } catch (const ZeroPivot&) {
        const std::vector<Poly> chain = classical_chain(p, g);
        std::vector<int> lo, hi;
        lo.reserve(chain.size());
        hi.reserve(chain.size());
        for (const Poly& f : chain) {
            lo.push_back(detail::sign_at_minus_inf(f));
            hi.push_back(detail::sign_at_plus_inf(f));
        }
        return detail::variations(lo) - detail::variations(hi);
    }
}

}  // namespace tridet::srems
