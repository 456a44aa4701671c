#pragma once

// Determinantal representations p(x) = det(J) det(xJ - Td) with Td symmetric
// tridiagonal and J a signature diagonal: real-root isolation, construction
// of an interlacing partner polynomial, the builder achieving
// sgn(J) = number of real roots, the lower-bound check, and a scan that
// profiles the LDL^T diagonal of H(q/p) over a family of q.

#include "tridet/errors.hpp"
#include "tridet/hankel.hpp"
#include "tridet/poly.hpp"
#include "tridet/srems.hpp"
#include "tridet/tridiag.hpp"

#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

namespace tridet::detrep {

struct Interval {
    Rat lo, hi;

    friend bool operator==(const Interval&, const Interval&) = default;
};

namespace detail {

// A point in (lo, m] that is not a root of p, found by halving toward lo
// from the midpoint m. Used to keep bisection endpoints off the roots.
inline Rat nonroot_cut(const Poly& p, const Rat& lo, const Rat& hi) {
    Rat m = (lo + hi) / 2;
    while (p(m) == 0) m = (lo + m) / 2;
    return m;
}

}  // namespace detail

// Isolating intervals for the distinct real roots of a monic squarefree p:
// sorted, pairwise non-overlapping open intervals with non-root rational
// endpoints, one root in each. Bisection over (-B, B) from the Cauchy bound,
// counting by Sturm queries. Throws NotSquarefree.
inline std::vector<Interval> isolate_real_roots(const Poly& p) {
    if (!p.is_monic() || p.degree() < 1)
        throw std::invalid_argument("isolate_real_roots: monic polynomial of degree >= 1 required");
    if (poly_gcd(p, derivative(p)).degree() > 0) throw NotSquarefree();
    const Rat b = cauchy_bound(p);  // strict bound: p(-b) != 0 and p(b) != 0
    std::vector<Interval> out;
    auto refine = [&](auto&& self, const Rat& lo, const Rat& hi, int count) -> void {
        if (count == 0) return;
        if (count == 1) {
            out.push_back({lo, hi});
            return;
        }
        const Rat mid = detail::nonroot_cut(p, lo, hi);
        const int left = srems::classical_sturm_query(p, lo, mid);
        self(self, lo, mid, left);
        self(self, mid, hi, count - left);
    };
    refine(refine, -b, b, srems::classical_sturm_query(p, -b, b));
    return out;
}

namespace detail {

// Halve an isolating interval, keeping the half that contains the root.
inline Interval halve(const Poly& p, const Interval& iv) {
    const Rat cut = nonroot_cut(p, iv.lo, iv.hi);
    if (srems::classical_sturm_query(p, iv.lo, cut) == 1) return {iv.lo, cut};
    return {cut, iv.hi};
}

// k-th prime (k = 0 -> 2), by trial division; inputs stay desk-scale.
inline int nth_prime(int k) {
    int count = 0;
    for (int cand = 2;; ++cand) {
        bool prime = true;
        for (int d = 2; d * d <= cand; ++d)
            if (cand % d == 0) {
                prime = false;
                break;
            }
        if (!prime) continue;
        if (count == k) return cand;
        ++count;
    }
}

// Seed-indexed cycle 0, 1/2, -1/2, 3/2, -3/2, ... used when a lone real
// linear factor is needed.
inline Rat half_cycle(int k) {
    if (k == 0) return 0;
    const int j = (k + 1) / 2;
    const Rat mag = Rat(2 * j - 1) / 2;
    return (k % 2 == 1) ? mag : -mag;
}

}  // namespace detail

// A monic q of degree n-1 whose real roots interlace those of p: one
// rational root in each gap between consecutive isolated roots (gap
// midpoints after refining the intervals until they are disjoint), padded to
// full degree by positive-definite factors x^2 + c with c running through
// the primes starting at index `seed`. With no real roots to interlace
// (empty isolation, even n), a single seed-cycled linear factor supplies the
// odd degree. Deterministic given (p, isolation, seed).
inline Poly interlacing_q(const Poly& p, const std::vector<Interval>& isolation, int seed) {
    const int n = p.degree();
    const int s = static_cast<int>(isolation.size());
    assert((n - s) % 2 == 0);  // complex roots pair up
    std::vector<Interval> iv = isolation;
    // Overlapping intervals are refined away; a shared endpoint is fine (the
    // point itself separates the two roots, so the midpoint still lands
    // strictly between them).
    for (bool touched = true; touched;) {
        touched = false;
        for (size_t i = 0; i + 1 < iv.size(); ++i)
            if (iv[i].hi > iv[i + 1].lo) {
                iv[i] = detail::halve(p, iv[i]);
                iv[i + 1] = detail::halve(p, iv[i + 1]);
                touched = true;
            }
    }
    Poly q{1};
    for (size_t i = 0; i + 1 < iv.size(); ++i) {
        const Rat y = (iv[i].hi + iv[i + 1].lo) / 2;
        q = q * Poly{-y, 1};
    }
    int fillers = (n - 1 - (s > 0 ? s - 1 : 0)) / 2;
    if (s == 0) {
        // n is even, so q needs odd degree: one real linear factor
        q = q * Poly{-detail::half_cycle(seed), 1};
        fillers = (n - 2) / 2;
    }
    for (int j = 0; j < fillers; ++j)
        q = q * Poly{Rat(detail::nth_prime(seed + j)), 0, 1};
    return q;
}

// Symmetric tridiagonal determinantal data for p: diag and offdiag stored
// bottom-up as in tridiag::Surd (radicand 0 marks a junction between
// direct-sum blocks), J top-down with last entry +1. The characteristic
// polynomial of the pencil equals p, and sgn(J) equals the number of real
// roots of p counted with multiplicity.
struct Rep {
    std::vector<Rat> diag;
    std::vector<tridiag::Surd::Off> offdiag;
    std::vector<int> J;
    Poly p;

    int sgn_J() const { return tridiag::sgn(J); }
};

// Characteristic polynomial of the represented pencil: the product of the
// characteristic polynomials of the blocks split at zero couplings.
inline Poly rep_char_poly(const Rep& rep) {
    Poly acc{1};
    for (const tridiag::Block& b : tridiag::split_blocks(rep.diag, rep.offdiag, rep.J))
        acc = acc * tridiag::char_polys(b.rep)[0];
    return acc;
}

inline Rep build(const Poly& p, int seed);

namespace detail {

// Stack a on the bottom and b on top, joined by a zero coupling; the +1 at
// the bottom of b's signature slice keeps the junction convention.
inline Rep direct_sum(const Rep& a, const Rep& b) {
    Rep r;
    r.diag = a.diag;
    r.diag.insert(r.diag.end(), b.diag.begin(), b.diag.end());
    r.offdiag = a.offdiag;
    r.offdiag.push_back({1, Rat(0)});
    r.offdiag.insert(r.offdiag.end(), b.offdiag.begin(), b.offdiag.end());
    r.J = b.J;
    r.J.insert(r.J.end(), a.J.begin(), a.J.end());
    r.p = a.p * b.p;
    return r;
}

inline Rep build_squarefree(const Poly& p, int seed) {
    const std::vector<Interval> iso = isolate_real_roots(p);
    const int s = static_cast<int>(iso.size());
    for (int attempt = 0; attempt < 32; ++attempt) {
        const Poly q = interlacing_q(p, iso, seed + attempt);
        const srems::Sequence seq = srems::compute(p, q);
        if (seq.breakdown) continue;
        const tridiag::Rep t = tridiag::from_srems(seq);
        const tridiag::Surd v = tridiag::surd_view(t);
        if (tridiag::sgn(v.J) != s) continue;  // defensive; interlacing forces equality
        Rep r;
        r.diag = v.diag;
        r.offdiag = v.offdiag;
        r.J = v.J;
        r.p = p;
        return r;
    }
    throw RetryExhausted("detrep: no generic interlacing partner found in 32 attempts");
}

}  // namespace detail

// Builds the representation. Multiple roots are handled by recursing on the
// squarefree part and the repeated part separately and stacking the results
// as a direct sum, so every real root contributes its multiplicity to
// sgn(J). Retries with stepped seeds on degenerate draws (bounded, then
// RetryExhausted). Reproducible bit-for-bit for a fixed seed.
inline Rep build(const Poly& p, int seed) {
    if (!p.is_monic() || p.degree() < 1)
        throw std::invalid_argument("detrep: monic polynomial of degree >= 1 required");
    const Poly g = poly_gcd(p, derivative(p));
    if (g.degree() > 0)
        return detail::direct_sum(build(poly_quo(p, g), seed), build(g, seed));
    return detail::build_squarefree(p, seed);
}

// The root-count lower bound: true iff oracle_count >= sgn(J).
inline bool lower_bound_check(const Rep& rep, int oracle_count) {
    return oracle_count >= rep.sgn_J();
}

// One row of a family scan: the LDL^T pivots of H(q/p) gathered before any
// zero pivot, plus the 1-based index of the vanishing leading principal
// minor when elimination broke down.
struct ScanRow {
    Poly q;
    std::vector<Rat> D;
    std::optional<int> breakdown;
};

// Profiles the LDL^T diagonal of H(q/p) for each q in the family; breakdowns
// are reported in-band so callers can chart sign conditions across a
// parameter range.
inline std::vector<ScanRow> family_scan(const Poly& p, const std::vector<Poly>& family) {
    if (!p.is_monic() || p.degree() < 1)
        throw std::invalid_argument("family_scan: monic p of degree >= 1 required");
    std::vector<ScanRow> rows;
    rows.reserve(family.size());
    for (const Poly& q : family) {
        if (!q.is_monic() || q.degree() != p.degree() - 1)
            throw std::invalid_argument("family_scan: each q must be monic with deg q = deg p - 1");
        const PartialLDL part = ldlt_partial(hankel::series_expand(p, q).matrix());
        rows.push_back({q, part.D, part.zero_pivot});
    }
    return rows;
}

}  // namespace tridet::detrep
