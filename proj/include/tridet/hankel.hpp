#pragma once

// Hankel forms of rational functions q/p: series expansion, Newton sums,
// the intertwining relation with the companion matrix, the Horner basis and
// Barnett's formula, the symmetric pencil (H, C^T H), signatures, and the
// dual partner polynomial obtained through LDL^T.

#include "tridet/errors.hpp"
#include "tridet/matrix.hpp"
#include "tridet/poly.hpp"
#include "tridet/rational.hpp"

#include <stdexcept>
#include <vector>

namespace tridet::hankel {

// The 2n-1 series coefficients s_0 ... s_{2n-2} of q/p = sum s_j / x^{j+1};
// the associated n x n Hankel matrix has (i, j) entry s_{i+j}.
struct Seq {
    int n = 0;
    std::vector<Rat> s;

    DenseMat matrix() const {
        DenseMat m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = s[static_cast<size_t>(i + j)];
        return m;
    }
};

// Expansion of q/p at infinity, p monic of degree n >= 1, deg q < n.
// Maintains r_j = x^j * q mod p; s_j is the top coefficient of r_j, so every
// s_k automatically satisfies the recurrence
// s_k = -a_{n-1} s_{k-1} - ... - a_0 s_{k-n} for k >= n.
inline Seq series_expand(const Poly& p, const Poly& q) {
    if (!p.is_monic() || p.degree() < 1)
        throw std::invalid_argument("series_expand: monic p of degree >= 1 required");
    const int n = p.degree();
    if (q.degree() >= n)
        throw std::invalid_argument("series_expand: deg q < deg p required");
    Seq out;
    out.n = n;
    out.s.reserve(static_cast<size_t>(2 * n - 1));
    std::vector<Rat> r(static_cast<size_t>(n));
    for (int i = 0; i <= q.degree(); ++i) r[static_cast<size_t>(i)] = q[i];
    for (int j = 0; j < 2 * n - 1; ++j) {
        const Rat sj = r[static_cast<size_t>(n - 1)];
        out.s.push_back(sj);
        for (int i = n - 1; i >= 1; --i)
            r[static_cast<size_t>(i)] = r[static_cast<size_t>(i - 1)] - sj * p[i];
        r[0] = -sj * p[0];
    }
    return out;
}

// Power sums N_k of the roots of a monic p via Newton's identities; the
// resulting sequence is exactly the series of p'/p, i.e. the Hankel data of
// the "Newton matrix" of p.
inline Seq newton_sums(const Poly& p) {
    if (!p.is_monic() || p.degree() < 1)
        throw std::invalid_argument("newton_sums: monic polynomial of degree >= 1 required");
    const int n = p.degree();
    Seq out;
    out.n = n;
    out.s.assign(static_cast<size_t>(2 * n - 1), Rat(0));
    out.s[0] = n;
    for (int k = 1; k <= 2 * n - 2; ++k) {
        Rat acc = 0;
        for (int i = 1; i < k && i <= n; ++i)
            acc += p[n - i] * out.s[static_cast<size_t>(k - i)];
        if (k <= n) acc += Rat(k) * p[n - k];
        out.s[static_cast<size_t>(k)] = -acc;
    }
    return out;
}

// True iff H * C_p = C_p^T * H, the matrix form of the series recurrence.
inline bool intertwining_check(const Seq& h, const Poly& p) {
    if (h.n != p.degree())
        throw std::invalid_argument("intertwining_check: size mismatch");
    const DenseMat m = h.matrix();
    const DenseMat c = companion_matrix(p);
    return m * c == transpose(c) * m;
}

// Degree-decreasing Horner basis of the quotient algebra mod p:
// h_{n-1} = 1, h_i = x * h_{i+1} + a_{i+1}; deg h_i = n-1-i.
inline std::vector<Poly> horner_basis(const Poly& p) {
    if (!p.is_monic() || p.degree() < 1)
        throw std::invalid_argument("horner_basis: monic polynomial of degree >= 1 required");
    const int n = p.degree();
    std::vector<Poly> h(static_cast<size_t>(n));
    h[static_cast<size_t>(n - 1)] = Poly{1};
    for (int i = n - 2; i >= 0; --i)
        h[static_cast<size_t>(i)] =
            Poly::x() * h[static_cast<size_t>(i + 1)] + Poly{p[i + 1]};
    return h;
}

// Change of basis from the Horner basis to the canonical one: column j holds
// the canonical coefficients of h_j. As a Hankel matrix this is
// H(a_1, ..., a_{n-1}, 1, 0, ..., 0) — in particular invertible and
// anti-triangular.
inline DenseMat horner_matrix(const Poly& p) {
    const std::vector<Poly> h = horner_basis(p);
    const int n = static_cast<int>(h.size());
    DenseMat m(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) m(i, j) = h[static_cast<size_t>(j)][i];
    return m;
}

// Barnett's formula: q(C_p) = P^T * H_n(q/p) with P the Horner change of
// basis. Holds for every q with deg q < deg p.
inline bool barnett_check(const Poly& p, const Poly& q) {
    if (!p.is_monic() || p.degree() < 1)
        throw std::invalid_argument("barnett_check: monic p of degree >= 1 required");
    if (q.degree() >= p.degree())
        throw std::invalid_argument("barnett_check: deg q < deg p required");
    const DenseMat lhs = poly_at_matrix(q, companion_matrix(p));
    const DenseMat rhs = transpose(horner_matrix(p)) * series_expand(p, q).matrix();
    return lhs == rhs;
}

// The symmetric pencil behind the weak determinantal representation:
// H = H_n(q/p) together with C_p^T * H (symmetric), satisfying
// det(H) * p(x) = det(x*H - C_p^T*H).
struct Pencil {
    Seq h;
    DenseMat sym;
};

inline Pencil pencil(const Poly& p, const Poly& q) {
    if (!p.is_monic() || !q.is_monic() || q.degree() != p.degree() - 1)
        throw std::invalid_argument("pencil: monic p, monic q with deg q = deg p - 1 required");
    if (poly_gcd(p, q).degree() > 0)
        throw MathError("pencil: p and q share a nonconstant factor (H is singular)");
    Pencil out;
    out.h = series_expand(p, q);
    out.sym = transpose(companion_matrix(p)) * out.h.matrix();
    return out;
}

// Verifies det(H) * p(x) = det(x*H - C_p^T*H) at deg(p)+1 rational points,
// which pins the two sides as polynomials of degree <= deg(p).
inline bool pencil_identity_check(const Poly& p, const Poly& q) {
    const Pencil pc = pencil(p, q);
    const DenseMat h = pc.h.matrix();
    const Rat dh = determinant(h);
    for (int x = 0; x <= p.degree(); ++x) {
        const Rat lhs = dh * p(Rat(x));
        const Rat rhs = determinant(Rat(x) * h - pc.sym);
        if (lhs != rhs) return false;
    }
    return true;
}

// The monic polynomial read off the last row of L^{-1} from the LDL^T of
// H_n(q/p). Pairing p with it reverses the tridiagonal representation of
// (p, q); applying it twice returns q. Propagates ZeroPivot when a leading
// principal minor of H vanishes.
inline Poly dual_partner(const Poly& p, const Poly& q) {
    if (!p.is_monic() || !q.is_monic() || q.degree() != p.degree() - 1)
        throw std::invalid_argument("dual_partner: monic p, monic q with deg q = deg p - 1 required");
    const int n = p.degree();
    const UnitLDL ldl = ldlt_decompose(series_expand(p, q).matrix());
    const DenseMat inv = lower_tri_inverse(ldl.L);
    std::vector<Rat> c(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) c[static_cast<size_t>(j)] = inv(n - 1, j);
    return Poly(std::move(c));  // unit triangularity makes this monic
}

// Signature (positive minus negative eigenvalue count) of the Hankel matrix,
// read off the signs of the LDL^T pivots. Requires all leading principal
// minors nonzero; throws ZeroPivot otherwise.
inline int signature(const Seq& h) {
    const UnitLDL ldl = ldlt_decompose(h.matrix());
    int s = 0;
    for (const Rat& d : ldl.D) s += sign(d);
    return s;
}

}  // namespace tridet::hankel
