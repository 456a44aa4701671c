#pragma once

// Exact tridiagonal representations of a remainder sequence: the rational
// canonical form (subdiagonal 1, superdiagonal eps_k * beta_sq_k), the
// characteristic-polynomial recurrence, duals, the conjugation onto the
// companion matrix, the symmetric square-root view with its signature
// diagonal, and splitting along zero couplings.

#include "tridet/errors.hpp"
#include "tridet/hankel.hpp"
#include "tridet/matrix.hpp"
#include "tridet/poly.hpp"
#include "tridet/srems.hpp"

#include <stdexcept>
#include <vector>

namespace tridet::tridiag {

struct Coupling {
    int eps;      // +1 or -1
    Rat beta_sq;  // > 0

    friend bool operator==(const Coupling&, const Coupling&) = default;
};

// Tridiagonal data indexed from the bottom-right corner of the displayed
// matrix: alphas[k-1] = alpha_k is the k-th diagonal entry counted from the
// bottom, and couplings[k-1] couples alpha_k with alpha_{k+1}. So index 0
// describes the bottom-right 2x2 corner and display order is the reverse of
// storage order.
struct Rep {
    std::vector<Rat> alphas;
    std::vector<Coupling> couplings;

    int n() const { return static_cast<int>(alphas.size()); }

    friend bool operator==(const Rep&, const Rep&) = default;
};

// Packages a breakdown-free remainder sequence as tridiagonal data; the
// characteristic polynomial of the result is p_0. Throws DegreeBreakdown.
inline Rep from_srems(const srems::Sequence& s) {
    if (s.breakdown) throw DegreeBreakdown(*s.breakdown);
    Rep t;
    t.alphas = s.alphas;
    t.couplings.reserve(s.epsilons.size());
    for (size_t k = 0; k < s.epsilons.size(); ++k)
        t.couplings.push_back({s.epsilons[k], s.beta_sqs[k]});
    return t;
}

// Characteristic polynomials (delta_0, ..., delta_n) of the nested principal
// submatrices: delta_n = 1, delta_{n-1} = x - alpha_n, and
// delta_j = (x - alpha_{j+1}) delta_{j+1} - eps_{j+1} beta_sq_{j+1} delta_{j+2}.
// delta_{n-k} is the characteristic polynomial of the bottom-right k x k
// block; delta_0 is that of the whole matrix.
inline std::vector<Poly> char_polys(const Rep& t) {
    const int n = t.n();
    std::vector<Poly> d(static_cast<size_t>(n) + 1);
    d[static_cast<size_t>(n)] = Poly{1};
    if (n == 0) return d;
    d[static_cast<size_t>(n - 1)] = Poly{-t.alphas[static_cast<size_t>(n - 1)], 1};
    for (int j = n - 2; j >= 0; --j) {
        const Poly lin{-t.alphas[static_cast<size_t>(j)], 1};
        const Rat c = Rat(t.couplings[static_cast<size_t>(j)].eps) *
                      t.couplings[static_cast<size_t>(j)].beta_sq;
        d[static_cast<size_t>(j)] =
            lin * d[static_cast<size_t>(j + 1)] - c * d[static_cast<size_t>(j + 2)];
    }
    return d;
}

// Conjugation by the anti-identity: both sequences reversed. An involution
// that preserves the characteristic polynomial.
inline Rep dual(const Rep& t) {
    Rep r = t;
    std::reverse(r.alphas.begin(), r.alphas.end());
    std::reverse(r.couplings.begin(), r.couplings.end());
    return r;
}

// The rational canonical matrix of t: subdiagonal all 1, superdiagonal
// c_k = eps_k * beta_sq_k, diagonal alpha_n ... alpha_1 top to bottom.
inline DenseMat canonical_matrix(const Rep& t) {
    const int n = t.n();
    DenseMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = t.alphas[static_cast<size_t>(n - 1 - i)];
    for (int i = 0; i + 1 < n; ++i) {
        const Coupling& c = t.couplings[static_cast<size_t>(n - 2 - i)];
        m(i, i + 1) = Rat(c.eps) * c.beta_sq;
        m(i + 1, i) = 1;
    }
    return m;
}

// The lower triangular change of basis with canonical_matrix(t) * L =
// L * C_p^T, p = delta_0. Column j of L^T holds the coefficients of
// (c_1 ... c_{n-1-j}) * delta_{n-j}, which pins the scale: the top-left
// entry of L is c_1 * ... * c_{n-1}. Requires nonzero couplings; unique up
// to a scalar.
inline DenseMat build_L(const Rep& t) {
    const int n = t.n();
    const std::vector<Poly> d = char_polys(t);
    std::vector<Rat> prefix(static_cast<size_t>(n), Rat(1));  // prefix[m] = c_1...c_m
    for (int m = 1; m < n; ++m) {
        const Coupling& c = t.couplings[static_cast<size_t>(m - 1)];
        prefix[static_cast<size_t>(m)] =
            prefix[static_cast<size_t>(m - 1)] * Rat(c.eps) * c.beta_sq;
    }
    DenseMat u(n, n);
    for (int j = 1; j <= n; ++j) {
        const Poly pj = prefix[static_cast<size_t>(n - j)] * d[static_cast<size_t>(n - j + 1)];
        for (int i = 0; i < n; ++i) u(i, j - 1) = pj[i];
    }
    return transpose(u);
}

// Symmetric square-root view. The displayed symmetric matrix carries
// sign * sqrt(radicand) on the off-diagonals; kept exact here as the pair
// (sign, radicand). diag and offdiag are stored bottom-up like Rep
// (diag[k-1] = alpha_k * theta_{k-1}, offdiag[k-1] twists coupling k), while
// J is listed top-down — matching the displayed diagonal — so its last entry
// is always +1.
struct Surd {
    struct Off {
        int sign;      // the sign theta_k carried by the square root
        Rat radicand;  // beta_sq_k

        friend bool operator==(const Off&, const Off&) = default;
    };

    std::vector<Rat> diag;
    std::vector<Off> offdiag;
    std::vector<int> J;  // (theta_{n-1}, ..., theta_1, 1)

    friend bool operator==(const Surd&, const Surd&) = default;
};

// Trace of the signature diagonal.
inline int sgn(const std::vector<int>& j) {
    int acc = 0;
    for (int e : j) acc += e;
    return acc;
}

// Conjugates the canonical form into a symmetric matrix paired with a
// signature diagonal J: with theta_0 = 1 and theta_k = eps_k * theta_{k-1},
// the matrix with diagonal alpha_k * theta_{k-1} and off-diagonal entries
// theta_k * sqrt(beta_sq_k) satisfies p(x) = det(J) det(xJ - Td), and
// sgn(J) = 1 + sum theta_k.
inline Surd surd_view(const Rep& t) {
    const int n = t.n();
    std::vector<int> theta(static_cast<size_t>(n), 1);
    for (int k = 1; k < n; ++k)
        theta[static_cast<size_t>(k)] = t.couplings[static_cast<size_t>(k - 1)].eps *
                                        theta[static_cast<size_t>(k - 1)];
    Surd v;
    v.diag.reserve(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k)
        v.diag.push_back(t.alphas[static_cast<size_t>(k - 1)] *
                         Rat(theta[static_cast<size_t>(k - 1)]));
    v.offdiag.reserve(t.couplings.size());
    for (int k = 1; k < n; ++k)
        v.offdiag.push_back({theta[static_cast<size_t>(k)],
                             t.couplings[static_cast<size_t>(k - 1)].beta_sq});
    v.J.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v.J[static_cast<size_t>(i)] = theta[static_cast<size_t>(n - 1 - i)];
    return v;
}

// One diagonal block of a symmetric form split at its zero couplings,
// untwisted back into tridiagonal data plus the block's own signature slice
// (top-down, last entry +1).
struct Block {
    Rep rep;
    std::vector<int> J;
};

// Splits symmetric data (diag, offdiag, J as in Surd, but with zero
// radicands allowed) into independent diagonal blocks at the zero couplings.
// Each zero coupling must carry a +1 J entry (theta resets across a
// junction); throws MathError otherwise. The product of the blocks'
// characteristic polynomials is the characteristic polynomial of the whole.
inline std::vector<Block> split_blocks(const std::vector<Rat>& diag,
                                       const std::vector<Surd::Off>& offdiag,
                                       const std::vector<int>& J) {
    const int n = static_cast<int>(diag.size());
    if (n < 1) throw std::invalid_argument("split_blocks: empty diagonal");
    if (static_cast<int>(offdiag.size()) != n - 1 || static_cast<int>(J.size()) != n)
        throw std::invalid_argument("split_blocks: size mismatch");
    for (int e : J)
        if (e != 1 && e != -1) throw std::invalid_argument("split_blocks: J entries must be +-1");
    if (J[static_cast<size_t>(n - 1)] != 1)
        throw std::invalid_argument("split_blocks: last J entry must be +1");
    // theta_k = J entry for position k counted from the bottom
    auto theta = [&](int k) { return J[static_cast<size_t>(n - 1 - k)]; };
    for (int k = 1; k < n; ++k)
        if (offdiag[static_cast<size_t>(k - 1)].radicand == 0 && theta(k) != 1)
            throw MathError("split_blocks: zero coupling carries a -1 signature entry");

    std::vector<Block> blocks;
    int lo = 1;  // 1-based bottom position of the current block
    for (int k = 1; k <= n; ++k) {
        const bool cut = (k == n) || offdiag[static_cast<size_t>(k - 1)].radicand == 0;
        if (!cut) continue;
        const int hi = k;
        Block b;
        for (int i = lo; i <= hi; ++i)
            b.rep.alphas.push_back(diag[static_cast<size_t>(i - 1)] * Rat(theta(i - 1)));
        for (int i = lo; i < hi; ++i)
            b.rep.couplings.push_back(
                {theta(i) * theta(i - 1), offdiag[static_cast<size_t>(i - 1)].radicand});
        for (int i = hi - 1; i >= lo - 1; --i) b.J.push_back(theta(i));
        blocks.push_back(std::move(b));
        lo = hi + 1;
    }
    return blocks;
}

// True iff the representation built from (p, dual partner of q) equals the
// dual of the representation built from (p, q). Throws DegreeBreakdown when
// the remainder sequence of (p, q) is defective.
inline bool duality_check(const Poly& p, const Poly& q) {
    const srems::Sequence s = srems::compute(p, q);
    if (s.breakdown) throw DegreeBreakdown(*s.breakdown);
    const Poly qt = hankel::dual_partner(p, q);
    const srems::Sequence st = srems::compute(p, qt);
    if (st.breakdown) throw DegreeBreakdown(*st.breakdown);
    return from_srems(st) == dual(from_srems(s));
}

}  // namespace tridet::tridiag
