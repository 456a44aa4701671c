#pragma once

// Test-local oracles and deterministic generators. The oracles here are
// deliberately naive (Laplace expansion, textbook Gaussian elimination,
// direct signed remainder chains) so they share no code with the library
// routines they cross-check.

#include "tridet/matrix.hpp"
#include "tridet/poly.hpp"
#include "tridet/rational.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <unordered_map>
#include <utility>
#include <vector>

namespace testutil {

using tridet::DenseMat;
using tridet::Poly;
using tridet::Rat;

using PolyMat = std::vector<std::vector<Poly>>;

// Determinant of a square matrix of polynomials by Laplace expansion along
// rows, memoized on the set of still-available columns. Exponential, fine
// for the n <= 8 sizes the tests use.
inline Poly poly_det(const PolyMat& m) {
    const int n = static_cast<int>(m.size());
    std::unordered_map<std::uint32_t, Poly> memo;
    std::function<Poly(std::uint32_t)> go = [&](std::uint32_t mask) -> Poly {
        if (mask == 0) return Poly{1};
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        const int row = n - std::popcount(mask);
        Poly acc;
        int parity = 1;
        for (int j = 0; j < n; ++j) {
            if (!(mask >> j & 1u)) continue;
            const Poly& e = m[static_cast<size_t>(row)][static_cast<size_t>(j)];
            if (!e.is_zero()) {
                const Poly sub = go(mask & ~(1u << j));
                acc = (parity > 0) ? acc + e * sub : acc - e * sub;
            }
            parity = -parity;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return go(n == 0 ? 0u : (1u << n) - 1u);
}

// det(xI - a) through the polynomial determinant above.
inline Poly char_poly_of(const DenseMat& a) {
    const int n = a.rows();
    PolyMat m(static_cast<size_t>(n), std::vector<Poly>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                (i == j) ? Poly{-a(i, j), 1} : Poly{-a(i, j)};
    return poly_det(m);
}

// det(J) * det(xJ - T) for a symmetric tridiagonal T, with (diag, off)
// stored bottom-up and J top-down; `off` holds the literal off-diagonal
// values (rational square roots), not radicands.
inline Poly pencil_det(const std::vector<Rat>& diag, const std::vector<Rat>& off,
                       const std::vector<int>& J) {
    const int n = static_cast<int>(diag.size());
    PolyMat m(static_cast<size_t>(n), std::vector<Poly>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        m[static_cast<size_t>(i)][static_cast<size_t>(i)] =
            Poly{-diag[static_cast<size_t>(n - 1 - i)], Rat(J[static_cast<size_t>(i)])};
    for (int i = 0; i + 1 < n; ++i) {
        const Poly e{-off[static_cast<size_t>(n - 2 - i)]};
        m[static_cast<size_t>(i)][static_cast<size_t>(i + 1)] = e;
        m[static_cast<size_t>(i + 1)][static_cast<size_t>(i)] = e;
    }
    Poly d = poly_det(m);
    Rat det_j(1);
    for (int e : J) det_j *= e;
    return det_j * d;
}

// Rank over the rationals by Gaussian elimination.
inline int rank(DenseMat a) {
    const int rows = a.rows(), cols = a.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < cols; ++j) std::swap(a(r, j), a(piv, j));
        for (int i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            const Rat f = a(i, c) / a(r, c);
            for (int j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

// Classical signed remainder chain f_0 = p, f_1 = q,
// f_{k+1} = -rem(f_{k-1}, f_k), stopping before the first zero remainder.
inline std::vector<Poly> signed_chain_oracle(const Poly& p, const Poly& q) {
    std::vector<Poly> f{p, q};
    while (!f.back().is_zero()) f.push_back(-tridet::poly_rem(f[f.size() - 2], f.back()));
    f.pop_back();
    return f;
}

// Deterministic pseudo-random inputs for property tests.
struct Gen {
    std::mt19937 rng;

    explicit Gen(std::uint32_t seed) : rng(seed) {}

    int int_in(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    Rat rat(int num_abs = 10, int den_max = 4) {
        return Rat(int_in(-num_abs, num_abs), int_in(1, den_max));
    }

    Rat nonzero_rat(int num_abs = 10, int den_max = 4) {
        while (true) {
            Rat r = rat(num_abs, den_max);
            if (r != 0) return r;
        }
    }

    Poly monic(int deg) {
        std::vector<Rat> c(static_cast<size_t>(deg) + 1);
        for (int i = 0; i < deg; ++i) c[static_cast<size_t>(i)] = rat();
        c[static_cast<size_t>(deg)] = 1;
        return Poly(std::move(c));
    }
};

// A monic squarefree polynomial with a known number of distinct real roots:
// `real_roots` distinct linear factors drawn from a fixed rational pool times
// a few pairwise-distinct irreducible quadratics.
struct RootProduct {
    Poly p;
    int real_roots;
};

inline RootProduct random_root_product(Gen& g, int max_real, int max_quad) {
    std::vector<Rat> pool;
    for (int i = -8; i <= 8; ++i) pool.emplace_back(i, 2);
    std::shuffle(pool.begin(), pool.end(), g.rng);
    const int k = g.int_in(0, max_real);
    const int m = g.int_in(k == 0 ? 1 : 0, max_quad);
    Poly p{1};
    for (int i = 0; i < k; ++i) p = p * Poly{-pool[static_cast<size_t>(i)], 1};
    for (int j = 0; j < m; ++j) {
        const Rat u = g.rat(3, 2);
        const Rat v = Rat(5 * j + g.int_in(1, 4));  // distinct across j
        p = p * (Poly{-u, 1} * Poly{-u, 1} + Poly{v});
    }
    return {p, k};
}

}  // namespace testutil
