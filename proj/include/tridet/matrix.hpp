#pragma once

// Dense exact-rational matrices with just enough linear algebra for the
// library: products, transpose, companion matrices, unpivoted LDL^T,
// triangular inversion and exact determinants.

#include "tridet/errors.hpp"
#include "tridet/poly.hpp"
#include "tridet/rational.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace tridet {

class DenseMat {
public:
    DenseMat() = default;
    DenseMat(int rows, int cols)
        : r_(rows), c_(cols), e_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("DenseMat: negative size");
    }

    DenseMat(std::initializer_list<std::initializer_list<Rat>> rows) {
        r_ = static_cast<int>(rows.size());
        c_ = r_ ? static_cast<int>(rows.begin()->size()) : 0;
        e_.reserve(static_cast<size_t>(r_) * static_cast<size_t>(c_));
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != c_)
                throw std::invalid_argument("DenseMat: ragged rows");
            e_.insert(e_.end(), row.begin(), row.end());
        }
    }

    static DenseMat identity(int n) {
        DenseMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }

    Rat& operator()(int i, int j) { return e_[idx(i, j)]; }
    const Rat& operator()(int i, int j) const { return e_[idx(i, j)]; }

    bool is_square() const { return r_ == c_; }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (int i = 0; i < r_; ++i)
            for (int j = i + 1; j < c_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    friend bool operator==(const DenseMat& a, const DenseMat& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.e_ == b.e_;
    }

    friend DenseMat operator+(const DenseMat& a, const DenseMat& b) {
        a.require_same_shape(b);
        DenseMat m(a.r_, a.c_);
        for (size_t k = 0; k < a.e_.size(); ++k) m.e_[k] = a.e_[k] + b.e_[k];
        return m;
    }

    friend DenseMat operator-(const DenseMat& a, const DenseMat& b) {
        a.require_same_shape(b);
        DenseMat m(a.r_, a.c_);
        for (size_t k = 0; k < a.e_.size(); ++k) m.e_[k] = a.e_[k] - b.e_[k];
        return m;
    }

    friend DenseMat operator*(const Rat& s, const DenseMat& a) {
        DenseMat m(a.r_, a.c_);
        for (size_t k = 0; k < a.e_.size(); ++k) m.e_[k] = s * a.e_[k];
        return m;
    }

    friend DenseMat operator*(const DenseMat& a, const DenseMat& b) {
        if (a.c_ != b.r_) throw std::invalid_argument("DenseMat: product shape mismatch");
        DenseMat m(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                const Rat& f = a(i, k);
                if (f == 0) continue;
                for (int j = 0; j < b.c_; ++j) m(i, j) += f * b(k, j);
            }
        return m;
    }

private:
    size_t idx(int i, int j) const {
        if (i < 0 || i >= r_ || j < 0 || j >= c_)
            throw std::out_of_range("DenseMat: index out of range");
        return static_cast<size_t>(i) * static_cast<size_t>(c_) + static_cast<size_t>(j);
    }

    void require_same_shape(const DenseMat& o) const {
        if (r_ != o.r_ || c_ != o.c_)
            throw std::invalid_argument("DenseMat: shape mismatch");
    }

    int r_ = 0;
    int c_ = 0;
    std::vector<Rat> e_;
};

inline DenseMat transpose(const DenseMat& a) {
    DenseMat m(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m(j, i) = a(i, j);
    return m;
}

// Permutation with ones on the anti-diagonal; conjugation by it reverses
// coordinate order.
inline DenseMat exchange_matrix(int n) {
    DenseMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, n - 1 - i) = 1;
    return m;
}

// Companion matrix of a monic p of degree n >= 1: ones on the subdiagonal,
// last column -a_0 ... -a_{n-1}. Its characteristic polynomial is p, and it
// represents multiplication by x in the basis (1, x, ..., x^{n-1}) mod p.
inline DenseMat companion_matrix(const Poly& p) {
    if (!p.is_monic() || p.degree() < 1)
        throw std::invalid_argument("companion_matrix: monic polynomial of degree >= 1 required");
    const int n = p.degree();
    DenseMat m(n, n);
    for (int i = 1; i < n; ++i) m(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) m(i, n - 1) = -p[i];
    return m;
}

// Unit lower triangular L and diagonal D with input = L * diag(D) * L^T;
// every D entry nonzero.
struct UnitLDL {
    DenseMat L;
    std::vector<Rat> D;
};

// Pivots gathered before the first zero one; `zero_pivot` is the 1-based
// index of the vanishing leading principal minor when elimination stopped
// early.
struct PartialLDL {
    std::vector<Rat> D;
    std::optional<int> zero_pivot;
};

namespace detail {
// Unpivoted symmetric elimination. Fills L (unit lower triangular) and D
// until done or a zero pivot appears; returns the 1-based zero-pivot index.
inline std::optional<int> ldlt_eliminate(DenseMat a, DenseMat& L, std::vector<Rat>& D) {
    const int n = a.rows();
    L = DenseMat::identity(n);
    D.clear();
    for (int k = 0; k < n; ++k) {
        const Rat d = a(k, k);
        if (d == 0) return k + 1;
        D.push_back(d);
        for (int i = k + 1; i < n; ++i) L(i, k) = a(i, k) / d;
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j <= i; ++j) a(i, j) -= L(i, k) * d * L(j, k);
    }
    return std::nullopt;
}
}  // namespace detail

// Unpivoted LDL^T of a symmetric matrix. The pivot D_k equals the ratio of
// consecutive leading principal minors, so det(H_k) = D_1 * ... * D_k.
// Throws ZeroPivot(k) when the k-th leading principal minor vanishes.
inline UnitLDL ldlt_decompose(const DenseMat& h) {
    if (!h.is_symmetric())
        throw std::invalid_argument("ldlt_decompose: symmetric matrix required");
    UnitLDL out;
    if (auto zero = detail::ldlt_eliminate(h, out.L, out.D)) throw ZeroPivot(*zero);
    return out;
}

// Same elimination with breakdown reported in-band instead of thrown.
inline PartialLDL ldlt_partial(const DenseMat& h) {
    if (!h.is_symmetric())
        throw std::invalid_argument("ldlt_partial: symmetric matrix required");
    DenseMat l;
    PartialLDL out;
    out.zero_pivot = detail::ldlt_eliminate(h, l, out.D);
    return out;
}

// Exact inverse of a lower triangular matrix by forward substitution.
// Throws std::invalid_argument on a zero diagonal entry.
inline DenseMat lower_tri_inverse(const DenseMat& l) {
    if (!l.is_square())
        throw std::invalid_argument("lower_tri_inverse: square matrix required");
    const int n = l.rows();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (l(i, j) != 0)
                throw std::invalid_argument("lower_tri_inverse: matrix is not lower triangular");
    for (int i = 0; i < n; ++i)
        if (l(i, i) == 0)
            throw std::invalid_argument("lower_tri_inverse: zero on the diagonal");
    DenseMat inv(n, n);
    for (int j = 0; j < n; ++j) {
        inv(j, j) = Rat(1) / l(j, j);
        for (int i = j + 1; i < n; ++i) {
            Rat acc = 0;
            for (int k = j; k < i; ++k) acc += l(i, k) * inv(k, j);
            inv(i, j) = -acc / l(i, i);
        }
    }
    return inv;
}

// Exact determinant by Gaussian elimination with row swaps.
inline Rat determinant(DenseMat a) {
    if (!a.is_square()) throw std::invalid_argument("determinant: square matrix required");
    const int n = a.rows();
    Rat det = 1;
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (a(i, k) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != k) {
            for (int j = k; j < n; ++j) std::swap(a(k, j), a(pivot, j));
            det = -det;
        }
        det *= a(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            Rat f = a(i, k) / a(k, k);
            for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

// q evaluated at a square matrix argument (Horner).
inline DenseMat poly_at_matrix(const Poly& q, const DenseMat& c) {
    if (!c.is_square()) throw std::invalid_argument("poly_at_matrix: square matrix required");
    const int n = c.rows();
    DenseMat acc(n, n);
    for (int i = q.degree(); i >= 0; --i) {
        acc = acc * c;
        for (int d = 0; d < n; ++d) acc(d, d) += q[i];
    }
    return acc;
}

inline std::ostream& operator<<(std::ostream& os, const DenseMat& m) {
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? "\n[" : "[");
        for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
        os << "]";
    }
    return os;
}

}  // namespace tridet
