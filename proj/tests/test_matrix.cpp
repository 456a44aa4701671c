#include "helpers.hpp"
#include "tridet/errors.hpp"
#include "tridet/matrix.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

using namespace tridet;

namespace {

DenseMat diag_of(const std::vector<Rat>& d) {
    DenseMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows(); ++i) m(i, i) = d[static_cast<size_t>(i)];
    return m;
}

DenseMat random_symmetric(testutil::Gen& g, int n) {
    DenseMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            const Rat v = g.rat(6, 3);
            m(i, j) = v;
            m(j, i) = v;
        }
    return m;
}

}  // namespace

TEST_CASE("dense matrix basics") {
    DenseMat m(2, 3);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    CHECK(m(1, 2) == 0);
    m(1, 2) = Rat(1, 2);
    CHECK(m(1, 2) == Rat(1, 2));
    CHECK_FALSE(m.is_square());

    CHECK_THROWS_AS((DenseMat{{1, 2}, {3}}), std::invalid_argument);

    const DenseMat a{{1, 2}, {3, 4}};
    CHECK(a.is_square());
    CHECK_FALSE(a.is_symmetric());
    CHECK(DenseMat{{1, 2}, {2, 5}}.is_symmetric());

    CHECK(transpose(a) == DenseMat{{1, 3}, {2, 4}});
    CHECK(DenseMat::identity(2) == DenseMat{{1, 0}, {0, 1}});
    CHECK(exchange_matrix(3) == DenseMat{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});

    CHECK(a + a == Rat(2) * a);
    CHECK(a - a == DenseMat(2, 2));
    CHECK(a * DenseMat::identity(2) == a);
    CHECK(DenseMat{{1, 2}, {3, 4}} * DenseMat{{0, 1}, {1, 0}} == DenseMat{{2, 1}, {4, 3}});
}

TEST_CASE("companion matrices") {
    CHECK(companion_matrix(Poly{-1, 0, 1}) == DenseMat{{0, 1}, {1, 0}});
    CHECK(companion_matrix(Poly{-5, 1}) == DenseMat{{5}});
    CHECK(companion_matrix(Poly{1, -1, 0, 1}) ==
          DenseMat{{0, 0, -1}, {1, 0, 1}, {0, 1, 0}});

    CHECK_THROWS_AS(companion_matrix(Poly{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(companion_matrix(Poly{3}), std::invalid_argument);

    SECTION("characteristic polynomial recovers p") {
        testutil::Gen g(404);
        for (int it = 0; it < 25; ++it) {
            const Poly p = g.monic(g.int_in(1, 6));
            const DenseMat c = companion_matrix(p);
            CHECK(testutil::char_poly_of(c) == p);
            const Rat expected_det = (p.degree() % 2 == 0) ? p[0] : -p[0];
            CHECK(determinant(c) == expected_det);
        }
    }

    SECTION("Cayley-Hamilton: p vanishes at its companion matrix") {
        testutil::Gen g(405);
        for (int it = 0; it < 10; ++it) {
            const Poly p = g.monic(g.int_in(1, 5));
            CHECK(poly_at_matrix(p, companion_matrix(p)) == DenseMat(p.degree(), p.degree()));
        }
    }
}

TEST_CASE("unpivoted LDL^T") {
    SECTION("pinned decomposition") {
        const DenseMat h{{3, 0, 2}, {0, 2, 0}, {2, 0, 2}};
        const UnitLDL f = ldlt_decompose(h);
        CHECK(f.L == DenseMat{{1, 0, 0}, {0, 1, 0}, {Rat(2, 3), 0, 1}});
        CHECK(f.D == std::vector<Rat>{3, 2, Rat(2, 3)});
        CHECK(f.L * diag_of(f.D) * transpose(f.L) == h);
    }

    SECTION("identity") {
        const UnitLDL f = ldlt_decompose(DenseMat::identity(2));
        CHECK(f.L == DenseMat::identity(2));
        CHECK(f.D == std::vector<Rat>{1, 1});
    }

    SECTION("zero pivots carry their 1-based index") {
        try {
            ldlt_decompose(DenseMat{{0, 1}, {1, 0}});
            FAIL("expected ZeroPivot");
        } catch (const ZeroPivot& e) {
            CHECK(e.index == 1);
        }
        try {
            ldlt_decompose(DenseMat{{1, 2}, {2, 4}});
            FAIL("expected ZeroPivot");
        } catch (const ZeroPivot& e) {
            CHECK(e.index == 2);
        }
    }

    SECTION("non-symmetric input rejected") {
        CHECK_THROWS_AS(ldlt_decompose(DenseMat{{1, 2}, {3, 4}}), std::invalid_argument);
        CHECK_THROWS_AS(ldlt_partial(DenseMat{{1, 2}, {3, 4}}), std::invalid_argument);
    }

    SECTION("in-band breakdown report") {
        const PartialLDL p = ldlt_partial(DenseMat{{0, 1}, {1, 0}});
        CHECK(p.D.empty());
        CHECK(p.zero_pivot == 1);

        const PartialLDL q = ldlt_partial(DenseMat{{3, 0, 2}, {0, 2, 0}, {2, 0, 2}});
        CHECK(q.D == std::vector<Rat>{3, 2, Rat(2, 3)});
        CHECK_FALSE(q.zero_pivot.has_value());
    }

    SECTION("round-trip and minor products on random symmetric matrices") {
        testutil::Gen g(505);
        int decomposed = 0;
        for (int it = 0; it < 40; ++it) {
            const int n = g.int_in(1, 5);
            const DenseMat h = random_symmetric(g, n);
            UnitLDL f;
            try {
                f = ldlt_decompose(h);
            } catch (const ZeroPivot&) {
                continue;  // degenerate draw
            }
            ++decomposed;
            CHECK(f.L * diag_of(f.D) * transpose(f.L) == h);
            // L is unit lower triangular
            for (int i = 0; i < n; ++i) {
                CHECK(f.L(i, i) == 1);
                for (int j = i + 1; j < n; ++j) CHECK(f.L(i, j) == 0);
            }
            // D_1 ... D_k equals the k-th leading principal minor
            Rat prod = 1;
            for (int k = 1; k <= n; ++k) {
                prod *= f.D[static_cast<size_t>(k - 1)];
                DenseMat lead(k, k);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) lead(i, j) = h(i, j);
                CHECK(determinant(lead) == prod);
            }
        }
        CHECK(decomposed >= 25);
    }
}

TEST_CASE("lower triangular inverse") {
    CHECK(lower_tri_inverse(DenseMat{{1, 0, 0}, {0, 1, 0}, {Rat(2, 3), 0, 1}}) ==
          DenseMat{{1, 0, 0}, {0, 1, 0}, {Rat(-2, 3), 0, 1}});
    CHECK(lower_tri_inverse(DenseMat{{2, 0}, {1, 3}}) ==
          DenseMat{{Rat(1, 2), 0}, {Rat(-1, 6), Rat(1, 3)}});
    CHECK(lower_tri_inverse(DenseMat{{1}}) == DenseMat{{1}});

    CHECK_THROWS_AS(lower_tri_inverse(DenseMat{{1, 1}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(lower_tri_inverse(DenseMat{{0, 0}, {1, 1}}), std::invalid_argument);

    SECTION("L * inverse == identity") {
        testutil::Gen g(606);
        for (int it = 0; it < 30; ++it) {
            const int n = g.int_in(1, 5);
            DenseMat l(n, n);
            for (int i = 0; i < n; ++i) {
                l(i, i) = g.nonzero_rat(5, 3);
                for (int j = 0; j < i; ++j) l(i, j) = g.rat(5, 3);
            }
            CHECK(l * lower_tri_inverse(l) == DenseMat::identity(n));
            CHECK(lower_tri_inverse(l) * l == DenseMat::identity(n));
        }
    }
}

TEST_CASE("determinants") {
    CHECK(determinant(DenseMat{{1, 2}, {3, 4}}) == -2);
    CHECK(determinant(DenseMat::identity(4)) == 1);
    CHECK(determinant(DenseMat{{1, 2}, {2, 4}}) == 0);
    CHECK(determinant(exchange_matrix(3)) == -1);
    CHECK(determinant(exchange_matrix(4)) == 1);
    CHECK_THROWS_AS(determinant(DenseMat(2, 3)), std::invalid_argument);

    SECTION("multiplicative, and matches the Laplace oracle") {
        testutil::Gen g(707);
        for (int it = 0; it < 20; ++it) {
            const int n = g.int_in(1, 5);
            DenseMat a(n, n), b(n, n);
            testutil::PolyMat pm(static_cast<size_t>(n),
                                 std::vector<Poly>(static_cast<size_t>(n)));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    a(i, j) = g.rat(5, 2);
                    b(i, j) = g.rat(5, 2);
                    pm[static_cast<size_t>(i)][static_cast<size_t>(j)] = Poly{a(i, j)};
                }
            CHECK(determinant(a * b) == determinant(a) * determinant(b));
            CHECK(testutil::poly_det(pm) == Poly{determinant(a)});
        }
    }
}

TEST_CASE("polynomial evaluation at a matrix") {
    const DenseMat c = companion_matrix(Poly{-1, 0, 1});  // squares to the identity
    CHECK(poly_at_matrix(Poly{0, 0, 1}, c) == DenseMat::identity(2));
    CHECK(poly_at_matrix(Poly{-1, 0, 1}, c) == DenseMat(2, 2));
    CHECK(poly_at_matrix(Poly{}, c) == DenseMat(2, 2));
    CHECK(poly_at_matrix(Poly{1, 1}, DenseMat{{2}}) == DenseMat{{3}});
    CHECK_THROWS_AS(poly_at_matrix(Poly{1}, DenseMat(2, 3)), std::invalid_argument);
}
