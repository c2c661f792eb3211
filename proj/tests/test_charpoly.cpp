// Characteristic polynomial engines: exact Faddeev-LeVerrier over Q(sqrt2),
// the floating fallback, and the closed-form families.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include <sombor/charpoly.hpp>
#include <sombor/generate.hpp>
#include <sombor/graph.hpp>
#include <sombor/weights.hpp>

#include "support/oracles.hpp"

using namespace sombor;
using Catch::Matchers::WithinAbs;

namespace {

// det(xI - A_SO) at a sample point, straight from Gaussian elimination
QSqrt2 det_at(const Graph& g, long x) {
    SomborMatrix M = sombor_matrix(g);
    REQUIRE(M.all_exact());
    int n = g.n();
    std::vector<std::vector<QSqrt2>> a(static_cast<std::size_t>(n),
                                       std::vector<QSqrt2>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = QSqrt2(x);
        for (int j = 0; j < n; ++j)
            if (const SomborWeight* w = M.entry(i, j))
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -w->exact;
    }
    return oracle::gauss_det(a);
}

void check_against_determinant(const Graph& g) {
    CharPolyResult r = charpoly_generic(g);
    REQUIRE(r.mode == PolyMode::exact);
    for (long x : {-3L, -1L, 0L, 2L, 5L}) CHECK(r.exact_poly.eval(QSqrt2(x)) == det_at(g, x));
}

void check_float_agreement(const ExactPoly& closed, const FloatPoly& numeric, double tol) {
    REQUIRE(closed.degree() == numeric.degree());
    for (long k = 0; k <= closed.degree(); ++k) {
        double want = closed[static_cast<std::size_t>(k)].to_double();
        double got = numeric[static_cast<std::size_t>(k)];
        double scale = std::max(1.0, std::abs(want));
        CHECK_THAT(got, WithinAbs(want, tol * scale));
    }
}

} // namespace

TEST_CASE("exact engine agrees with determinant sampling", "[charpoly]") {
    SECTION("regular families") {
        for (int n : {3, 4, 5, 6, 8}) check_against_determinant(Graph::cycle(n));
        for (int n : {2, 3, 4, 5, 6}) check_against_determinant(Graph::complete(n));
        check_against_determinant(Graph::petersen());
    }
    SECTION("unions of regular graphs of different degrees stay exact") {
        Graph u = Graph::disjoint_union({Graph::cycle(3), Graph::complete(5)});
        check_against_determinant(u);
    }
    SECTION("all cubic graphs on 8 vertices") {
        for (const Graph& g : generate_k_regular(8, 3).graphs) check_against_determinant(g);
    }
}

TEST_CASE("exact engine structural coefficients", "[charpoly]") {
    // monic, trace zero, and the lambda^{n-2} coefficient is -F(G)
    std::vector<Graph> gs = {Graph::cycle(6), Graph::complete(4), Graph::petersen(),
                             Graph::complete_bipartite(3, 3)};
    for (const Graph& g : gs) {
        CharPolyResult r = charpoly_generic(g);
        REQUIRE(r.mode == PolyMode::exact);
        long n = g.n();
        CHECK(r.exact_poly.degree() == n);
        CHECK(r.exact_poly[static_cast<std::size_t>(n)] == QSqrt2(1));
        CHECK(r.exact_poly[static_cast<std::size_t>(n - 1)].is_zero());
        CHECK(r.exact_poly[static_cast<std::size_t>(n - 2)] == QSqrt2(-forgotten_index(g)));
    }
}

TEST_CASE("union multiplicativity in exact mode", "[charpoly]") {
    Graph a = Graph::cycle(4), b = Graph::complete(3);
    ExactPoly pa = charpoly_generic(a).exact_poly;
    ExactPoly pb = charpoly_generic(b).exact_poly;
    ExactPoly pu = charpoly_generic(Graph::disjoint_union({a, b})).exact_poly;
    CHECK(pu == pa * pb);
}

TEST_CASE("floating engine matches double-precision reference", "[charpoly]") {
    std::mt19937 rng(41);
    int checked = 0;
    while (checked < 30) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g = oracle::random_graph(rng, n);
        if (g.m() == 0) continue;
        ++checked;
        CharPolyResult r = charpoly_generic(g);
        SomborMatrix M = sombor_matrix(g);
        std::vector<double> dense = M.dense_float();
        REQUIRE(r.float_poly.degree() == n);
        // Gershgorin bound on the spectral radius, then evaluate well outside
        // it so both the Horner sum and the LU determinant stay conditioned.
        double radius = 0.0;
        for (int i = 0; i < n; ++i) {
            double row = 0.0;
            for (int j = 0; j < n; ++j)
                row += std::abs(dense[static_cast<std::size_t>(i) * n + j]);
            radius = std::max(radius, row);
        }
        for (double x : {2.0 * radius + 1.0, -(2.0 * radius + 1.0),
                         2.0 * radius + 7.5, -(2.0 * radius + 3.25)}) {
            double ref = oracle::lu_det_shifted(dense, n, x);
            double got = 0.0;
            for (int k = n; k >= 0; --k)
                got = got * x + r.float_poly[static_cast<std::size_t>(k)];
            CHECK_THAT(got, WithinAbs(ref, 1e-8 * std::abs(ref)));
        }
    }
}

TEST_CASE("lambda recurrence", "[charpoly][family]") {
    ExactPoly lam = ExactPoly::monomial(1, QSqrt2(1));
    CHECK(lambda_rec(1) == lam);
    CHECK(lambda_rec(2) == lam * lam - ExactPoly::constant(QSqrt2(8)));
    for (int k = 3; k <= 10; ++k)
        CHECK(lambda_rec(k) ==
              lam * lambda_rec(k - 1) - lambda_rec(k - 2).scaled(QSqrt2(8)));
    // Lambda_k is the charpoly of the k-path with every weight sqrt8, so its
    // leading coefficient is 1 and its degree k
    for (int k = 1; k <= 10; ++k) {
        CHECK(lambda_rec(k).degree() == k);
        CHECK(lambda_rec(k)[static_cast<std::size_t>(k)] == QSqrt2(1));
    }
}

TEST_CASE("closed forms match the generic engine", "[charpoly][family]") {
    SECTION("base cases are exact") {
        CHECK(charpoly_path(2) == ExactPoly({QSqrt2(-2), QSqrt2(0), QSqrt2(1)}));
        CHECK(charpoly_path(3) == ExactPoly({QSqrt2(0), QSqrt2(-10), QSqrt2(0), QSqrt2(1)}));
        CHECK(charpoly_path(4) ==
              ExactPoly({QSqrt2(25), QSqrt2(0), QSqrt2(-18), QSqrt2(0), QSqrt2(1)}));
    }
    SECTION("paths (floating comparison, weights are irrational)") {
        for (int n = 2; n <= 12; ++n) {
            Graph g = Graph::path(n);
            CharPolyResult r = charpoly_generic(g);
            if (r.mode == PolyMode::exact)
                CHECK(r.exact_poly == charpoly_path(n));
            else
                check_float_agreement(charpoly_path(n), r.float_poly, 1e-8);
        }
    }
    SECTION("cycles are exact on both sides") {
        for (int n = 3; n <= 12; ++n) {
            CharPolyResult r = charpoly_generic(Graph::cycle(n));
            REQUIRE(r.mode == PolyMode::exact);
            CHECK(r.exact_poly == charpoly_cycle(n));
        }
    }
    SECTION("stars") {
        for (int n = 2; n <= 12; ++n) {
            CharPolyResult r = charpoly_generic(Graph::star(n));
            if (r.mode == PolyMode::exact)
                CHECK(r.exact_poly == charpoly_star(n));
            else
                check_float_agreement(charpoly_star(n), r.float_poly, 1e-8);
        }
    }
    SECTION("complete graphs are exact on both sides") {
        for (int n = 1; n <= 12; ++n) {
            CharPolyResult r = charpoly_generic(Graph::complete(n));
            REQUIRE(r.mode == PolyMode::exact);
            CHECK(r.exact_poly == charpoly_complete(n));
        }
    }
    SECTION("complete bipartite") {
        for (int m = 1; m <= 6; ++m)
            for (int n = m; n <= 6; ++n) {
                CharPolyResult r = charpoly_generic(Graph::complete_bipartite(m, n));
                ExactPoly closed = charpoly_complete_bipartite(m, n);
                if (r.mode == PolyMode::exact)
                    CHECK(r.exact_poly == closed);
                else
                    check_float_agreement(closed, r.float_poly, 1e-8);
            }
    }
    SECTION("K_{1,n-1} is the star") {
        for (int n = 2; n <= 8; ++n)
            CHECK(charpoly_complete_bipartite(1, n - 1) == charpoly_star(n));
    }
    SECTION("K_{m,m} is 2m-regular bipartite, exact both ways") {
        for (int m = 2; m <= 5; ++m) {
            CharPolyResult r = charpoly_generic(Graph::complete_bipartite(m, m));
            REQUIRE(r.mode == PolyMode::exact);
            CHECK(r.exact_poly == charpoly_complete_bipartite(m, m));
        }
    }
    SECTION("range validation") {
        CHECK_THROWS_AS(charpoly_path(1), std::invalid_argument);
        CHECK_THROWS_AS(charpoly_cycle(2), std::invalid_argument);
        CHECK_THROWS_AS(charpoly_star(1), std::invalid_argument);
        CHECK_THROWS_AS(charpoly_complete(0), std::invalid_argument);
        CHECK_THROWS_AS(charpoly_complete_bipartite(0, 3), std::invalid_argument);
    }
}

TEST_CASE("petersen polynomial in factored form", "[charpoly]") {
    // (x - 9 sqrt2)(x + 6 sqrt2)^4 (x - 3 sqrt2)^5
    auto linear = [](long b) {
        return ExactPoly({QSqrt2::sqrt2(-b), QSqrt2(1)});
    };
    ExactPoly expect = linear(9);
    for (int i = 0; i < 4; ++i) expect = expect * linear(-6);
    for (int i = 0; i < 5; ++i) expect = expect * linear(3);
    CharPolyResult r = charpoly_generic(Graph::petersen());
    REQUIRE(r.mode == PolyMode::exact);
    CHECK(r.exact_poly == expect);
    CHECK(r.exact_poly[0] == QSqrt2(90699264));
}
