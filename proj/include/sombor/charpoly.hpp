#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "jacobi.hpp"
#include "poly.hpp"
#include "weights.hpp"

namespace sombor {

enum class PolyMode { exact, floating };

struct CharPolyResult {
    PolyMode mode;
    ExactPoly exact_poly;   // empty in float mode
    FloatPoly float_poly;   // always filled (float view of exact in exact mode)
    std::string family_tag; // "generic" or a closed-form family name
};

namespace detail {

// Faddeev-LeVerrier over Q(sqrt2). The recurrence
//   B_1 = A, c_{n-1} = -tr(B_1)
//   B_k = A (B_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(B_k)/k
// only ever divides by the integers 1..n, which is exact in a field.
inline ExactPoly faddeev_leverrier_dense(const std::vector<QSqrt2>& a, int n) {
    std::vector<QSqrt2> c(static_cast<std::size_t>(n) + 1);
    c[n] = QSqrt2(1);
    if (n == 0) return ExactPoly(std::move(c));

    // B starts as the identity; each round does B <- A*B then shifts the
    // diagonal by the fresh coefficient
    std::vector<QSqrt2> b(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i) * n + i] = QSqrt2(1);
    std::vector<QSqrt2> nb(static_cast<std::size_t>(n) * n);

    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                QSqrt2 s;
                for (int l = 0; l < n; ++l) {
                    const QSqrt2& ail = a[static_cast<std::size_t>(i) * n + l];
                    if (ail.is_zero()) continue;
                    s += ail * b[static_cast<std::size_t>(l) * n + j];
                }
                nb[static_cast<std::size_t>(i) * n + j] = s;
            }
        std::swap(b, nb);
        QSqrt2 tr;
        for (int i = 0; i < n; ++i) tr += b[static_cast<std::size_t>(i) * n + i];
        QSqrt2 ck = -(tr * QSqrt2(mpq_class(1, k)));
        c[n - k] = ck;
        if (k < n)
            for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i) * n + i] += ck;
    }
    return ExactPoly(std::move(c));
}

inline ExactPoly faddeev_leverrier(const SomborMatrix& m) {
    const int n = m.n();
    std::vector<QSqrt2> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m.exact_entry(i, j);
    return faddeev_leverrier_dense(a, n);
}

// Float engine: eigenvalues from the Jacobi solver, then expand
// prod (x - r_i) by repeated linear multiplication. The x^{n-1} coefficient
// is pinned to the structural zero afterwards (the matrix is hollow, so the
// trace term must vanish).
inline FloatPoly charpoly_from_roots(const std::vector<double>& roots) {
    // ascending coefficients throughout: (x - r) * c
    std::vector<double> c{1.0};
    for (double r : roots) {
        std::vector<double> nc(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            nc[i + 1] += c[i];
            nc[i] -= r * c[i];
        }
        c = std::move(nc);
    }
    if (c.size() >= 2) c[c.size() - 2] = 0.0;
    return FloatPoly(std::move(c));
}

} // namespace detail

inline CharPolyResult charpoly_generic(const SomborMatrix& m) {
    CharPolyResult r;
    r.family_tag = "generic";
    if (m.all_exact()) {
        r.mode = PolyMode::exact;
        r.exact_poly = detail::faddeev_leverrier(m);
        r.float_poly = to_float_poly(r.exact_poly);
    } else {
        r.mode = PolyMode::floating;
        r.float_poly = detail::charpoly_from_roots(jacobi_eigen(m.dense_float(), m.n()).values);
    }
    return r;
}

inline CharPolyResult charpoly_generic(const Graph& g) {
    return charpoly_generic(SomborMatrix(g));
}

// Lambda_k: determinant of the k x k tridiagonal matrix with lambda on the
// diagonal and -sqrt(8) off it. Lambda_1 = x, Lambda_2 = x^2 - 8,
// Lambda_k = x Lambda_{k-1} - 8 Lambda_{k-2}.
inline ExactPoly lambda_rec(int k) {
    if (k < 1) throw std::invalid_argument("lambda_rec: need k >= 1");
    ExactPoly x = ExactPoly::monomial(1, QSqrt2(1));
    ExactPoly prev = x;                                        // Lambda_1
    if (k == 1) return prev;
    ExactPoly cur = x * x - ExactPoly::constant(QSqrt2(8));    // Lambda_2
    for (int i = 3; i <= k; ++i) {
        ExactPoly next = x * cur - prev.scaled(QSqrt2(8));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Path P_n: base cases for n = 2, 3, 4 and the three-term combination
// x^2 Lambda_{n-2} - 10 x Lambda_{n-3} + 25 Lambda_{n-4} from n = 5 up.
inline ExactPoly charpoly_path(int n) {
    if (n < 2) throw std::invalid_argument("charpoly_path: need n >= 2");
    auto C = [](long v) { return QSqrt2(v); };
    if (n == 2) return ExactPoly({C(-2), C(0), C(1)});
    if (n == 3) return ExactPoly({C(0), C(-10), C(0), C(1)});
    if (n == 4) return ExactPoly({C(25), C(0), C(-18), C(0), C(1)});
    ExactPoly a = lambda_rec(n - 2).shifted(2);
    ExactPoly b = lambda_rec(n - 3).shifted(1).scaled(C(10));
    ExactPoly c = lambda_rec(n - 4).scaled(C(25));
    return a - b + c;
}

// Cycle C_n: x Lambda_{n-1} - 16 Lambda_{n-2} - 2 (sqrt8)^n, with
// (sqrt8)^n = 2^{floor(3n/2)} * sqrt(2)^{n mod 2} kept exact.
inline ExactPoly charpoly_cycle(int n) {
    if (n < 3) throw std::invalid_argument("charpoly_cycle: need n >= 3");
    ExactPoly head = lambda_rec(n - 1).shifted(1) - lambda_rec(n - 2).scaled(QSqrt2(16));
    mpz_class p2 = 1;
    p2 <<= (3 * n) / 2;
    QSqrt2 tail = (n % 2 == 0) ? QSqrt2(mpq_class(p2)) : QSqrt2::sqrt2(mpq_class(p2));
    return head - ExactPoly::constant(QSqrt2(2) * tail);
}

// Star S_n (n vertices): x^{n-2} (x^2 - (n-1)(n^2-2n+2)).
inline ExactPoly charpoly_star(int n) {
    if (n < 2) throw std::invalid_argument("charpoly_star: need n >= 2");
    mpz_class q = mpz_class(n - 1) * (mpz_class(n) * n - 2 * n + 2);
    ExactPoly head = ExactPoly({QSqrt2(mpq_class(-q)), QSqrt2(0), QSqrt2(1)});
    return head.shifted(n - 2);
}

// Complete K_n: (x - (n-1)^2 sqrt2) (x + (n-1) sqrt2)^{n-1}, expanded.
inline ExactPoly charpoly_complete(int n) {
    if (n < 1) throw std::invalid_argument("charpoly_complete: need n >= 1");
    ExactPoly acc = ExactPoly::constant(QSqrt2(1));
    ExactPoly lin({QSqrt2::sqrt2(n - 1), QSqrt2(1)});
    for (int i = 0; i < n - 1; ++i) acc = acc * lin;
    mpz_class big = mpz_class(n - 1) * (n - 1);
    ExactPoly first({-QSqrt2::sqrt2(mpq_class(big)), QSqrt2(1)});
    return first * acc;
}

// Complete bipartite K_{m,n}: x^{m+n-2} (x^2 - mn(m^2+n^2)). A one-sided
// part delegates to the star formula; the two agree where both apply, which
// the tests assert rather than assume.
inline ExactPoly charpoly_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("charpoly_complete_bipartite: need m, n >= 1");
    if (m == 1 || n == 1) return charpoly_star(m + n);
    mpz_class q = mpz_class(m) * n * (mpz_class(m) * m + mpz_class(n) * n);
    ExactPoly head = ExactPoly({QSqrt2(mpq_class(-q)), QSqrt2(0), QSqrt2(1)});
    return head.shifted(m + n - 2);
}

} // namespace sombor
