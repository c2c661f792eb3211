#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "weights.hpp"

namespace sombor {

struct EigenResult {
    std::vector<double> values;  // descending
    double residual;             // max_i ||A v_i - lambda_i v_i||_2
};

// Cyclic Jacobi for a dense symmetric matrix (row-major, n x n).
// Sweeps until off(A)_F <= tol * ||A||_F. Eigenvectors are accumulated so the
// caller gets an honest decomposition residual back.
inline EigenResult jacobi_eigen(std::vector<double> a, int n, double tol = 1e-13,
                                int max_sweeps = 100) {
    if (n == 0) return {{}, 0.0};
    std::vector<double> orig = a;
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

    auto at = [&](std::vector<double>& m, int i, int j) -> double& {
        return m[static_cast<std::size_t>(i) * n + j];
    };

    double total = 0;
    for (double x : a) total += x * x;
    total = std::sqrt(total);
    if (total == 0) return {std::vector<double>(n, 0.0), 0.0};

    int sweep = 0;
    for (;; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2 * at(a, i, j) * at(a, i, j);
        off = std::sqrt(off);
        if (off <= tol * total) break;
        if (sweep >= max_sweeps)
            throw std::runtime_error("jacobi_eigen: no convergence after " +
                                     std::to_string(max_sweeps) + " sweeps");
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = at(a, p, q);
                if (apq == 0) continue;
                double app = at(a, p, p), aqq = at(a, q, q);
                double theta = (aqq - app) / (2 * apq);
                // stable tangent of the rotation angle
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = at(a, k, p), akq = at(a, k, q);
                    at(a, k, p) = c * akp - s * akq;
                    at(a, k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = at(a, p, k), aqk = at(a, q, k);
                    at(a, p, k) = c * apk - s * aqk;
                    at(a, q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = at(v, k, p), vkq = at(v, k, q);
                    at(v, k, p) = c * vkp - s * vkq;
                    at(v, k, q) = s * vkp + c * vkq;
                }
            }
    }

    std::vector<int> order(n);
    std::vector<double> diag(n);
    for (int i = 0; i < n; ++i) {
        diag[i] = at(a, i, i);
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return diag[x] > diag[y]; });

    EigenResult res;
    res.values.resize(n);
    for (int i = 0; i < n; ++i) res.values[i] = diag[order[i]];

    // residual against the untouched input matrix
    double worst = 0;
    for (int c = 0; c < n; ++c) {
        int col = order[c];
        double norm2 = 0;
        for (int r = 0; r < n; ++r) {
            double av = 0;
            for (int k = 0; k < n; ++k)
                av += orig[static_cast<std::size_t>(r) * n + k] * at(v, k, col);
            double diff = av - diag[col] * at(v, r, col);
            norm2 += diff * diff;
        }
        worst = std::max(worst, std::sqrt(norm2));
    }
    res.residual = worst;
    return res;
}

inline std::vector<double> eigenvalues_symmetric(const SomborMatrix& m, double tol = 1e-13) {
    if (tol <= 0) throw std::invalid_argument("eigenvalues_symmetric: tol must be > 0");
    return jacobi_eigen(m.dense_float(), m.n(), tol).values;
}

} // namespace sombor
