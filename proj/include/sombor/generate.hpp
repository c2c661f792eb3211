#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "canonical.hpp"
#include "graph.hpp"

namespace sombor {

struct GenerationResult {
    std::vector<Graph> graphs; // one per isomorphism class, sorted by cert
    std::string note;          // filled when the result is empty by necessity
};

namespace detail {

// Backtracking generator of labeled k-regular graphs in a "first touch"
// normal form: always saturate the smallest unsaturated vertex, add its
// neighbors in ascending order, and never jump past the first untouched
// vertex (candidates stop at maxtouched+1). Every isomorphism class still
// shows up, but only a handful of times instead of n! times, so certificate
// dedup afterwards stays cheap.
class RegularGen {
public:
    RegularGen(int n, int k) : n_(n), k_(k), deg_(n, 0), adj_(n, 0) {}

    std::vector<std::vector<std::pair<int, int>>> run() {
        out_.clear();
        edges_.clear();
        if (k_ == 0) {
            out_.push_back({});
            return out_;
        }
        rec(0, 1, 0);
        return out_;
    }

private:
    void rec(int u, int minv, int maxtouched) {
        if (deg_[u] == k_) {
            int nu = -1;
            for (int v = 0; v < n_; ++v)
                if (deg_[v] < k_) {
                    nu = v;
                    break;
                }
            if (nu < 0) {
                out_.push_back(edges_);
                return;
            }
            rec(nu, nu + 1, std::max(maxtouched, nu));
            return;
        }
        int need = k_ - deg_[u];
        int limit = std::min(maxtouched + 1, n_ - 1);
        int lo = std::max(minv, u + 1);
        // capacity check: candidates in range plus the untouched tail
        int avail = 0;
        for (int v = lo; v <= limit; ++v)
            if (deg_[v] < k_ && !(adj_[u] >> v & 1u)) ++avail;
        avail += n_ - 1 - limit;
        if (avail < need) return;

        for (int v = lo; v <= limit; ++v) {
            if (deg_[v] >= k_ || (adj_[u] >> v & 1u)) continue;
            add(u, v);
            rec(u, v + 1, std::max(maxtouched, v));
            remove(u, v);
        }
    }

    void add(int u, int v) {
        edges_.emplace_back(u, v);
        ++deg_[u];
        ++deg_[v];
        adj_[u] |= 1u << v;
        adj_[v] |= 1u << u;
    }
    void remove(int u, int v) {
        edges_.pop_back();
        --deg_[u];
        --deg_[v];
        adj_[u] &= ~(1u << v);
        adj_[v] &= ~(1u << u);
    }

    int n_, k_;
    std::vector<int> deg_;
    std::vector<std::uint32_t> adj_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::pair<int, int>>> out_;
};

inline std::vector<Graph> dedup_by_cert(int n, const std::vector<std::vector<std::pair<int, int>>>& all) {
    std::unordered_set<std::string> seen;
    std::vector<std::pair<std::string, Graph>> reps;
    for (const auto& e : all) {
        Graph g(n, e);
        std::string cert = canonical_cert(g).cert;
        if (seen.insert(cert).second) reps.emplace_back(cert, from_graph6(cert));
    }
    std::sort(reps.begin(), reps.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    out.reserve(reps.size());
    for (auto& [c, g] : reps) out.push_back(std::move(g));
    return out;
}

} // namespace detail

// All k-regular graphs on n vertices up to isomorphism, in cert order. The
// representatives themselves carry the canonical labeling (graph == decoded
// cert), so output order and content are fully deterministic.
inline GenerationResult generate_k_regular(int n, int k, bool connected_only = false) {
    if (n < 1 || n > 12)
        throw std::invalid_argument("generate_k_regular: n must be within 1..12 (got " +
                                    std::to_string(n) + ")");
    if (k < 0 || k >= n)
        throw std::invalid_argument("generate_k_regular: need 0 <= k < n");
    GenerationResult res;
    if ((static_cast<long>(n) * k) % 2 != 0) {
        res.note = "no " + std::to_string(k) + "-regular graphs on " + std::to_string(n) +
                   " vertices: degree sum n*k is odd";
        return res;
    }
    detail::RegularGen gen(n, k);
    res.graphs = detail::dedup_by_cert(n, gen.run());
    if (connected_only) {
        std::vector<Graph> conn;
        for (auto& g : res.graphs)
            if (g.is_connected()) conn.push_back(std::move(g));
        res.graphs = std::move(conn);
    }
    return res;
}

// Every simple graph on exactly n vertices up to isomorphism (isolated
// vertices allowed), by brute force over all edge subsets plus cert dedup.
// 2^21 masks at n = 7 is the practical ceiling.
inline std::vector<Graph> enumerate_all_graphs(int n) {
    if (n < 0 || n > 7)
        throw std::invalid_argument("enumerate_all_graphs: n must be within 0..7 (got " +
                                    std::to_string(n) + ")");
    std::vector<std::pair<int, int>> slots;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
    std::unordered_set<std::string> seen;
    std::vector<std::pair<std::string, Graph>> reps;
    const std::uint64_t top = 1ull << slots.size();
    std::vector<std::pair<int, int>> edges;
    for (std::uint64_t mask = 0; mask < top; ++mask) {
        edges.clear();
        for (std::size_t b = 0; b < slots.size(); ++b)
            if (mask >> b & 1ull) edges.push_back(slots[b]);
        Graph g(n, edges);
        std::string cert = canonical_cert(g).cert;
        if (seen.insert(cert).second) reps.emplace_back(cert, from_graph6(cert));
    }
    std::sort(reps.begin(), reps.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    out.reserve(reps.size());
    for (auto& [c, g] : reps) out.push_back(std::move(g));
    return out;
}

} // namespace sombor
