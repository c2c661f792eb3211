#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sombor {

// Immutable simple undirected graph. Vertices are 0..n-1 densely; adjacency
// lists are kept sorted so has_edge can bisect and encoders are deterministic.
class Graph {
public:
    Graph() : n_(0) {}

    Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n), adj_(n) {
        if (n < 0)
            throw std::invalid_argument("Graph: negative vertex count");
        for (auto [u, v] : edges) add_edge_internal(u, v);
        finalize();
    }

    int n() const { return n_; }
    int m() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }

    bool has_edge(int u, int v) const {
        if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
        const auto& a = adj_[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        e.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[u])
                if (u < v) e.emplace_back(u, v);
        return e;
    }

    std::vector<int> degree_sequence() const {
        std::vector<int> d(n_);
        for (int v = 0; v < n_; ++v) d[v] = degree(v);
        return d;
    }

    bool is_regular(int* k_out = nullptr) const {
        if (n_ == 0) return false;
        int k = degree(0);
        for (int v = 1; v < n_; ++v)
            if (degree(v) != k) return false;
        if (k_out) *k_out = k;
        return true;
    }

    int component_count() const {
        std::vector<int> seen(n_, 0);
        int comps = 0;
        std::vector<int> stack;
        for (int s = 0; s < n_; ++s) {
            if (seen[s]) continue;
            ++comps;
            seen[s] = 1;
            stack.push_back(s);
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int v : adj_[u])
                    if (!seen[v]) {
                        seen[v] = 1;
                        stack.push_back(v);
                    }
            }
        }
        return comps;
    }

    bool is_connected() const { return n_ <= 1 || component_count() == 1; }

    // ---- named families ----

    static Graph path(int n) {
        if (n < 1) throw std::invalid_argument("path: need n >= 1");
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
        return Graph(n, e);
    }

    static Graph cycle(int n) {
        if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
        return Graph(n, e);
    }

    // S_n has n vertices total: a center (vertex 0) plus n-1 leaves
    static Graph star(int n) {
        if (n < 2) throw std::invalid_argument("star: need n >= 2");
        std::vector<std::pair<int, int>> e;
        for (int i = 1; i < n; ++i) e.emplace_back(0, i);
        return Graph(n, e);
    }

    static Graph complete(int n) {
        if (n < 1) throw std::invalid_argument("complete: need n >= 1");
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
        return Graph(n, e);
    }

    static Graph complete_bipartite(int m, int n) {
        if (m < 1 || n < 1) throw std::invalid_argument("complete_bipartite: need m, n >= 1");
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) e.emplace_back(i, m + j);
        return Graph(m + n, e);
    }

    // Kneser graph K(5,2): vertices are the 2-subsets of {0..4}, adjacent
    // when disjoint. 3-regular on 10 vertices.
    static Graph petersen() {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) pairs.emplace_back(i, j);
        std::vector<std::pair<int, int>> e;
        for (int x = 0; x < 10; ++x)
            for (int y = x + 1; y < 10; ++y) {
                auto [a, b] = pairs[x];
                auto [c, d] = pairs[y];
                if (a != c && a != d && b != c && b != d) e.emplace_back(x, y);
            }
        return Graph(10, e);
    }

    // ---- structural edits (all return new graphs) ----

    static Graph disjoint_union(const std::vector<Graph>& parts) {
        int total = 0;
        std::vector<std::pair<int, int>> e;
        for (const auto& g : parts) {
            for (auto [u, v] : g.edges()) e.emplace_back(total + u, total + v);
            total += g.n();
        }
        return Graph(total, e);
    }

    Graph delete_edge(int u, int v) const {
        if (!has_edge(u, v))
            throw std::out_of_range("delete_edge: edge " + std::to_string(u) + "-" +
                                    std::to_string(v) + " not present");
        std::vector<std::pair<int, int>> e;
        for (auto [a, b] : edges())
            if (!((a == u && b == v) || (a == v && b == u))) e.emplace_back(a, b);
        return Graph(n_, e);
    }

    // remaining vertices are reindexed densely (indices above v shift down)
    Graph delete_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("delete_vertex: vertex " + std::to_string(v) +
                                    " out of range");
        std::vector<std::pair<int, int>> e;
        auto remap = [v](int x) { return x > v ? x - 1 : x; };
        for (auto [a, b] : edges())
            if (a != v && b != v) e.emplace_back(remap(a), remap(b));
        return Graph(n_ - 1, e);
    }

    Graph relabeled(const std::vector<int>& perm) const {
        if (static_cast<int>(perm.size()) != n_)
            throw std::invalid_argument("relabeled: permutation size mismatch");
        std::vector<std::pair<int, int>> e;
        for (auto [u, v] : edges()) e.emplace_back(perm[u], perm[v]);
        return Graph(n_, e);
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    void add_edge_internal(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::out_of_range("Graph: edge endpoint " + std::to_string(u < 0 || u >= n_ ? u : v) +
                                    " outside 0.." + std::to_string(n_ - 1));
        if (u == v)
            throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }

    void finalize() {
        m_ = 0;
        for (auto& a : adj_) {
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
            m_ += static_cast<int>(a.size());
        }
        m_ /= 2;
    }

    int n_;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// ---- graph6 text format ----
//
// Header N(n): one char n+63 for n <= 62, or '~' followed by three chars
// (18-bit big-endian) for 63 <= n <= 258047. Then the upper triangle in
// column order ((0,1),(0,2),(1,2),(0,3),...), packed big-endian into 6-bit
// groups, each emitted as value+63. Trailing padding bits must be zero.

namespace graph6 {

inline void fail(const std::string& what, std::size_t offset) {
    throw std::runtime_error("graph6: " + what + " at byte offset " + std::to_string(offset));
}

inline int char_value(char c, std::size_t offset) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u < 63 || u > 126) fail("character out of printable range 63..126", offset);
    return u - 63;
}

inline std::string encode(const Graph& g) {
    const int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph6: n > 258047 not supported");
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) {
        acc <<= (6 - nbits); // zero padding
        out.push_back(static_cast<char>(acc + 63));
    }
    return out;
}

inline Graph decode(const std::string& text) {
    if (text.empty()) fail("empty input", 0);
    std::size_t pos = 0;
    long n;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~')
            fail("n >= 258048 (8-byte header) not supported", 0);
        if (text.size() < 4) fail("truncated long-form header", text.size());
        n = 0;
        for (int k = 1; k <= 3; ++k) n = (n << 6) | char_value(text[k], k);
        if (n < 63) fail("long-form header used for n < 63", 0);
        pos = 4;
    } else {
        n = char_value(text[0], 0);
        pos = 1;
    }
    long nbits = n * (n - 1) / 2;
    long nchars = (nbits + 5) / 6;
    if (static_cast<long>(text.size()) - static_cast<long>(pos) < nchars)
        fail("truncated edge bits (need " + std::to_string(nchars) + " chars, have " +
                 std::to_string(text.size() - pos) + ")",
             text.size());
    if (static_cast<long>(text.size()) - static_cast<long>(pos) > nchars)
        fail("unexpected trailing data", pos + nchars);

    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    int i = 0, j = 1;
    for (long c = 0; c < nchars; ++c) {
        int v = char_value(text[pos + c], pos + c);
        for (int b = 5; b >= 0; --b, ++bit) {
            int on = (v >> b) & 1;
            if (bit >= nbits) {
                if (on) fail("nonzero padding bit", pos + c);
                continue;
            }
            if (on) edges.emplace_back(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return Graph(static_cast<int>(n), edges);
}

} // namespace graph6

inline Graph from_graph6(const std::string& text) { return graph6::decode(text); }
inline std::string to_graph6(const Graph& g) { return graph6::encode(g); }

} // namespace sombor
