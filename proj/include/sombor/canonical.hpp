#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace sombor {

struct CanonicalForm {
    std::string cert; // graph6 of the lexicographically minimal labeling
    bool operator==(const CanonicalForm& o) const { return cert == o.cert; }
    bool operator<(const CanonicalForm& o) const { return cert < o.cert; }
};

namespace detail {

// Branch-and-bound search for the vertex ordering whose column-order
// upper-triangle bit string is lexicographically least. At each position only
// candidates with the minimal next-column bits can lead to the optimum (the
// future bit string starts with exactly those bits), and twin vertices
// (identical neighborhoods off the pair) are interchangeable by an
// automorphism, so one representative per twin class suffices. That keeps
// highly symmetric graphs like K_n linear instead of factorial.
class LexMinSearch {
public:
    LexMinSearch(const Graph& g) : n_(g.n()), nbr_(g.n(), 0) {
        for (int u = 0; u < n_; ++u)
            for (int v : g.neighbors(u)) nbr_[u] |= (1u << v);
    }

    std::vector<int> run() {
        chosen_.clear();
        bits_.clear();
        best_bits_.clear();
        best_perm_.clear();
        have_best_ = false;
        dfs();
        return best_perm_;
    }

private:
    void dfs() {
        int pos = static_cast<int>(chosen_.size());
        if (pos == n_) {
            if (!have_best_ || bits_ < best_bits_) {
                best_bits_ = bits_;
                best_perm_ = chosen_;
                have_best_ = true;
            }
            return;
        }
        // bits this candidate would append: adjacency to chosen[0..pos-1]
        std::vector<std::pair<std::uint32_t, int>> cols;
        std::uint32_t used = 0;
        for (int v : chosen_) used |= (1u << v);
        for (int v = 0; v < n_; ++v) {
            if (used & (1u << v)) continue;
            std::uint32_t col = 0;
            for (int i = 0; i < pos; ++i)
                col = (col << 1) | ((nbr_[v] >> chosen_[i]) & 1u);
            cols.emplace_back(col, v);
        }
        std::uint32_t minc = cols[0].first;
        for (auto& [c, v] : cols) minc = std::min(minc, c);

        // prune against the best complete string. Fresh-segment comparison is
        // only meaningful while the path bits still equal best's prefix; a
        // strictly smaller path disables pruning (everything below will beat
        // best), a strictly larger one is dead.
        if (have_best_) {
            int rel = 0; // bits_ vs best_bits_ prefix
            for (std::size_t i = 0; i < bits_.size(); ++i)
                if (bits_[i] != best_bits_[i]) {
                    rel = bits_[i] > best_bits_[i] ? 1 : -1;
                    break;
                }
            if (rel > 0) return;
            if (rel == 0) {
                std::size_t at = bits_.size();
                for (int i = 0; i < pos; ++i) {
                    std::uint8_t b = (minc >> (pos - 1 - i)) & 1u;
                    if (b != best_bits_[at + i]) {
                        if (b > best_bits_[at + i]) return; // strictly worse segment
                        break;                              // strictly better, explore on
                    }
                }
            }
        }

        std::vector<int> tried;
        for (auto& [c, v] : cols) {
            if (c != minc) continue;
            bool twin = false;
            for (int u : tried) {
                std::uint32_t off = ~((1u << u) | (1u << v));
                if ((nbr_[u] & off) == (nbr_[v] & off)) {
                    twin = true;
                    break;
                }
            }
            if (twin) continue;
            tried.push_back(v);
            chosen_.push_back(v);
            for (int i = 0; i < pos; ++i)
                bits_.push_back(static_cast<std::uint8_t>((c >> (pos - 1 - i)) & 1u));
            dfs();
            bits_.resize(bits_.size() - pos);
            chosen_.pop_back();
        }
    }

    int n_;
    std::vector<std::uint32_t> nbr_;
    std::vector<int> chosen_;
    std::vector<std::uint8_t> bits_, best_bits_;
    std::vector<int> best_perm_;
    bool have_best_ = false;
};

} // namespace detail

inline CanonicalForm canonical_cert(const Graph& g) {
    if (g.n() > 16)
        throw std::invalid_argument("canonical_cert: n = " + std::to_string(g.n()) +
                                    " exceeds the n <= 16 cap");
    if (g.n() == 0) return {to_graph6(g)};
    detail::LexMinSearch search(g);
    std::vector<int> order = search.run(); // order[pos] = original vertex
    std::vector<int> perm(g.n());          // perm[original] = new label
    for (int pos = 0; pos < g.n(); ++pos) perm[order[pos]] = pos;
    return {to_graph6(g.relabeled(perm))};
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    return canonical_cert(a) == canonical_cert(b);
}

} // namespace sombor
