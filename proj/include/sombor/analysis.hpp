#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "charpoly.hpp"
#include "fixtures.hpp"
#include "generate.hpp"
#include "permanent.hpp"
#include "spectra.hpp"

namespace sombor {

struct CoeffDelta {
    int power;
    QSqrt2 computed;
    QSqrt2 fixture;
};

struct CorpusMatch {
    Graph graph;
    std::string cert;
    std::string table_label;
    bool exact_match = false;
    std::vector<CoeffDelta> poly_delta; // empty iff exact_match
    ExactPoly computed_poly;
    double energy = 0;       // computed, full precision
    double energy_delta = 0; // |computed - table value|
};

namespace detail {
inline std::vector<CoeffDelta> poly_diff(const ExactPoly& computed, const ExactPoly& fixture) {
    std::vector<CoeffDelta> d;
    long deg = std::max(computed.degree(), fixture.degree());
    for (long p = 0; p <= deg; ++p) {
        const QSqrt2& a = computed[static_cast<std::size_t>(p)];
        const QSqrt2& b = fixture[static_cast<std::size_t>(p)];
        if (a != b) d.push_back({static_cast<int>(p), a, b});
    }
    return d;
}
} // namespace detail

// Match generated graphs against the reference coefficient table. Exact
// coefficient equality wins a label outright; leftovers are paired with the
// nearest unused fixture (fewest differing coefficients) and carry the full
// delta list, which is how misprinted table entries surface.
inline std::vector<CorpusMatch> match_corpus(
    const std::vector<Graph>& generated,
    const std::vector<CorpusFixture>& fixtures = corpus_fixtures()) {
    // the fixture table must be collision-free for labels to mean anything
    for (std::size_t i = 0; i < fixtures.size(); ++i)
        for (std::size_t j = i + 1; j < fixtures.size(); ++j)
            if (fixtures[i].coeffs == fixtures[j].coeffs)
                throw std::invalid_argument(std::string("match_corpus: fixtures ") +
                                            fixtures[i].label + " and " + fixtures[j].label +
                                            " have identical coefficients");

    std::vector<CorpusMatch> out(generated.size());
    std::vector<ExactPoly> fpolys;
    fpolys.reserve(fixtures.size());
    for (const auto& f : fixtures) fpolys.push_back(fixture_poly(f));

    std::vector<int> fixture_of(generated.size(), -1);
    std::vector<bool> fixture_used(fixtures.size(), false);

    for (std::size_t gi = 0; gi < generated.size(); ++gi) {
        CorpusMatch& m = out[gi];
        m.graph = generated[gi];
        m.cert = canonical_cert(m.graph).cert;
        CharPolyResult cp = charpoly_generic(m.graph);
        if (cp.mode != PolyMode::exact)
            throw std::invalid_argument("match_corpus: graph " + m.cert +
                                        " has no exact charpoly (not regular enough)");
        m.computed_poly = cp.exact_poly;
        for (std::size_t fi = 0; fi < fixtures.size(); ++fi) {
            if (fixture_used[fi] || m.computed_poly != fpolys[fi]) continue;
            fixture_used[fi] = true;
            fixture_of[gi] = static_cast<int>(fi);
            m.exact_match = true;
            break;
        }
    }

    // nearest-fixture assignment for whatever is left, smallest delta first
    for (;;) {
        int best_gi = -1, best_fi = -1;
        std::size_t best_count = SIZE_MAX;
        for (std::size_t gi = 0; gi < generated.size(); ++gi) {
            if (fixture_of[gi] >= 0) continue;
            for (std::size_t fi = 0; fi < fixtures.size(); ++fi) {
                if (fixture_used[fi]) continue;
                std::size_t cnt = detail::poly_diff(out[gi].computed_poly, fpolys[fi]).size();
                if (cnt < best_count) {
                    best_count = cnt;
                    best_gi = static_cast<int>(gi);
                    best_fi = static_cast<int>(fi);
                }
            }
        }
        if (best_gi < 0) break;
        fixture_of[best_gi] = best_fi;
        fixture_used[best_fi] = true;
        out[best_gi].poly_delta = detail::poly_diff(out[best_gi].computed_poly, fpolys[best_fi]);
    }

    for (std::size_t gi = 0; gi < generated.size(); ++gi) {
        CorpusMatch& m = out[gi];
        if (fixture_of[gi] < 0) {
            m.table_label = "unmatched";
            continue;
        }
        const CorpusFixture& f = fixtures[fixture_of[gi]];
        m.table_label = f.label;
        m.energy = sombor_energy(m.graph).energy;
        m.energy_delta = std::abs(m.energy - f.energy);
    }
    return out;
}

// ---- energy equivalence classes ----

struct EnergyClass {
    std::vector<int> members; // indices into the input list
    double energy;            // representative (min member energy)
    double spread;            // max pairwise gap inside the class
    std::string kind;         // "exact" when equality is certified in Q(sqrt2)
    std::optional<QSqrt2> exact_energy;
};

struct EnergyClasses {
    std::vector<EnergyClass> classes;
    std::vector<double> energies;   // per input graph
    std::vector<bool> unique_flags; // per input graph: singleton class
};

// Single-linkage grouping of energies: sort, then split wherever the gap to
// the predecessor exceeds tol. For all-regular classes with fully rational
// adjacency spectra the equality is certified exactly; everything else stays
// a numerical class.
inline EnergyClasses energy_classes(const std::vector<Graph>& gs, double tol = 1e-6) {
    if (tol <= 0) throw std::invalid_argument("energy_classes: tol must be > 0");
    EnergyClasses res;
    res.energies.resize(gs.size());
    std::vector<std::optional<QSqrt2>> exact(gs.size());
    for (std::size_t i = 0; i < gs.size(); ++i) {
        SpectrumReport r = sombor_energy(gs[i]);
        res.energies[i] = r.energy;
        exact[i] = r.exact_energy;
    }
    std::vector<int> order(gs.size());
    for (std::size_t i = 0; i < gs.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return res.energies[a] < res.energies[b]; });

    for (std::size_t at = 0; at < order.size();) {
        EnergyClass cls;
        cls.members.push_back(order[at]);
        std::size_t end = at + 1;
        while (end < order.size() &&
               res.energies[order[end]] - res.energies[order[end - 1]] <= tol) {
            cls.members.push_back(order[end]);
            ++end;
        }
        cls.energy = res.energies[order[at]];
        cls.spread = res.energies[order[end - 1]] - res.energies[order[at]];

        bool all_exact = true;
        for (int m : cls.members)
            if (!exact[m]) {
                all_exact = false;
                break;
            }
        if (all_exact) {
            bool agree = true;
            for (int m : cls.members)
                if (!(*exact[m] == *exact[cls.members[0]])) {
                    agree = false;
                    break;
                }
            if (agree) {
                cls.kind = "exact";
                cls.exact_energy = exact[cls.members[0]];
            } else {
                // exact values differ: the tolerance lumped distinct energies
                cls.kind = "numerical";
            }
        } else {
            cls.kind = "numerical";
        }
        res.classes.push_back(std::move(cls));
        at = end;
    }

    res.unique_flags.assign(gs.size(), false);
    for (const auto& c : res.classes)
        if (c.members.size() == 1) res.unique_flags[c.members[0]] = true;
    return res;
}

// ---- permanents over a matched corpus ----

struct PermanentRow {
    std::string label;
    std::string cert;
    mpz_class permanent;
};

inline std::vector<PermanentRow> permanent_report(const std::vector<CorpusMatch>& matches) {
    std::vector<PermanentRow> rows;
    rows.reserve(matches.size());
    for (const auto& m : matches)
        rows.push_back({m.table_label, m.cert, ryser_permanent(m.graph)});
    std::sort(rows.begin(), rows.end(), [](const PermanentRow& a, const PermanentRow& b) {
        // numeric label order, G_2 before G_10
        auto num = [](const std::string& s) {
            std::size_t us = s.find('_');
            return us == std::string::npos ? 0L : std::stol(s.substr(us + 1));
        };
        return num(a.label) < num(b.label);
    });
    return rows;
}

// ---- integer-energy conjecture scan ----

struct ScanEntry {
    std::string g6;
    int n = 0;
    double energy = 0;
    long nearest_integer = 0;
    double gap = 0;
    std::string resolution; // for hits: exact refutation or "unresolved"
};

struct ScanReport {
    double tol = 1e-7;
    long scanned = 0;
    long skipped_edgeless = 0;
    std::vector<ScanEntry> hits;
    std::vector<ScanEntry> nearest; // 10 smallest gaps seen, for context
};

inline ScanReport integer_energy_search(const std::vector<Graph>& family, double tol = 1e-7) {
    if (tol <= 0) throw std::invalid_argument("integer_energy_search: tol must be > 0");
    ScanReport rep;
    rep.tol = tol;
    for (const Graph& g : family) {
        if (g.m() == 0) {
            // energy 0 is an integer but a degenerate one; the scan is about
            // graphs with at least one edge
            ++rep.skipped_edgeless;
            continue;
        }
        ++rep.scanned;
        SpectrumReport r = sombor_energy(g);
        ScanEntry e;
        e.g6 = to_graph6(g);
        e.n = g.n();
        e.energy = r.energy;
        e.nearest_integer = std::lround(r.energy);
        e.gap = std::abs(r.energy - static_cast<double>(e.nearest_integer));
        if (e.gap <= tol) {
            int k = 0;
            if (g.is_regular(&k) && r.exact_energy) {
                // energy is exactly (k * sum|adjacency roots|) * sqrt2, and a
                // nonzero rational multiple of sqrt2 is never an integer
                e.resolution = r.exact_energy->is_zero()
                                   ? "exact: energy is 0"
                                   : "refuted exactly: energy " + r.exact_energy->str() +
                                         " is irrational";
            } else {
                e.resolution = "unresolved numeric hit (within tol of " +
                               std::to_string(e.nearest_integer) + ")";
            }
            rep.hits.push_back(e);
        }
        rep.nearest.push_back(e);
        std::sort(rep.nearest.begin(), rep.nearest.end(),
                  [](const ScanEntry& a, const ScanEntry& b) { return a.gap < b.gap; });
        if (rep.nearest.size() > 10) rep.nearest.resize(10);
    }
    return rep;
}

} // namespace sombor
