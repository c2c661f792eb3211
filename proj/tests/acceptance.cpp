// Acceptance gate: one check per numbered criterion, each printed as a single
// PASS/FAIL line (plus indented diagnostics). Run with no arguments for the
// whole gate, or with a single number to run one criterion.
//
// Exit code is the number of failed criteria. Failures are reported as
// measured; nothing is widened or skipped to force a green run.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <sombor/sombor.hpp>

#include "support/oracles.hpp"

using namespace sombor;
using clock_type = std::chrono::steady_clock;

namespace {

int checks_failed = 0;

void verdict(bool ok, int crit, const std::string& what) {
    std::printf("%s  %2d  %s\n", ok ? "PASS" : "FAIL", crit, what.c_str());
    if (!ok) ++checks_failed;
}

void note(const std::string& line) { std::printf("          %s\n", line.c_str()); }

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::string fmt(double v, const char* spec = "%.12g") {
    char buf[48];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

const std::vector<CorpusMatch>& corpus_matches() {
    static const std::vector<CorpusMatch> ms = [] {
        return match_corpus(generate_k_regular(10, 3).graphs);
    }();
    return ms;
}

const CorpusMatch& labeled(const std::string& label) {
    for (const auto& m : corpus_matches())
        if (m.table_label == label) return m;
    throw std::logic_error("label missing: " + label);
}

// ---- criterion 1: polynomial reproduction ----
void criterion_1() {
    auto t0 = clock_type::now();
    GenerationResult gen = generate_k_regular(10, 3);
    const auto& ms = corpus_matches();
    int exact = 0;
    std::set<std::string> labels;
    for (const auto& m : ms) {
        if (m.exact_match) ++exact;
        labels.insert(m.table_label);
    }
    double secs = seconds_since(t0);
    bool ok = gen.graphs.size() == 21 && ms.size() == 21 && labels.size() == 21 &&
              exact >= 19 && secs < 60.0;
    verdict(ok, 1, "exactly 21 cubic graphs of order 10, >= 19 exact polynomial rows");
    note("generated " + std::to_string(gen.graphs.size()) + " graphs, " +
         std::to_string(exact) + "/21 rows match coefficient-for-coefficient, " +
         fmt(secs, "%.2f") + " s");
    for (const auto& m : ms)
        for (const auto& d : m.poly_delta)
            note(m.table_label + " differs at power " + std::to_string(d.power) +
                 ": computed " + d.computed.str() + ", table " + d.fixture.str() +
                 " (suspected misprint)");
}

// ---- criterion 2: energy reproduction at 5e-4 ----
void criterion_2() {
    const double tol = 5e-4;
    const auto& ms = corpus_matches();
    std::vector<const CorpusMatch*> over;
    double max_delta = 0;
    const CorpusMatch* worst = nullptr;
    for (const auto& m : ms) {
        if (m.energy_delta > max_delta) {
            max_delta = m.energy_delta;
            worst = &m;
        }
        if (m.energy_delta > tol) over.push_back(&m);
    }

    // the minimum / maximum identities named by the criterion
    const CorpusMatch* minm = nullptr;
    const CorpusMatch* maxm = nullptr;
    for (const auto& m : ms) {
        if (!minm || m.energy < minm->energy) minm = &m;
        if (!maxm || m.energy > maxm->energy) maxm = &m;
    }
    bool extremes_ok = minm->table_label == "G_21" &&
                       std::abs(labeled("G_12").energy - labeled("G_17").energy) < 1e-12 &&
                       (maxm->table_label == "G_12" || maxm->table_label == "G_17");

    bool ok = over.empty() && extremes_ok;
    verdict(ok, 2, "matched energies within 5e-4 of the reference energy column");
    if (!over.empty()) {
        note(std::to_string(over.size()) + " of 21 rows exceed 5e-4; max delta " +
             fmt(max_delta, "%.3e") + " at " + worst->table_label);
        for (const CorpusMatch* m : over)
            note(m->table_label + ": computed " + fmt(m->energy, "%.10f") + ", delta " +
                 fmt(m->energy_delta, "%.3e"));
        // diagnosis: the reference column is truncated to 3 decimals, not
        // rounded, which alone puts ten rows past a 5e-4 gate
        std::map<std::string, double> table_energy;
        for (const auto& f : corpus_fixtures()) table_energy[f.label] = f.energy;
        int trunc_rows = 0;
        const CorpusMatch* trunc_breaker = nullptr;
        for (const auto& m : ms) {
            double t3 = std::floor(m.energy * 1000.0) / 1000.0;
            if (std::abs(t3 - table_energy.at(m.table_label)) < 1e-12)
                ++trunc_rows;
            else
                trunc_breaker = &m;
        }
        note("truncating computed energies to 3 decimals reproduces the reference column on " +
             std::to_string(trunc_rows) + " of 21 rows (a rounded column would sit within 5e-4)");
        if (trunc_breaker)
            note(trunc_breaker->table_label + " disagrees even under truncation: computed " +
                 fmt(trunc_breaker->energy, "%.10f") + " truncates to " +
                 fmt(std::floor(trunc_breaker->energy * 1000) / 1000, "%.3f") +
                 ", reference prints " +
                 fmt(table_energy.at(trunc_breaker->table_label), "%.3f"));
    }
    note(std::string("extremal identities ") + (extremes_ok ? "hold" : "VIOLATED") +
         ": minimum row " + minm->table_label + " = " + fmt(minm->energy, "%.10f") +
         ", maximum pair G_12 = G_17 = " + fmt(maxm->energy, "%.10f"));
}

// ---- criterion 3: the petersen graph ----
void criterion_3() {
    Graph pet = Graph::petersen();
    auto linear = [](long b) { return ExactPoly({QSqrt2::sqrt2(-b), QSqrt2(1)}); };
    ExactPoly expect = linear(9);
    for (int i = 0; i < 4; ++i) expect = expect * linear(-6);
    for (int i = 0; i < 5; ++i) expect = expect * linear(3);
    CharPolyResult cp = charpoly_generic(pet);
    bool poly_ok = cp.mode == PolyMode::exact && cp.exact_poly == expect;

    SpectrumReport sp = sombor_energy(pet);
    bool energy_ok = std::abs(sp.energy - 67.8822509939) <= 1e-9 && sp.exact_energy &&
                     *sp.exact_energy == QSqrt2::sqrt2(48);

    std::string pet_cert = canonical_cert(pet).cert;
    std::string c12 = canonical_cert(labeled("G_12").graph).cert;
    std::string c17 = canonical_cert(labeled("G_17").graph).cert;
    bool cert_ok = pet_cert == c12 || pet_cert == c17;

    double max_energy = 0;
    for (const auto& m : corpus_matches()) max_energy = std::max(max_energy, m.energy);
    bool max_ok = std::abs(max_energy - sp.energy) < 1e-12;

    verdict(poly_ok && energy_ok && cert_ok && max_ok, 3,
            "petersen: factored polynomial, 48*sqrt(2) energy, corpus member, corpus maximum");
    note(std::string("polynomial ") + (poly_ok ? "equals" : "DIFFERS from") +
         " (l - 9 sqrt2)(l + 6 sqrt2)^4 (l - 3 sqrt2)^5");
    note("energy " + fmt(sp.energy, "%.10f") + " (cert " + pet_cert + " = " +
         (pet_cert == c12 ? "G_12" : pet_cert == c17 ? "G_17" : "NEITHER") + ")");
}

// ---- criterion 4: closed forms vs the generic engine ----
void criterion_4() {
    bool ok = true;
    std::string first_bad;
    auto float_close = [](const ExactPoly& closed, const FloatPoly& numeric) {
        if (closed.degree() != numeric.degree()) return false;
        for (long k = 0; k <= closed.degree(); ++k) {
            double want = closed[static_cast<std::size_t>(k)].to_double();
            double got = numeric[static_cast<std::size_t>(k)];
            if (std::abs(got - want) > 1e-8 * std::max(1.0, std::abs(want))) return false;
        }
        return true;
    };
    auto check = [&](const Graph& g, const ExactPoly& closed, const std::string& tag) {
        CharPolyResult r = charpoly_generic(g);
        bool good = r.mode == PolyMode::exact ? r.exact_poly == closed
                                              : float_close(closed, r.float_poly);
        if (!good && first_bad.empty()) first_bad = tag;
        ok = ok && good;
    };
    for (int n = 2; n <= 12; ++n) check(Graph::path(n), charpoly_path(n), "path " + std::to_string(n));
    for (int n = 3; n <= 12; ++n) check(Graph::cycle(n), charpoly_cycle(n), "cycle " + std::to_string(n));
    for (int n = 2; n <= 12; ++n) check(Graph::star(n), charpoly_star(n), "star " + std::to_string(n));
    for (int n = 1; n <= 12; ++n)
        check(Graph::complete(n), charpoly_complete(n), "complete " + std::to_string(n));
    for (int m = 1; m <= 6; ++m)
        for (int n = m; m + n <= 12; ++n)
            check(Graph::complete_bipartite(m, n), charpoly_complete_bipartite(m, n),
                  "bipartite " + std::to_string(m) + "," + std::to_string(n));

    bool bases_ok =
        charpoly_path(2) == ExactPoly({QSqrt2(-2), QSqrt2(0), QSqrt2(1)}) &&
        charpoly_path(3) == ExactPoly({QSqrt2(0), QSqrt2(-10), QSqrt2(0), QSqrt2(1)}) &&
        charpoly_path(4) == ExactPoly({QSqrt2(25), QSqrt2(0), QSqrt2(-18), QSqrt2(0), QSqrt2(1)});

    verdict(ok && bases_ok, 4, "closed-form families equal the generic engine through order 12");
    note(std::string("base cases l^2 - 2, l^3 - 10l, l^4 - 18l^2 + 25 ") +
         (bases_ok ? "exact" : "WRONG"));
    if (!first_bad.empty()) note("first mismatch: " + first_bad);
}

// ---- criterion 5: energy equivalence classes ----
void criterion_5() {
    const auto& ms = corpus_matches();
    std::vector<Graph> gs;
    std::vector<std::string> names;
    for (const auto& m : ms) {
        gs.push_back(m.graph);
        names.push_back(m.table_label);
    }
    EnergyClasses ec = energy_classes(gs);
    std::set<std::set<std::string>> pairs;
    int singletons = 0;
    for (const auto& c : ec.classes) {
        if (c.members.size() == 1) {
            ++singletons;
            continue;
        }
        std::set<std::string> p;
        for (int i : c.members) p.insert(names[static_cast<std::size_t>(i)]);
        pairs.insert(p);
    }
    std::set<std::set<std::string>> want = {
        {"G_1", "G_8"}, {"G_12", "G_17"}, {"G_16", "G_20"}};
    bool ok = pairs == want && singletons == 15;
    verdict(ok, 5, "classes: {G_1,G_8}, {G_12,G_17}, {G_16,G_20} and 15 unique graphs");
    std::string got = std::to_string(singletons) + " singletons, pairs:";
    for (const auto& p : pairs) {
        got += " {";
        for (const auto& s : p) got += s + " ";
        got.back() = '}';
    }
    note(got);
}

// ---- criterion 6: permanents ----
void criterion_6() {
    std::map<std::string, long> want = {{"G_1", 72},  {"G_8", 72}, {"G_16", 144},
                                        {"G_20", 180}, {"G_7", 85}, {"G_11", 85}};
    bool fixed_ok = true;
    for (const auto& [label, value] : want)
        fixed_ok = fixed_ok && ryser_permanent(labeled(label).graph) == mpz_class(value);

    std::mt19937 rng(2026);
    std::bernoulli_distribution coin(0.5);
    bool random_ok = true;
    for (int t = 0; t < 200 && random_ok; ++t) {
        int n = 1 + static_cast<int>(rng() % 7);
        std::vector<std::vector<int>> a(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n)));
        for (auto& row : a)
            for (int& v : row) v = coin(rng);
        random_ok = ryser_permanent(a) == oracle::naive_permanent(a);
    }
    verdict(fixed_ok && random_ok, 6,
            "permanents 72/72/144/180/85/85 and 200 random matrices vs naive expansion");
    note(std::string("table permanents ") + (fixed_ok ? "exact" : "WRONG") +
         ", random agreement " + (random_ok ? "200/200" : "BROKEN"));
}

// ---- criterion 7: spectral bounds ----
void criterion_7() {
    bool ok = true;
    std::string bad;
    auto check = [&](const Graph& g, const std::string& tag) {
        SpectrumReport r = sombor_energy(g);
        if (r.mcclelland_bound - r.energy < -1e-9 || r.koolen_moulton_bound - r.energy < -1e-9) {
            ok = false;
            if (bad.empty()) bad = tag;
        }
    };
    for (const auto& m : corpus_matches()) check(m.graph, m.table_label);
    std::mt19937 rng(2027);
    for (int t = 0; t < 500; ++t) {
        int n = 2 + static_cast<int>(rng() % 11);
        check(oracle::random_graph(rng, n), "random #" + std::to_string(t));
    }
    double mc = mcclelland_bound(Graph::petersen());
    double km = koolen_moulton_bound(Graph::petersen());
    bool cubic_ok = std::abs(mc - std::sqrt(5400.0)) < 1e-9 &&
                    std::abs(km - (9 * std::sqrt(2.0) + std::sqrt(3402.0))) < 1e-9 &&
                    std::abs(mc - 73.485) < 5e-4 && std::abs(km - 71.055) < 5e-4;
    verdict(ok && cubic_ok, 7, "energy <= both bounds on corpus plus 500 random graphs");
    note("cubic order 10: mcclelland " + fmt(mc, "%.6f") + " (sqrt 5400), koolen-moulton " +
         fmt(km, "%.6f"));
    if (!bad.empty()) note("first violation: " + bad);
}

// ---- criterion 8: spectral identities ----
void criterion_8() {
    bool moments_ok = true;
    std::string bad;
    auto check_moments = [&](const Graph& g, const std::string& tag) {
        SpectrumReport r = sombor_energy(g);
        double tr = 0, sq = 0;
        for (double v : r.eigenvalues) {
            tr += v;
            sq += v * v;
        }
        double f2 = 2.0 * static_cast<double>(forgotten_index(g));
        if (std::abs(tr) > 1e-8 || std::abs(sq - f2) > 1e-6 * std::max(1.0, f2)) {
            moments_ok = false;
            if (bad.empty()) bad = tag;
        }
    };
    for (const auto& m : corpus_matches()) check_moments(m.graph, m.table_label);
    std::mt19937 rng(2028);
    for (int t = 0; t < 100; ++t)
        check_moments(oracle::random_graph(rng, 2 + static_cast<int>(rng() % 11)),
                      "random #" + std::to_string(t));

    bool coeff_ok = true;
    auto check_coeffs = [&](const Graph& g) {
        CharPolyResult r = charpoly_generic(g);
        if (r.mode != PolyMode::exact) return;
        long n = g.n();
        coeff_ok = coeff_ok && r.exact_poly[static_cast<std::size_t>(n - 1)].is_zero() &&
                   r.exact_poly[static_cast<std::size_t>(n - 2)] == QSqrt2(-forgotten_index(g));
    };
    for (const auto& m : corpus_matches()) check_coeffs(m.graph);
    for (int n = 3; n <= 10; ++n) check_coeffs(Graph::cycle(n));
    for (int n = 2; n <= 8; ++n) check_coeffs(Graph::complete(n));

    verdict(moments_ok && coeff_ok, 8,
            "trace 0, second moment 2F(G), exact coefficients at powers n-1 and n-2");
    if (!bad.empty()) note("first moment violation: " + bad);
}

// ---- criterion 9: union and deletion identities ----
void criterion_9() {
    std::mt19937 rng(2029);
    bool union_ok = true;
    for (int t = 0; t < 100 && union_ok; ++t) {
        Graph a = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 5));
        Graph b = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 5));
        Graph u = Graph::disjoint_union({a, b});
        // multiplicativity of the characteristic polynomial
        CharPolyResult ra = charpoly_generic(a), rb = charpoly_generic(b),
                       ru = charpoly_generic(u);
        if (ra.mode == PolyMode::exact && rb.mode == PolyMode::exact &&
            ru.mode == PolyMode::exact) {
            union_ok = ru.exact_poly == ra.exact_poly * rb.exact_poly;
        } else {
            FloatPoly prod = ra.float_poly * rb.float_poly;
            if (prod.degree() != ru.float_poly.degree()) {
                union_ok = false;
                break;
            }
            for (long k = 0; k <= prod.degree(); ++k) {
                double want = prod[static_cast<std::size_t>(k)];
                double got = ru.float_poly[static_cast<std::size_t>(k)];
                if (std::abs(got - want) > 1e-8 * std::max(1.0, std::abs(want))) {
                    union_ok = false;
                    break;
                }
            }
        }
        // additivity of the energy
        double ea = sombor_energy(a).energy, eb = sombor_energy(b).energy,
               eu = sombor_energy(u).energy;
        if (std::abs(eu - ea - eb) > 1e-9) union_ok = false;
    }

    bool cycle_ok = true, star_ok = true, path_ok = true;
    for (int n = 3; n <= 12; ++n) {
        Graph c = Graph::cycle(n);
        double lhs = sombor_energy(c.delete_edge(0, n - 1)).energy;
        double rhs = sombor_energy(Graph::path(n)).energy;
        if (std::abs(lhs - rhs) > 1e-9) cycle_ok = false;
    }
    for (int n = 3; n <= 12; ++n) {
        Graph s = Graph::star(n);
        double lhs = sombor_energy(s.delete_edge(0, n - 1)).energy;
        double rhs = n == 3 ? sombor_energy(Graph::complete(2)).energy
                            : sombor_energy(Graph::star(n - 1)).energy;
        if (std::abs(lhs - rhs) > 1e-9) star_ok = false;
    }
    for (int n = 2; n <= 12; ++n) {
        Graph p = Graph::path(n);
        for (int r = 1; r < n; ++r) {
            int s = n - r;
            double lhs = sombor_energy(p.delete_edge(r - 1, r)).energy;
            double rhs = (r >= 2 ? sombor_energy(Graph::path(r)).energy : 0.0) +
                         (s >= 2 ? sombor_energy(Graph::path(s)).energy : 0.0);
            if (std::abs(lhs - rhs) > 1e-9) path_ok = false;
        }
    }

    verdict(union_ok && cycle_ok && star_ok && path_ok, 9,
            "union multiplicativity/additivity and the three deletion identities");
    note(std::string("unions ") + (union_ok ? "ok" : "BROKEN") + ", C_n - e = P_n " +
         (cycle_ok ? "ok" : "BROKEN") + ", S_n - e = S_{n-1} " + (star_ok ? "ok" : "BROKEN") +
         ", P_n - e = P_r + P_s " + (path_ok ? "ok" : "BROKEN"));
}

// ---- criterion 10: the conjecture scan ----
void criterion_10() {
    auto t0 = clock_type::now();
    std::vector<Graph> gs;
    for (int n = 1; n <= 7; ++n) {
        std::vector<Graph> all = enumerate_all_graphs(n);
        gs.insert(gs.end(), all.begin(), all.end());
    }
    ScanReport rep = integer_energy_search(gs, 1e-7);
    double secs = seconds_since(t0);

    const char* artifact = "acceptance_scan_report.json";
    {
        std::ofstream out(artifact);
        json j = scan_json(rep);
        j["schema"] = "sombor/1";
        out << j.dump(2, ' ', true) << "\n";
    }
    std::ifstream back(artifact);
    bool artifact_ok = back.good();

    bool ok = secs < 600.0 && artifact_ok && rep.scanned > 0;
    verdict(ok, 10, "conjecture scan over every graph with >= 1 edge through order 7");
    note("scanned " + std::to_string(rep.scanned) + " graphs in " + fmt(secs, "%.1f") +
         " s; hits within 1e-7 of an integer: " + std::to_string(rep.hits.size()) +
         " (reported, not asserted)");
    if (!rep.nearest.empty())
        note("closest approach: " + rep.nearest[0].g6 + " energy " +
             fmt(rep.nearest[0].energy, "%.10f") + " gap " + fmt(rep.nearest[0].gap, "%.3e"));
    note(std::string("report artifact: ") + artifact);
}

} // namespace

int main(int argc, char** argv) {
    void (*criteria[])() = {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10};
    if (argc > 1) {
        int which = std::atoi(argv[1]);
        if (which < 1 || which > 10) {
            std::fprintf(stderr, "usage: %s [1..10]\n", argv[0]);
            return 64;
        }
        criteria[which - 1]();
        return checks_failed;
    }
    for (auto* fn : criteria) fn();
    std::printf("%d of 10 criteria failed\n", checks_failed);
    return checks_failed;
}
