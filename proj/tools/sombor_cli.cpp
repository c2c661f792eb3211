// sombor: command-line front end for the Sombor-matrix library.
//
// Exit codes: 0 success, 2 input/usage errors, 3 verification mismatches
// (corpus rows that disagree with the bundled reference tables).

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <sombor/sombor.hpp>

using namespace sombor;

namespace {

struct GlobalOpts {
    bool json = false;
    bool ascii = false;
    bool timestamps = false;
};

struct InputOpts {
    std::string g6;      // --g6 flag
    std::string g6_pos;  // bare positional, same meaning
    std::string file;
    bool from_stdin = false;
    std::string family;
    int n = 0;
    int m = 0;
};

int g_exit = 0;

std::string iso_now() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

void emit_json(const GlobalOpts& g, json j) {
    j["schema"] = "sombor/1";
    if (g.timestamps) j["generated_at"] = iso_now();
    // ensure_ascii keeps the payload 7-bit clean regardless of locale
    std::cout << j.dump(2, ' ', true) << "\n";
}

void stamp_table(const GlobalOpts& g) {
    if (g.timestamps) std::cout << "# generated at " << iso_now() << "\n";
}

Graph build_family(const std::string& name, int n, int m) {
    if (name == "path") return Graph::path(n);
    if (name == "cycle") return Graph::cycle(n);
    if (name == "star") return Graph::star(n);
    if (name == "complete") return Graph::complete(n);
    if (name == "complete_bipartite") return Graph::complete_bipartite(m, n);
    if (name == "petersen") return Graph::petersen();
    throw std::invalid_argument("unknown family '" + name +
                                "' (path, cycle, star, complete, complete_bipartite, petersen)");
}

void add_input_flags(CLI::App* cmd, InputOpts& in, bool stream_ok) {
    cmd->add_option("graph6", in.g6_pos, "graph as a graph6 string");
    cmd->add_option("--g6", in.g6, "graph as a graph6 string");
    cmd->add_option("--file", in.file,
                    stream_ok ? "read graph6 lines from a file" : "read a graph6 line from a file");
    cmd->add_flag("--stdin", in.from_stdin,
                  stream_ok ? "read graph6 lines from standard input"
                            : "read a graph6 line from standard input");
    cmd->add_option("--family", in.family,
                    "named family: path, cycle, star, complete, complete_bipartite, petersen");
    cmd->add_option("--n", in.n, "order parameter for --family");
    cmd->add_option("--m", in.m, "first part size for --family complete_bipartite");
}

std::vector<Graph> collect_graphs(const InputOpts& in) {
    std::vector<Graph> gs;
    std::string g6 = !in.g6.empty() ? in.g6 : in.g6_pos;
    int sources = (!in.g6.empty()) + (!in.g6_pos.empty()) + (!in.file.empty()) + in.from_stdin +
                  (!in.family.empty());
    if (sources == 0)
        throw std::invalid_argument("no graph input (give a graph6 string, --file, --stdin, or --family)");
    if (sources > 1)
        throw std::invalid_argument("give exactly one of graph6/--g6/--file/--stdin/--family");
    if (!in.family.empty()) {
        gs.push_back(build_family(in.family, in.n, in.m));
        return gs;
    }
    if (!g6.empty()) {
        gs.push_back(from_graph6(g6));
        return gs;
    }
    std::istream* src = &std::cin;
    std::ifstream f;
    if (!in.file.empty()) {
        f.open(in.file);
        if (!f) throw std::runtime_error("cannot open " + in.file);
        src = &f;
    }
    std::string line;
    while (std::getline(*src, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        gs.push_back(from_graph6(line));
    }
    if (gs.empty()) throw std::invalid_argument("no graph6 lines found in input");
    return gs;
}

Graph collect_one(const InputOpts& in) {
    std::vector<Graph> gs = collect_graphs(in);
    if (gs.size() != 1)
        throw std::invalid_argument("this subcommand takes exactly one graph, got " +
                                    std::to_string(gs.size()));
    return gs[0];
}

std::string radical_str(const RadicalEnergy& r) {
    if (r.radicand == 1) return std::to_string(r.multiplier);
    if (r.multiplier == 1) return "sqrt(" + std::to_string(r.radicand) + ")";
    return std::to_string(r.multiplier) + "*sqrt(" + std::to_string(r.radicand) + ")";
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// ---- subcommand bodies ----

void cmd_matrix(const GlobalOpts& g, const InputOpts& in) {
    Graph gr = collect_one(in);
    SomborMatrix M = sombor_matrix(gr);
    if (g.json) {
        json j = matrix_json(M);
        j["g6"] = to_graph6(gr);
        emit_json(g, j);
        return;
    }
    stamp_table(g);
    int n = M.n();
    std::vector<std::string> cell(static_cast<std::size_t>(n) * n, "0");
    std::size_t width = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const SomborWeight* w = M.entry(i, j);
            if (!w) continue;
            std::string s = w->kind == WeightKind::irrational_float
                                ? "sqrt(" + std::to_string(w->squared) + ")"
                                : w->exact.str();
            width = std::max(width, s.size());
            cell[static_cast<std::size_t>(i) * n + j] = std::move(s);
        }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const std::string& s = cell[static_cast<std::size_t>(i) * n + j];
            std::cout << (j ? "  " : "") << std::string(width - s.size(), ' ') << s;
        }
        std::cout << "\n";
    }
}

void cmd_charpoly(const GlobalOpts& g, const InputOpts& in) {
    // named families go through the closed forms; everything else through the
    // generic engine
    if (!in.family.empty() && in.family != "petersen") {
        ExactPoly p;
        if (in.family == "path") p = charpoly_path(in.n);
        else if (in.family == "cycle") p = charpoly_cycle(in.n);
        else if (in.family == "star") p = charpoly_star(in.n);
        else if (in.family == "complete") p = charpoly_complete(in.n);
        else if (in.family == "complete_bipartite") p = charpoly_complete_bipartite(in.m, in.n);
        else throw std::invalid_argument("unknown family '" + in.family + "'");
        if (g.json) {
            json j = charpoly_json(p, in.family);
            j["display"] = poly_str(p, false);
            emit_json(g, j);
        } else {
            stamp_table(g);
            std::cout << poly_str(p, !g.ascii) << "\n";
        }
        return;
    }
    Graph gr = collect_one(in);
    CharPolyResult r = charpoly_generic(gr);
    if (in.family == "petersen") r.family_tag = "petersen";
    if (g.json) {
        json j = charpoly_json(r);
        j["display"] = r.mode == PolyMode::exact ? poly_str(r.exact_poly, false)
                                                 : poly_str(r.float_poly, false);
        emit_json(g, j);
    } else {
        stamp_table(g);
        if (r.mode == PolyMode::exact)
            std::cout << poly_str(r.exact_poly, !g.ascii) << "\n";
        else
            std::cout << poly_str(r.float_poly, !g.ascii) << "\n";
    }
}

void cmd_spectrum(const GlobalOpts& g, const InputOpts& in, double tol) {
    Graph gr = collect_one(in);
    SpectrumReport r = sombor_energy(gr, tol);
    if (g.json) {
        json j = spectrum_json(r);
        j["g6"] = to_graph6(gr);
        emit_json(g, j);
        return;
    }
    stamp_table(g);
    for (double v : r.eigenvalues) std::cout << fmt(v) << "\n";
    std::cout << "energy   " << fmt(r.energy) << "\n";
    std::cout << "residual " << fmt(r.residual) << "\n";
}

void cmd_energy(const GlobalOpts& g, const InputOpts& in, double tol) {
    Graph gr = collect_one(in);
    SpectrumReport r = sombor_energy(gr, tol);
    if (g.json) {
        json j = spectrum_json(r);
        j.erase("eigenvalues");
        j["g6"] = to_graph6(gr);
        emit_json(g, j);
        return;
    }
    stamp_table(g);
    std::cout << "En_SO = " << fmt(r.energy);
    if (r.exact_energy) std::cout << " = " << r.exact_energy->str() << " exactly";
    std::cout << "\n";
}

void cmd_bounds(const GlobalOpts& g, const InputOpts& in) {
    Graph gr = collect_one(in);
    SpectrumReport r = sombor_energy(gr);
    if (g.json) {
        json j = {{"g6", to_graph6(gr)},
                  {"energy", r.energy},
                  {"mcclelland_bound", r.mcclelland_bound},
                  {"koolen_moulton_bound", r.koolen_moulton_bound},
                  {"koolen_moulton_clamped", r.koolen_moulton_clamped},
                  {"mcclelland_slack", r.mcclelland_bound - r.energy},
                  {"koolen_moulton_slack", r.koolen_moulton_bound - r.energy}};
        emit_json(g, j);
        return;
    }
    stamp_table(g);
    std::cout << "energy          " << fmt(r.energy) << "\n";
    std::cout << "mcclelland      " << fmt(r.mcclelland_bound) << "  (slack "
              << fmt(r.mcclelland_bound - r.energy) << ")\n";
    std::cout << "koolen-moulton  " << fmt(r.koolen_moulton_bound) << "  (slack "
              << fmt(r.koolen_moulton_bound - r.energy) << ")"
              << (r.koolen_moulton_clamped ? "  [clamped]" : "") << "\n";
}

void cmd_permanent(const GlobalOpts& g, const InputOpts& in) {
    Graph gr = collect_one(in);
    mpz_class p = ryser_permanent(gr);
    if (g.json) {
        emit_json(g, {{"g6", to_graph6(gr)}, {"permanent", p.get_str()}});
        return;
    }
    stamp_table(g);
    std::cout << "per(A) = " << p.get_str() << "\n";
}

void cmd_generate(const GlobalOpts& g, int n, int k, bool connected_only) {
    GenerationResult res = generate_k_regular(n, k, connected_only);
    if (g.json) {
        json graphs = json::array();
        for (const Graph& gr : res.graphs) graphs.push_back(to_graph6(gr));
        json j = {{"n", n},
                  {"k", k},
                  {"connected_only", connected_only},
                  {"count", res.graphs.size()},
                  {"graphs", graphs}};
        if (!res.note.empty()) j["note"] = res.note;
        emit_json(g, j);
        return;
    }
    stamp_table(g);
    if (!res.note.empty()) std::cerr << res.note << "\n";
    for (const Graph& gr : res.graphs) std::cout << to_graph6(gr) << "\n";
}

void cmd_corpus_verify(const GlobalOpts& g, int n, int k, const std::string& fixtures_path,
                       double tol) {
    std::vector<CorpusFixture> fixtures =
        fixtures_path.empty() ? corpus_fixtures() : load_fixtures(fixtures_path);
    GenerationResult gen = generate_k_regular(n, k, false);
    std::vector<CorpusMatch> matches = match_corpus(gen.graphs, fixtures);

    // label -> table energy, for the report
    std::vector<CorpusMatch const*> by_label;
    for (const auto& m : matches) by_label.push_back(&m);
    std::sort(by_label.begin(), by_label.end(), [](const CorpusMatch* a, const CorpusMatch* b) {
        auto num = [](const std::string& s) {
            std::size_t us = s.find('_');
            return us == std::string::npos ? 0L : std::stol(s.substr(us + 1));
        };
        return num(a->table_label) < num(b->table_label);
    });

    int exact = 0;
    double max_delta = 0;
    for (const auto& m : matches) {
        if (m.exact_match) ++exact;
        max_delta = std::max(max_delta, m.energy_delta);
    }
    bool ok = exact == static_cast<int>(matches.size()) && max_delta <= tol;

    if (g.json) {
        json rows = json::array();
        for (const CorpusMatch* m : by_label) rows.push_back(match_json(*m));
        emit_json(g, {{"count", matches.size()},
                      {"exact_rows", exact},
                      {"max_energy_delta", max_delta},
                      {"tol", tol},
                      {"ok", ok},
                      {"rows", rows}});
    } else {
        stamp_table(g);
        std::printf("%-6s %-14s %-5s %-7s %16s %12s\n", "label", "g6", "poly", "deltas", "energy",
                    "delta");
        for (const CorpusMatch* m : by_label) {
            std::printf("%-6s %-14s %-5s %-7zu %16.10f %12.6e\n", m->table_label.c_str(),
                        to_graph6(m->graph).c_str(), m->exact_match ? "exact" : "DIFF",
                        m->poly_delta.size(), m->energy, m->energy_delta);
            for (const auto& d : m->poly_delta)
                std::printf("       power %d: computed %s, table %s\n", d.power,
                            d.computed.str().c_str(), d.fixture.str().c_str());
        }
        std::printf("%d/%zu exact polynomial rows, max energy delta %.6e (tol %.1e)\n", exact,
                    matches.size(), max_delta, tol);
    }
    if (!ok) {
        std::cerr << "corpus verify: " << (matches.size() - static_cast<std::size_t>(exact))
                  << " polynomial mismatch(es), max energy delta " << fmt(max_delta)
                  << " vs tol " << fmt(tol) << "\n";
        g_exit = 3;
    }
}

void cmd_classes(const GlobalOpts& g, const InputOpts& in, int n, int k, double tol) {
    std::vector<Graph> gs;
    std::vector<std::string> names;
    bool have_input = !in.g6.empty() || !in.g6_pos.empty() || !in.file.empty() || in.from_stdin || !in.family.empty();
    if (have_input) {
        gs = collect_graphs(in);
        for (const Graph& gr : gs) names.push_back(to_graph6(gr));
    } else {
        // default: the k-regular corpus with table labels
        GenerationResult gen = generate_k_regular(n, k, false);
        std::vector<CorpusMatch> matches = match_corpus(gen.graphs);
        for (const auto& m : matches) {
            gs.push_back(m.graph);
            names.push_back(m.table_label);
        }
    }
    EnergyClasses ec = energy_classes(gs, tol);
    if (g.json) {
        json j = classes_json(ec, names);
        j["tol"] = tol;
        int unique = 0;
        for (bool b : ec.unique_flags) unique += b;
        j["unique_count"] = unique;
        emit_json(g, j);
        return;
    }
    stamp_table(g);
    for (std::size_t i = 0; i < ec.classes.size(); ++i) {
        const EnergyClass& c = ec.classes[i];
        std::cout << "class " << i + 1 << ": ";
        for (std::size_t j = 0; j < c.members.size(); ++j)
            std::cout << (j ? " " : "") << names[static_cast<std::size_t>(c.members[j])];
        std::cout << "  energy " << fmt(c.energy) << "  kind " << c.kind;
        if (c.exact_energy) std::cout << " (" << c.exact_energy->str() << ")";
        std::cout << "\n";
    }
    int unique = 0;
    for (bool b : ec.unique_flags) unique += b;
    std::cout << ec.classes.size() << " classes, " << unique << " unique graphs\n";
}

void cmd_scan(const GlobalOpts& g, const InputOpts& in, int max_n, double tol,
              bool connected_only, const std::string& out_path) {
    std::vector<Graph> gs;
    bool have_input = !in.g6.empty() || !in.g6_pos.empty() || !in.file.empty() || in.from_stdin || !in.family.empty();
    if (have_input) {
        gs = collect_graphs(in);
    } else {
        if (max_n < 1 || max_n > 7)
            throw std::invalid_argument("conjecture scan: --max-n must be in 1..7 "
                                        "(use --stdin for larger streams)");
        for (int n = 1; n <= max_n; ++n) {
            std::vector<Graph> all = enumerate_all_graphs(n);
            gs.insert(gs.end(), all.begin(), all.end());
        }
    }
    if (connected_only) {
        std::vector<Graph> keep;
        for (Graph& gr : gs)
            if (gr.is_connected()) keep.push_back(std::move(gr));
        gs.swap(keep);
    }
    ScanReport rep = integer_energy_search(gs, tol);
    json j = scan_json(rep);
    j["schema"] = "sombor/1";
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << j.dump(2, ' ', true) << "\n";
    }
    if (g.json) {
        if (g.timestamps) j["generated_at"] = iso_now();
        std::cout << j.dump(2, ' ', true) << "\n";
        return;
    }
    stamp_table(g);
    std::cout << "scanned " << rep.scanned << " graphs (skipped " << rep.skipped_edgeless
              << " edgeless), tol " << fmt(rep.tol) << "\n";
    std::cout << "integer-energy hits: " << rep.hits.size() << "\n";
    for (const auto& e : rep.hits)
        std::cout << "  " << e.g6 << "  energy " << fmt(e.energy) << "  ["
                  << e.resolution << "]\n";
    std::cout << "nearest misses:\n";
    for (const auto& e : rep.nearest)
        std::cout << "  " << e.g6 << "  n=" << e.n << "  energy " << fmt(e.energy) << "  gap "
                  << fmt(e.gap) << "\n";
    if (!out_path.empty()) std::cout << "report written to " << out_path << "\n";
}

void cmd_family(const GlobalOpts& g, const std::string& name, int n, int m) {
    Graph gr = build_family(name, n, m);
    json j = {{"family", name}, {"g6", to_graph6(gr)}, {"n", gr.n()}, {"m_edges", gr.m()}};
    std::string poly_display_uni, poly_display_ascii;
    if (name == "petersen") {
        CharPolyResult r = charpoly_generic(gr);
        j["charpoly"] = charpoly_json(r.exact_poly, name);
        poly_display_uni = poly_str(r.exact_poly, true);
        poly_display_ascii = poly_str(r.exact_poly, false);
    } else {
        ExactPoly p;
        if (name == "path") p = charpoly_path(n);
        else if (name == "cycle") p = charpoly_cycle(n);
        else if (name == "star") p = charpoly_star(n);
        else if (name == "complete") p = charpoly_complete(n);
        else p = charpoly_complete_bipartite(m, n);
        j["charpoly"] = charpoly_json(p, name);
        poly_display_uni = poly_str(p, true);
        poly_display_ascii = poly_str(p, false);
    }

    SpectrumReport r = sombor_energy(gr);
    j["energy"] = r.energy;
    std::string exact_text;
    if (name == "star") exact_text = radical_str(energy_star(n));
    else if (name == "complete") exact_text = energy_complete(n).str();
    else if (name == "complete_bipartite") exact_text = radical_str(energy_complete_bipartite(m, n));
    else if (r.exact_energy) exact_text = r.exact_energy->str();
    if (!exact_text.empty()) j["exact_energy"] = exact_text;

    if (g.json) {
        j["charpoly"]["display"] = poly_display_ascii;
        emit_json(g, j);
        return;
    }
    stamp_table(g);
    std::cout << name << "  " << to_graph6(gr) << "  (n=" << gr.n() << ", edges=" << gr.m()
              << ")\n";
    std::cout << "charpoly: " << (g.ascii ? poly_display_ascii : poly_display_uni) << "\n";
    std::cout << "energy:   " << fmt(r.energy);
    if (!exact_text.empty()) std::cout << " = " << exact_text << " exactly";
    std::cout << "\n";
}

} // namespace

int main(int argc, char** argv) {
    GlobalOpts g;
    CLI::App app{"Sombor matrices of simple graphs: exact characteristic polynomials,\n"
                 "energies, spectral bounds, permanents, and search harnesses."};
    app.require_subcommand(1);
    app.add_flag("--json", g.json, "emit JSON instead of tables");
    app.add_flag("--ascii", g.ascii, "ASCII-only table output (l instead of λ)");
    app.add_flag("--timestamps", g.timestamps, "stamp outputs with generation time (off: outputs are byte-identical across runs)");

    InputOpts in_matrix, in_charpoly, in_spectrum, in_energy, in_bounds, in_permanent, in_classes,
        in_scan;

    auto* c_matrix = app.add_subcommand("matrix", "Sombor matrix of one graph");
    add_input_flags(c_matrix, in_matrix, false);
    c_matrix->callback([&] { cmd_matrix(g, in_matrix); });

    auto* c_charpoly = app.add_subcommand("charpoly", "characteristic polynomial of the Sombor matrix");
    add_input_flags(c_charpoly, in_charpoly, false);
    c_charpoly->callback([&] { cmd_charpoly(g, in_charpoly); });

    double spectrum_tol = 1e-13;
    auto* c_spectrum = app.add_subcommand("spectrum", "Sombor eigenvalues and energy");
    add_input_flags(c_spectrum, in_spectrum, false);
    c_spectrum->add_option("--tol", spectrum_tol, "Jacobi off-diagonal tolerance (default 1e-13)");
    c_spectrum->callback([&] { cmd_spectrum(g, in_spectrum, spectrum_tol); });

    double energy_tol = 1e-13;
    auto* c_energy = app.add_subcommand("energy", "Sombor energy of one graph");
    add_input_flags(c_energy, in_energy, false);
    c_energy->add_option("--tol", energy_tol, "Jacobi off-diagonal tolerance (default 1e-13)");
    c_energy->callback([&] { cmd_energy(g, in_energy, energy_tol); });

    auto* c_bounds = app.add_subcommand("bounds", "McClelland and Koolen-Moulton energy bounds");
    add_input_flags(c_bounds, in_bounds, false);
    c_bounds->callback([&] { cmd_bounds(g, in_bounds); });

    auto* c_permanent = app.add_subcommand("permanent", "permanent of the adjacency matrix");
    add_input_flags(c_permanent, in_permanent, false);
    c_permanent->callback([&] { cmd_permanent(g, in_permanent); });

    int gen_n = 10, gen_k = 3;
    bool gen_conn = false;
    auto* c_generate = app.add_subcommand("generate", "all k-regular graphs on n vertices, one graph6 line each");
    c_generate->add_option("--n", gen_n, "number of vertices (1..12)")->required();
    c_generate->add_option("--k", gen_k, "regularity degree")->required();
    c_generate->add_flag("--connected-only", gen_conn, "keep connected graphs only");
    c_generate->callback([&] { cmd_generate(g, gen_n, gen_k, gen_conn); });

    auto* c_corpus = app.add_subcommand("corpus", "reference-table operations");
    c_corpus->require_subcommand(1);
    int cv_n = 10, cv_k = 3;
    double cv_tol = 5e-4;
    std::string cv_fixtures;
    auto* c_verify = c_corpus->add_subcommand(
        "verify", "generate the corpus and check it against the bundled tables");
    c_verify->add_option("--n", cv_n, "number of vertices (default 10)");
    c_verify->add_option("--k", cv_k, "regularity degree (default 3)");
    c_verify->add_option("--tol", cv_tol, "energy tolerance vs table values (default 5e-4)");
    c_verify->add_option("--fixtures", cv_fixtures, "fixtures JSON file (default: embedded tables)");
    c_verify->callback([&] { cmd_corpus_verify(g, cv_n, cv_k, cv_fixtures, cv_tol); });

    int cl_n = 10, cl_k = 3;
    double cl_tol = 1e-6;
    auto* c_classes = app.add_subcommand("classes", "energy equivalence classes");
    add_input_flags(c_classes, in_classes, true);
    c_classes->add_option("--corpus-n", cl_n, "corpus order when no input given (default 10)");
    c_classes->add_option("--corpus-k", cl_k, "corpus regularity when no input given (default 3)");
    c_classes->add_option("--tol", cl_tol, "energy grouping tolerance (default 1e-6)");
    c_classes->callback([&] { cmd_classes(g, in_classes, cl_n, cl_k, cl_tol); });

    auto* c_conj = app.add_subcommand("conjecture", "integer-energy conjecture harness");
    c_conj->require_subcommand(1);
    int scan_max_n = 7;
    double scan_tol = 1e-7;
    bool scan_conn = false;
    std::string scan_out;
    auto* c_scan = c_conj->add_subcommand(
        "scan", "scan graphs for integer Sombor energy (reports, never asserts)");
    add_input_flags(c_scan, in_scan, true);
    c_scan->add_option("--max-n", scan_max_n, "scan all graphs up to this order when no input given (1..7)");
    c_scan->add_option("--tol", scan_tol, "integer proximity tolerance (default 1e-7)");
    c_scan->add_flag("--connected-only", scan_conn, "restrict to connected graphs");
    c_scan->add_option("--out", scan_out, "also write the JSON report to this file");
    c_scan->callback([&] { cmd_scan(g, in_scan, scan_max_n, scan_tol, scan_conn, scan_out); });

    std::string fam_name;
    int fam_n = 0, fam_m = 0;
    auto* c_family = app.add_subcommand("family", "closed-form polynomial and energy for a named family");
    c_family->add_option("name", fam_name,
                         "path, cycle, star, complete, complete_bipartite, petersen")
        ->required();
    c_family->add_option("--n", fam_n, "order parameter");
    c_family->add_option("--m", fam_m, "first part size (complete_bipartite)");
    c_family->callback([&] { cmd_family(g, fam_name, fam_n, fam_m); });

    // let the global --json/--ascii/--timestamps flags appear after the
    // subcommand too ("energy --family petersen --json")
    std::function<void(CLI::App*)> allow_trailing_globals = [&](CLI::App* cmd) {
        for (CLI::App* sub : cmd->get_subcommands(nullptr)) {
            sub->fallthrough();
            allow_trailing_globals(sub);
        }
    };
    allow_trailing_globals(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return g_exit;
}
