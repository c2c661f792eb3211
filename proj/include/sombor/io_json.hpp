#pragma once

// JSON views of the library types. Everything that leaves the CLI as
// machine-readable output funnels through here so the shapes stay consistent.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "analysis.hpp"
#include "charpoly.hpp"
#include "fixtures.hpp"
#include "spectra.hpp"
#include "weights.hpp"

namespace sombor {

using json = nlohmann::json;

inline json poly_json(const ExactPoly& p) {
    json coeffs = json::array();
    for (long k = 0; k <= p.degree(); ++k) {
        const QSqrt2& c = p[static_cast<std::size_t>(k)];
        coeffs.push_back({{"power", k},
                          {"rational", c.rational_part().get_str()},
                          {"sqrt2", c.sqrt2_part().get_str()}});
    }
    return {{"mode", "exact"}, {"degree", p.degree()}, {"coeffs", coeffs}};
}

inline json poly_json(const FloatPoly& p) {
    json coeffs = json::array();
    for (long k = 0; k <= p.degree(); ++k)
        coeffs.push_back({{"power", k}, {"value", p[static_cast<std::size_t>(k)]}});
    return {{"mode", "float"}, {"degree", p.degree()}, {"coeffs", coeffs}};
}

inline json charpoly_json(const CharPolyResult& r) {
    json j = r.mode == PolyMode::exact ? poly_json(r.exact_poly) : poly_json(r.float_poly);
    if (!r.family_tag.empty()) j["family"] = r.family_tag;
    if (r.mode == PolyMode::exact) j["float_coeffs"] = poly_json(r.float_poly)["coeffs"];
    return j;
}

// closed-form families hand back a bare exact polynomial
inline json charpoly_json(const ExactPoly& p, const std::string& family = "") {
    json j = poly_json(p);
    if (!family.empty()) j["family"] = family;
    j["float_coeffs"] = poly_json(to_float_poly(p))["coeffs"];
    return j;
}

inline json matrix_json(const SomborMatrix& M) {
    json entries = json::array();
    int n = M.n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const SomborWeight* w = M.entry(i, j);
            if (!w) continue;
            json e = {{"i", i}, {"j", j}, {"squared", w->squared}};
            if (w->kind != WeightKind::irrational_float)
                e["exact"] = w->exact.str();
            else
                e["value"] = w->value;
            entries.push_back(e);
        }
    return {{"n", n}, {"all_exact", M.all_exact()}, {"entries", entries}};
}

inline json spectrum_json(const SpectrumReport& r) {
    json j = {{"eigenvalues", r.eigenvalues},
              {"energy", r.energy},
              {"mcclelland_bound", r.mcclelland_bound},
              {"koolen_moulton_bound", r.koolen_moulton_bound},
              {"koolen_moulton_clamped", r.koolen_moulton_clamped},
              {"residual", r.residual}};
    if (r.exact_energy) j["exact_energy"] = r.exact_energy->str();
    return j;
}

inline json match_json(const CorpusMatch& m) {
    json j = {{"label", m.table_label},
              {"g6", to_graph6(m.graph)},
              {"cert", m.cert},
              {"exact_match", m.exact_match},
              {"energy", m.energy},
              {"energy_delta", m.energy_delta}};
    if (!m.poly_delta.empty()) {
        json d = json::array();
        for (const auto& cd : m.poly_delta)
            d.push_back({{"power", cd.power},
                         {"computed", cd.computed.str()},
                         {"fixture", cd.fixture.str()}});
        j["poly_delta"] = d;
    }
    return j;
}

inline json classes_json(const EnergyClasses& ec, const std::vector<std::string>& names) {
    json cs = json::array();
    for (const auto& c : ec.classes) {
        json members = json::array();
        for (int m : c.members) members.push_back(names[static_cast<std::size_t>(m)]);
        json jc = {{"members", members},
                   {"energy", c.energy},
                   {"spread", c.spread},
                   {"kind", c.kind}};
        if (c.exact_energy) jc["exact_energy"] = c.exact_energy->str();
        cs.push_back(jc);
    }
    return {{"classes", cs}};
}

inline json scan_entry_json(const ScanEntry& e) {
    json j = {{"g6", e.g6},
              {"n", e.n},
              {"energy", e.energy},
              {"nearest_integer", e.nearest_integer},
              {"gap", e.gap}};
    if (!e.resolution.empty()) j["resolution"] = e.resolution;
    return j;
}

inline json scan_json(const ScanReport& r) {
    json hits = json::array(), near = json::array();
    for (const auto& e : r.hits) hits.push_back(scan_entry_json(e));
    for (const auto& e : r.nearest) near.push_back(scan_entry_json(e));
    return {{"tol", r.tol},
            {"scanned", r.scanned},
            {"skipped_edgeless", r.skipped_edgeless},
            {"hits", hits},
            {"nearest_misses", near}};
}

// ---- fixture files ----
// External fixture files use the same row shape as the embedded table:
//   [{"label": "G_1", "coeffs": [[power, rational, sqrt2], ...], "energy": 38.864}, ...]

inline json fixtures_json(const std::vector<CorpusFixture>& fs) {
    json rows = json::array();
    for (const auto& f : fs) {
        json coeffs = json::array();
        for (int p = 0; p <= 10; ++p) {
            if (f.coeffs[p][0] == 0 && f.coeffs[p][1] == 0) continue;
            coeffs.push_back({p, f.coeffs[p][0], f.coeffs[p][1]});
        }
        rows.push_back({{"label", f.label}, {"coeffs", coeffs}, {"energy", f.energy}});
    }
    return rows;
}

inline std::vector<CorpusFixture> fixtures_from_json(const json& rows) {
    if (!rows.is_array()) throw std::invalid_argument("fixtures: expected a JSON array");
    std::vector<CorpusFixture> fs;
    for (const auto& row : rows) {
        CorpusFixture f{};
        f.label = row.at("label").get<std::string>();
        f.energy = row.at("energy").get<double>();
        for (const auto& c : row.at("coeffs")) {
            int p = c.at(0).get<int>();
            if (p < 0 || p > 10)
                throw std::invalid_argument("fixtures: coefficient power out of range in " +
                                            f.label);
            f.coeffs[static_cast<std::size_t>(p)][0] = c.at(1).get<long long>();
            f.coeffs[static_cast<std::size_t>(p)][1] = c.at(2).get<long long>();
        }
        fs.push_back(std::move(f));
    }
    return fs;
}

inline std::vector<CorpusFixture> load_fixtures(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixtures file: " + path);
    json rows;
    in >> rows;
    return fixtures_from_json(rows);
}

} // namespace sombor
