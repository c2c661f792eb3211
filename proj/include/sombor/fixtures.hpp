#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "poly.hpp"

namespace sombor {

// Reference data for the 21 cubic graphs of order 10: the characteristic
// polynomial coefficient table and the 3-decimal energy table, transcribed
// term by term. These fixtures are claims under test, not ground truth: the
// matching code computes everything from scratch and reports deltas (at
// least one constant term below is a known misprint, see match_corpus).
//
// coeffs[p] = (rational part, sqrt2 multiple) of the lambda^p coefficient.
struct CorpusFixture {
    std::string label;
    std::array<std::array<std::int64_t, 2>, 11> coeffs;
    double energy;
};

inline const std::vector<CorpusFixture>& corpus_fixtures() {
    static const std::vector<CorpusFixture> table = {
        {"G_1", {{{0, 0}, {0, 15116544}, {4618944, 0}, {0, -1819584}, {-589032, 0}, {0, 62208}, {23004, 0}, {0, -432}, {-270, 0}, {0, 0}, {1, 0}}}, 64.161},
        {"G_2", {{{0, 0}, {0, 7558272}, {6718464, 0}, {0, -839808}, {-705672, 0}, {0, 27216}, {23004, 0}, {0, -216}, {-270, 0}, {0, 0}, {1, 0}}}, 63.043},
        {"G_3", {{{5668704, 0}, {0, 8188128}, {3149280, 0}, {0, -1329696}, {-559872, 0}, {0, 46656}, {22356, 0}, {0, -324}, {-270, 0}, {0, 0}, {1, 0}}}, 62.880},
        {"G_4", {{{0, 0}, {0, 0}, {-1259712, 0}, {0, -979776}, {-355752, 0}, {0, 34992}, {20412, 0}, {0, -216}, {-270, 0}, {0, 0}, {1, 0}}}, 57.336},
        {"G_5", {{{0, 0}, {0, 0}, {-3779136, 0}, {0, -2309472}, {-542376, 0}, {0, 66096}, {23004, 0}, {0, -432}, {-270, 0}, {0, 0}, {1, 0}}}, 60.638},
        {"G_6", {{{-17006112, 0}, {0, 0}, {5773680, 0}, {0, 0}, {-612360, 0}, {0, 0}, {21060, 0}, {0, 0}, {-270, 0}, {0, 0}, {1, 0}}}, 63.403},
        {"G_7", {{{-17006112, 0}, {0, -3779136}, {6193584, 0}, {0, 629856}, {-682344, 0}, {0, -11664}, {22356, 0}, {0, 0}, {-270, 0}, {0, 0}, {1, 0}}}, 63.969},
        {"G_8", {{{0, 0}, {0, -15116544}, {7978176, 0}, {0, 1119744}, {-775656, 0}, {0, -15552}, {23004, 0}, {0, 0}, {-270, 0}, {0, 0}, {1, 0}}}, 64.161},
        {"G_9", {{{-22674816, 0}, {0, -2519424}, {9552816, 0}, {0, -34992}, {-769824, 0}, {0, 7776}, {23004, 0}, {0, -108}, {-270, 0}, {0, 0}, {1, 0}}}, 64.981},
        {"G_10", {{{5668704, 0}, {0, 6298560}, {3674160, 0}, {0, -349920}, {-495720, 0}, {0, -3888}, {21060, 0}, {0, 0}, {-270, 0}, {0, 0}, {1, 0}}}, 61.399},
        {"G_11", {{{5668704, 0}, {0, 6298560}, {2414448, 0}, {0, -1119744}, {-612360, 0}, {0, 31104}, {22356, 0}, {0, -216}, {-270, 0}, {0, 0}, {1, 0}}}, 62.375},
        {"G_12", {{{-90699264, 0}, {0, 5038848}, {15116544, 0}, {0, -629856}, {-915624, 0}, {0, 23328}, {24300, 0}, {0, -216}, {-270, 0}, {0, 0}, {1, 0}}}, 67.882},
        {"G_13", {{{0, 0}, {0, 3779136}, {3674160, 0}, {0, -384912}, {-559872, 0}, {0, 11664}, {21708, 0}, {0, -108}, {-270, 0}, {0, 0}, {1, 0}}}, 61.000},
        {"G_14", {{{22674816, 0}, {0, 21415104}, {7873200, 0}, {0, -1994544}, {-839808, 0}, {0, 46656}, {24300, 0}, {0, -324}, {-270, 0}, {0, 0}, {1, 0}}}, 65.835},
        {"G_15", {{{5668704, 0}, {0, 8188128}, {5668704, 0}, {0, -419904}, {-676512, 0}, {0, 11664}, {22356, 0}, {0, -108}, {-270, 0}, {0, 0}, {1, 0}}}, 62.767},
        {"G_16", {{{0, 0}, {0, 0}, {3779136, 0}, {0, 0}, {-495720, 0}, {0, 0}, {20412, 0}, {0, 0}, {-270, 0}, {0, 0}, {1, 0}}}, 59.396},
        {"G_17", {{{9069926, 0}, {0, -50388480}, {12597120, 0}, {0, 2099520}, {-962280, 0}, {0, -23328}, {24300, 0}, {0, 0}, {-270, 0}, {0, 0}, {1, 0}}}, 67.882},
        {"G_18", {{{0, 0}, {0, 0}, {-1259712, 0}, {0, -979776}, {-215784, 0}, {0, 62208}, {20412, 0}, {0, -432}, {-270, 0}, {0, 0}, {1, 0}}}, 57.517},
        {"G_19", {{{-39680928, 0}, {0, 5038848}, {10392624, 0}, {0, -909792}, {-822312, 0}, {0, 27216}, {23652, 0}, {0, -216}, {-270, 0}, {0, 0}, {1, 0}}}, 66.096},
        {"G_20", {{{0, 0}, {0, 0}, {-3779136, 0}, {0, -1469664}, {-75816, 0}, {0, 93312}, {20412, 0}, {0, -648}, {-270, 0}, {0, 0}, {1, 0}}}, 59.396},
        {"G_21", {{{0, 0}, {0, 0}, {0, 0}, {0, 0}, {157464, 0}, {0, 69984}, {16524, 0}, {0, -432}, {-270, 0}, {0, 0}, {1, 0}}}, 50.911},
    };
    return table;
}

inline ExactPoly fixture_poly(const CorpusFixture& f) {
    std::vector<QSqrt2> c;
    c.reserve(11);
    for (const auto& [a, b] : f.coeffs)
        c.emplace_back(mpq_class(static_cast<long>(a)), mpq_class(static_cast<long>(b)));
    return ExactPoly(std::move(c));
}

} // namespace sombor
