#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "endoscope/groups.hpp"

namespace endoscope {

// One row of the embedded exceptional-group screening data. Rows with
// e_regular = 0 describe maximal Sylow d-tori (the torus order is the full
// Phi_d^2 part); rows with e_regular > 0 describe the rank-2 regular-d
// configurations together with the auxiliary torus T_1 that carries the
// regular l-singular elements used by the screens.
struct ExceptionalTorusDatum {
    Family family;
    int d;
    std::string centralizer;                         // C_{G^*}(S)' for a Phi_d-torus S
    std::vector<int> required_phi;                   // Phi_e whose Zsigmondy primes must divide |C(s)|
    std::vector<std::string> possible_centralizers;  // surviving C_{G^*}(s) candidates
    std::map<int, int> torus_order_phi;              // |T| as Phi-multiset
    int e_regular = 0;                               // e column (rank-2 rows only)
    std::map<int, int> t1_order_phi;                 // |T_1| (rank-2 rows only)
};

inline const std::vector<ExceptionalTorusDatum>& exceptional_screen_data() {
    static const std::vector<ExceptionalTorusDatum> rows = {
        // Maximal Sylow tori
        {Family::F4, 3, "A_2(q)", {1, 2}, {"C", "A_2(q)^2"}, {{3, 2}}, 0, {}},
        {Family::F4, 4, "B_2(q)", {1, 2}, {"C", "B_4(q)"}, {{4, 2}}, 0, {}},
        {Family::F4, 6, "2A_2(q)", {1, 2}, {"C", "2A_2(q)^2"}, {{6, 2}}, 0, {}},
        {Family::E8, 5, "A_4(q)", {3}, {"C", "A_4(q)^2"}, {{5, 2}}, 0, {}},
        {Family::E8, 8, "A_1(q^4), 2D_4(q)", {3, 4}, {"D_8(q)"}, {{8, 2}}, 0, {}},
        {Family::E8, 10, "2A_4(q)", {4, 6}, {"C", "2A_4(q)^2"}, {{10, 2}}, 0, {}},
        {Family::E8, 12, "3D_4(q), 2A_2(q^2)", {3, 4}, {}, {{12, 2}}, 0, {}},
        // Rank-2 cases for regular d
        {Family::E6, 4, "T", {}, {"2A_3(q) Phi1 Phi4", "D_5(q) Phi1"},
         {{1, 2}, {4, 2}}, 6, {{1, 1}, {2, 1}, {4, 1}, {6, 1}}},
        {Family::E6, 6, "T", {}, {"2A_2(q) A_2(q^2)"},
         {{3, 1}, {6, 2}}, 4, {{1, 1}, {2, 1}, {4, 1}, {6, 1}}},
        {Family::E6t2, 4, "T", {}, {"A_3(q) Phi2 Phi4", "2D_5(q) Phi2"},
         {{2, 2}, {4, 2}}, 3, {{1, 1}, {2, 1}, {3, 1}, {4, 1}}},
        {Family::E6t2, 3, "T", {}, {"A_2(q) A_2(q^2)"},
         {{3, 2}, {6, 1}}, 4, {{1, 1}, {2, 1}, {3, 1}, {4, 1}}},
    };
    return rows;
}

inline std::vector<ExceptionalTorusDatum> exceptional_table(Family family, int d) {
    std::vector<ExceptionalTorusDatum> out;
    for (const auto& row : exceptional_screen_data())
        if (row.family == family && row.d == d) out.push_back(row);
    if (out.empty()) throw std::out_of_range("exceptional_table: no data for this (family, d)");
    return out;
}

// The rank-2 d values for each exceptional family covered by the screens,
// i.e. the d with Phi_d-multiplicity exactly 2 in the order polynomial.
inline const std::map<Family, std::vector<int>>& exceptional_rank2_d() {
    static const std::map<Family, std::vector<int>> table = {
        {Family::F4, {3, 4, 6}}, {Family::E6, {4, 6}},   {Family::E6t2, {3, 4}},
        {Family::E7, {4}},       {Family::E8, {5, 8, 10, 12}},
    };
    return table;
}

enum class KnownStatus { Endotrivial, Open, Conditional };

inline const char* known_status_name(KnownStatus s) {
    switch (s) {
        case KnownStatus::Endotrivial: return "endotrivial";
        case KnownStatus::Open: return "open";
        case KnownStatus::Conditional: return "conditional";
    }
    return "?";
}

// Known survivors and open configurations, embedded verbatim from the
// classification tables. q = 0 entries are q-parametric; the condition
// string carries the congruence constraint on q when there is one.
struct KnownCase {
    std::string group;
    Family family;
    int n;        // 0 when not applicable
    long long q;  // 0 = parametric in q
    long long ell;
    std::string dims;  // dimensions or character labels
    std::string condition;
    KnownStatus status;
    std::string source;
};

inline const std::vector<KnownCase>& known_cases() {
    static const std::vector<KnownCase> rows = {
        // Unitary d=1 survivors: the cuspidal characters of U_3(q).
        {"U_3(q)", Family::SU, 3, 0, 3, "(q-1)(q^2-q+1)/3 (three characters)",
         "q = 2,5 (mod 9); modules live on the simple quotient U_3(q), not on SU_3(q)",
         KnownStatus::Endotrivial, "unitary d=1 classification"},
        // Exceptional covering groups of classical groups, all at ell = 3.
        {"2.L_3(4)", Family::SL, 3, 4, 3, "10, 10", "faithful; 3-rank 2", KnownStatus::Endotrivial,
         "exceptional covers of classical groups"},
        {"4_1.L_3(4)", Family::SL, 3, 4, 3, "8, 8, 8, 8", "faithful; 3-rank 2; not trivial source",
         KnownStatus::Endotrivial, "exceptional covers of classical groups"},
        {"4_2.L_3(4)", Family::SL, 3, 4, 3, "28, 28, 28, 28", "faithful; 3-rank 2", KnownStatus::Endotrivial,
         "exceptional covers of classical groups"},
        // Exceptional groups, non-cyclic Sylow.
        {"F_4(2)", Family::F4, 0, 2, 5, "F_4^II[1] (cuspidal unipotent)", "", KnownStatus::Endotrivial,
         "exceptional unipotent survivor"},
        {"2.F_4(2)", Family::F4, 0, 2, 5, "12376, 12376", "faithful; Sylow 5^2", KnownStatus::Endotrivial,
         "exceptional covers, non-cyclic Sylow"},
        {"2.F_4(2)", Family::F4, 0, 2, 7, "22100", "faithful; Sylow 7^2", KnownStatus::Endotrivial,
         "exceptional covers, non-cyclic Sylow"},
        {"2.2E_6(2)", Family::E6t2, 0, 2, 5, "17736576", "possibly reducible, or not endotrivial",
         KnownStatus::Conditional, "exceptional covers, non-cyclic Sylow"},
        // Open rank-2 configurations in exceptional groups.
        {"E_6(q)", Family::E6, 0, 0, 5,
         "semisimple character, series of s with C(s) = 2A_3(q) Phi1 Phi4",
         "5 | (q^2+1); reducible mod 5 when s is a 5-element; open for 5'-elements s (E_6(2) excluded)",
         KnownStatus::Open, "rank-2 exceptional screens"},
        {"2E_6(q)", Family::E6t2, 0, 0, 5,
         "semisimple character, series of s with C(s) = A_3(q) Phi2 Phi4",
         "5 | (q^2+1); reducible mod 5 when s is a 5-element and gcd(q,6)=1; open otherwise (2E_6(2) excluded)",
         KnownStatus::Open, "rank-2 exceptional screens"},
        {"E_7(q)", Family::E7, 0, 0, 0, "unresolved Lusztig series", "ell | (q^2+1); no screen applies",
         KnownStatus::Open, "rank-2 exceptional screens"},
        // Exceptional covers with cyclic Sylow subgroups.
        {"2.F_4(2)", Family::F4, 0, 2, 13, "2380, 2380", "cyclic Sylow; |X(H)| = 24, |X(H)|/e = 2",
         KnownStatus::Endotrivial, "exceptional covers, cyclic Sylow"},
        {"2.F_4(2)", Family::F4, 0, 2, 17, "52, 1146600", "cyclic Sylow; |X(H)| = 16, |X(H)|/e = 2",
         KnownStatus::Endotrivial, "exceptional covers, cyclic Sylow"},
        {"2.2E_6(2)", Family::E6t2, 0, 2, 11, "2432; 537472", "cyclic Sylow; |X(H)| = 20, |X(H)|/e = 4",
         KnownStatus::Endotrivial, "exceptional covers, cyclic Sylow"},
        {"6.2E_6(2)", Family::E6t2, 0, 2, 11,
         "90419328, 11145019392 (x2); 2606204160, 5877256320 (x2)",
         "cyclic Sylow; |X(H)| = 60, |X(H)|/e = 12", KnownStatus::Endotrivial,
         "exceptional covers, cyclic Sylow"},
        {"2.2E_6(2)", Family::E6t2, 0, 2, 13, "2432, 45696", "cyclic Sylow; |X(H)| = 24, |X(H)|/e = 2",
         KnownStatus::Endotrivial, "exceptional covers, cyclic Sylow"},
        {"6.2E_6(2)", Family::E6t2, 0, 2, 13, "22619520, 6962288256 (x2)",
         "cyclic Sylow; |X(H)| = 72, |X(H)|/e = 6", KnownStatus::Endotrivial,
         "exceptional covers, cyclic Sylow"},
        {"2.2E_6(2)", Family::E6t2, 0, 2, 17, "2432, 1521172224", "cyclic Sylow; |X(H)| = 16, |X(H)|/e = 2",
         KnownStatus::Endotrivial, "exceptional covers, cyclic Sylow"},
        {"6.2E_6(2)", Family::E6t2, 0, 2, 17, "494208, 1521172224 (x2)",
         "cyclic Sylow; |X(H)| = 48, |X(H)|/e = 6", KnownStatus::Endotrivial,
         "exceptional covers, cyclic Sylow"},
        {"2.2E_6(2)", Family::E6t2, 0, 2, 19, "45696, 22583328768", "cyclic Sylow; |X(H)| = 18, |X(H)|/e = 2",
         KnownStatus::Endotrivial, "exceptional covers, cyclic Sylow"},
        {"6.2E_6(2)", Family::E6t2, 0, 2, 19, "494208, 33949238400 (x2)",
         "cyclic Sylow; |X(H)| = 54, |X(H)|/e = 6", KnownStatus::Endotrivial,
         "exceptional covers, cyclic Sylow"},
    };
    return rows;
}

// Dimension of the U_3(q) survivors; stays exact for every prime power q.
inline Bigint u3_survivor_dimension(long long q) {
    return Bigint(q - 1) * (Bigint(q) * q - q + 1) / 3;
}

inline bool u3_congruence_holds(long long q) {
    long long r = q % 9;
    return r == 2 || r == 5;
}

}  // namespace endoscope
