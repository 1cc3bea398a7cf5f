// Acceptance suite: runs every classification-level criterion end to end
// and prints one [PASS]/[FAIL] line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "endoscope/blocks.hpp"
#include "endoscope/endotest.hpp"
#include "endoscope/gridrun.hpp"
#include "endoscope/pipeline.hpp"
#include "oracles.hpp"

using namespace endoscope;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << detail << "\n";
    if (!ok) ++failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---- criterion 1: S_n character tables ----------------------------------

void criterion_1() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 10 && ok; ++n) {
        auto parts = partitions_of(n);
        auto table = character_table_sn(n);
        Bigint order = factorial(n);
        std::vector<Bigint> class_sizes(parts.size());
        for (size_t k = 0; k < parts.size(); ++k) class_sizes[k] = order / centralizer_order(parts[k]);
        // row orthogonality (exact integers, no tolerance)
        for (size_t i = 0; i < parts.size() && ok; ++i) {
            for (size_t j = i; j < parts.size() && ok; ++j) {
                Bigint sum = 0;
                for (size_t k = 0; k < parts.size(); ++k)
                    sum += Bigint(table[i][k]) * table[j][k] * class_sizes[k];
                if (sum != (i == j ? order : Bigint(0))) {
                    ok = false;
                    detail = "row orthogonality failed at n = " + std::to_string(n);
                }
            }
        }
        // column orthogonality
        for (size_t k = 0; k < parts.size() && ok; ++k) {
            for (size_t l = k; l < parts.size() && ok; ++l) {
                Bigint sum = 0;
                for (size_t i = 0; i < parts.size(); ++i) sum += Bigint(table[i][k]) * table[i][l];
                Bigint expected = (k == l) ? centralizer_order(parts[k]) : Bigint(0);
                if (sum != expected) {
                    ok = false;
                    detail = "column orthogonality failed at n = " + std::to_string(n);
                }
            }
        }
        // brute-force permutation oracle for n <= 6
        if (ok && n <= 6) {
            auto reference = oracle::character_table_oracle(n);
            for (size_t i = 0; i < parts.size() && ok; ++i)
                for (size_t j = 0; j < parts.size() && ok; ++j)
                    if (Bigint(table[i][j]) != reference[i][j]) {
                        ok = false;
                        detail = "oracle mismatch at n = " + std::to_string(n);
                    }
        }
    }
    double elapsed = seconds_since(start);
    if (ok && elapsed >= 60.0) {
        ok = false;
        detail = "runtime over 60 s";
    }
    std::ostringstream os;
    os << "S_n tables (n <= 10) orthogonal, match the permutation oracle for n <= 6 ("
       << elapsed << " s)";
    report(1, ok, ok ? os.str() : detail);
}

// ---- criterion 2: Andrews residues --------------------------------------

void criterion_2() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    // As stated: residue zero on 3 <= d <= 10, 2 <= h <= 5 and d = 2,
    // 3 <= h <= 6, with only (2,2) failing. This is run verbatim even
    // though the zero claim is false whenever d and h are both even:
    // at a primitive d-th root of unity the binomial is 1 (q-Lucas) while
    // x^{(h-1)d(d-1)/2} is (-1)^{(h-1)(d-1)}. The sign-corrected residue
    // is checked alongside and vanishes on the whole range.
    std::vector<std::pair<int, int>> failing;
    for (int d = 3; d <= 10; ++d)
        for (int h = 2; h <= 5; ++h)
            if (!andrews_residue(d, h).is_zero()) failing.emplace_back(d, h);
    for (int h = 3; h <= 6; ++h)
        if (!andrews_residue(2, h).is_zero()) failing.emplace_back(2, h);
    IntPolynomial edge = andrews_residue(2, 2);
    if (edge.is_zero()) {
        ok = false;
        detail = "(2,2) residue unexpectedly zero";
    }
    bool signed_ok = true;
    for (int d = 2; d <= 10; ++d)
        for (int h = 2; h <= 6; ++h)
            if (!andrews_residue_signed(d, h).is_zero()) signed_ok = false;
    if (!failing.empty()) {
        ok = false;
        std::ostringstream os;
        os << "residue nonzero at";
        for (auto [d, h] : failing) os << " (" << d << "," << h << ")";
        os << " - every failing pair has d and h even; the congruence there carries the sign "
           << "(-1)^{(h-1)(d-1)} = -1, and the sign-corrected residue "
           << (signed_ok ? "vanishes on the entire range" : "STILL FAILS") << ". "
           << "Downstream degree screens are unaffected (they use big-integer congruences at concrete q).";
        detail = os.str();
    }
    double elapsed = seconds_since(start);
    if (ok && elapsed >= 5.0) {
        ok = false;
        detail = "runtime over 5 s";
    }
    std::ostringstream os;
    os << "q-Babbage residues vanish on the stated range; (d,h) = (2,2) fails with residue "
       << edge.to_string("x") << " (" << elapsed << " s)";
    report(2, ok, ok ? os.str() : detail);
}

// ---- criterion 3: degree identities --------------------------------------

void criterion_3() {
    bool ok = true;
    std::string detail;
    for (int d = 2; d <= 6 && ok; ++d) {
        std::vector<int> parts{d + 1};
        parts.insert(parts.end(), static_cast<size_t>(d - 1), 1);
        IntPolynomial lhs = generic_degree({Partition(parts), Family::SL});
        IntPolynomial rhs = IntPolynomial::monomial(d * (d - 1) / 2) * gaussian_binomial(2 * d - 1, d - 1);
        if (lhs != rhs) {
            ok = false;
            detail = "hook-family identity failed at d = " + std::to_string(d);
        }
    }
    for (int n = 2; n <= 10 && ok; ++n)
        if (generic_degree({Partition::rectangle(1, n), Family::SL}) !=
            IntPolynomial::monomial(n * (n - 1) / 2)) {
            ok = false;
            detail = "Steinberg degree failed at n = " + std::to_string(n);
        }
    report(3, ok,
           ok ? "generic_degree((d+1,1^{d-1})) = q^{d(d-1)/2} [2d-1,d-1]_q for d <= 6; "
                "generic_degree((1^n)) = q^{n(n-1)/2} for n <= 10"
              : detail);
}

// ---- criterion 4: the +-q^d special value ---------------------------------

void criterion_4() {
    bool ok = true;
    std::string detail;
    int checked = 0;
    for (int d = 2; d <= 6 && ok; ++d) {
        for (int r = 1; r <= d - 1 && ok; ++r) {
            for (long long q : {2, 3, 4, 5}) {
                try {
                    ValSpecialResult v = valspecial(d, r, q);
                    if (v.magnitude != big_pow(Bigint(q), static_cast<unsigned>(d))) {
                        ok = false;
                        detail = "wrong magnitude at d=" + std::to_string(d) + " r=" + std::to_string(r);
                        break;
                    }
                    ++checked;
                } catch (const std::exception& e) {
                    ok = false;
                    detail = std::string("assertion failure: ") + e.what();
                    break;
                }
            }
        }
    }
    std::ostringstream os;
    os << "|valspecial(d,r,q)| = q^d with all MN sign assertions, " << checked << " cases";
    report(4, ok, ok ? os.str() : detail);
}

// ---- criterion 5: the classification grid --------------------------------

GridOutcome grid_outcome_cache;
bool grid_ran = false;

void criterion_5() {
    auto start = std::chrono::steady_clock::now();
    static const std::set<std::string> closed_enum = {
        "vanishing",       "congruence",     "valspecial",
        "steinberg-value", "cited:hecke-reducible", "cited:support-vanishing", "cited:known-tables"};
    bool ok = true;
    std::string detail;
    try {
        grid_outcome_cache = run_classification_grid();
        grid_ran = true;
    } catch (const std::exception& e) {
        report(5, false, std::string("grid run failed: ") + e.what());
        return;
    }
    const GridOutcome& outcome = grid_outcome_cache;
    if (outcome.survivor_points != 0) {
        ok = false;
        detail = "unipotent survivors at " + std::to_string(outcome.survivor_points) + " grid points";
        for (const auto& s : outcome.survivor_details) std::cout << "       " << s << "\n";
    }
    for (const auto& [reason, count] : outcome.reasons) {
        (void)count;
        if (ok && reason != "SURVIVES" && !closed_enum.count(reason)) {
            ok = false;
            detail = "reason outside the closed enumeration: " + reason;
        }
    }
    if (ok && !outcome.known_case_mismatches.empty()) {
        ok = false;
        detail = "unitary known-case mismatches";
        for (const auto& s : outcome.known_case_mismatches) std::cout << "       " << s << "\n";
    }
    if (ok && u3_survivor_dimension(5) != 28) {
        ok = false;
        detail = "U_3(5) survivor dimension != 28";
    }
    double elapsed = seconds_since(start);
    if (ok && elapsed >= 600.0) {
        ok = false;
        detail = "runtime over 10 min";
    }
    std::ostringstream os;
    os << outcome.points << " grid points, zero unipotent survivors, every elimination tagged from the "
       << "closed enumeration; unitary survivors exactly the U_3(q) rows (" << elapsed << " s)";
    report(5, ok, ok ? os.str() : detail);
}

// ---- criterion 6: coverage triples and the permutation oracle -------------

void criterion_6() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    // (a) realizability agrees with explicit permutation subgroups, n <= 8
    for (int n = 2; n <= 8 && ok; ++n) {
        auto shapes = partitions_of(n);
        for (int n1 = n - 1; n1 >= (n + 1) / 2 && ok; --n1) {
            int n2 = n - n1;
            if (n2 < 1) continue;
            auto types = oracle::cycle_types_of(oracle::young_subgroup_perms(n1, n2));
            for (const auto& s : shapes)
                if (young_realizable({s}, n1, n2) != (types.count(s) > 0)) {
                    ok = false;
                    detail = "Young oracle mismatch at n = " + std::to_string(n);
                }
        }
        for (int a = 2; a * 2 <= n && ok; ++a) {
            if (n % a != 0) continue;
            int b = n / a;
            if (b < 2) continue;
            auto types = oracle::cycle_types_of(oracle::wreath_subgroup_perms(a, b));
            for (const auto& s : shapes)
                if (wreath_realizable(s, a, b) != (types.count(s) > 0)) {
                    ok = false;
                    detail = "wreath oracle mismatch at (a,b) = (" + std::to_string(a) + "," +
                             std::to_string(b) + ")";
                }
        }
    }
    // (b) the coverage step of the series elimination: no proper F-stable
    // Levi realizes the torus triple {(n-d,d), (n-r,r), (n-d-1,d,1)} at any
    // grid point with d >= 2. (The naive subgroup search is the wrong test
    // here: the abstract wreath product mixes twisted and untwisted types
    // that no single F-form realizes together; see the regular module tests.)
    size_t triples = 0, naive_witnesses = 0;
    if (ok) {
        for (const auto& pt : classification_grid()) {
            GroupSpec spec{pt.family, pt.n, pt.q};
            SylowProfile profile = sylow_profile(spec, pt.ell);
            int d = profile.d;
            if (d < 2) continue;
            int r = pt.n % d;
            std::vector<CycleType> triple;
            auto add = [&](std::vector<int> parts) {
                std::vector<int> cleaned;
                for (int p : parts)
                    if (p > 0) cleaned.push_back(p);
                Partition shape(std::move(cleaned));
                for (const auto& s : triple)
                    if (s == shape) return;
                triple.push_back(shape);
            };
            add({pt.n - d, d});
            if (r > 0) add({pt.n - r, r});
            else add({pt.n});
            add({pt.n - d - 1, d, 1});
            ++triples;
            if (fstable_levi_covers(pt.n, triple).has_value()) {
                ok = false;
                detail = "Levi cover exists for the triple at n = " + std::to_string(pt.n) +
                         ", d = " + std::to_string(d);
                break;
            }
            if (proper_subgroup_covers(pt.n, triple).has_value()) ++naive_witnesses;
        }
    }
    double elapsed = seconds_since(start);
    std::ostringstream os;
    os << "subgroup realizability matches the explicit-permutation oracle (n <= 8); no F-stable Levi "
       << "covers any of the " << triples << " grid triples (naive wreath witnesses at " << naive_witnesses
       << " of them, as expected of the abstract subgroup test) (" << elapsed << " s)";
    report(6, ok, ok ? os.str() : detail);
}

// ---- criterion 7: block counts -------------------------------------------

void criterion_7() {
    bool ok = true;
    std::string detail;
    try {
        if (lsb_sl(3, 4, 7) != 3) { ok = false; detail = "lsb_sl(3,4,7) != 3"; }
        if (ok && lsb_sl(5, 2, 7) != 2) { ok = false; detail = "lsb_sl(5,2,7) != 2"; }
        if (ok && lsb_su(6, 2, 5) != 6) { ok = false; detail = "lsb_su(6,2,5) != 6"; }
        if (ok) {
            LseResult lse = lse_sl(3, 2, 7);
            if (!lse.count || *lse.count != 1) { ok = false; detail = "lse_sl(3,2,7) != 1"; }
        }
        if (ok && Bigint(lsb_sl(3, 4, 7)) * 3 != x_h_order_sl(3, 4, 7)) {
            ok = false;
            detail = "product identity failed for SL_3(4), ell = 7";
        }
        if (ok && Bigint(lsb_su(4, 3, 5)) * 4 != x_h_order_su(4, 3, 5)) {
            ok = false;
            detail = "product identity failed for SU_4(3), ell = 5";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(7, ok,
           ok ? "lsb_sl(3,4,7) = 3, lsb_sl(5,2,7) = 2, lsb_su(6,2,5) = 6, lse_sl(3,2,7) = 1, and "
                "lsb * d = |X(H)| in the n = d cases"
              : detail);
}

// ---- criterion 8: trivial-source fixtures --------------------------------

void criterion_8() {
    bool ok = true;
    std::string detail;
    std::string skipped;
    try {
        CharacterTableData s3 = ingest_table_file(std::string(ENDOSCOPE_FIXTURE_DIR) + "/s3.json");
        if (torchar_check(s3, "1b", 3).verdict != TorcharVerdict::Endotrivial) {
            ok = false;
            detail = "sign character of S_3 not endotrivial at ell = 3";
        }
        if (ok && landrock_scott_check(s3, "2a", 3).empty()) {
            ok = false;
            detail = "2-dimensional character of S_3 passed the Landrock-Scott check";
        }
        const char* env = std::getenv("ENDOSCOPE_U35_TABLE");
        std::string u35_path = env ? env : std::string(ENDOSCOPE_FIXTURE_DIR) + "/external/u3_5.json";
        std::ifstream probe(u35_path);
        if (!probe) {
            skipped = "; external U_3(5) table absent: skipped";
        } else if (ok) {
            CharacterTableData u35 = ingest_table_file(u35_path);
            int found = 0;
            for (const auto& chi : u35.characters) {
                if (chi.degree != 28) continue;
                ++found;
                if (torchar_check(u35, chi.name, 3).verdict != TorcharVerdict::Endotrivial) {
                    ok = false;
                    detail = "degree-28 character " + chi.name + " failed the trivial-source criterion";
                }
            }
            if (ok && found == 0) {
                ok = false;
                detail = "no degree-28 characters in the ingested U_3(5) table";
            }
            if (ok) skipped = "; external U_3(5) degree-28 characters endotrivial at ell = 3";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(8, ok,
           ok ? "S_3 fixture: sign endotrivial at ell = 3, 2-dimensional character rejected" + skipped
              : detail);
}

// ---- criterion 9: exceptional data ---------------------------------------

void criterion_9() {
    bool ok = true;
    std::string detail;
    for (const auto& row : exceptional_screen_data()) {
        GroupOrder order = order_formula({row.family, 0, 2});
        for (const auto& [d, m] : row.torus_order_phi)
            if (order.phi_multiplicity(d) < m) {
                ok = false;
                detail = "torus order does not divide the " + family_name(row.family) + " order";
            }
        for (const auto& [d, m] : row.t1_order_phi)
            if (order.phi_multiplicity(d) < m) {
                ok = false;
                detail = "T_1 order does not divide the " + family_name(row.family) + " order";
            }
    }
    size_t checked = 0;
    if (ok) {
        for (const auto& [family, rank2] : exceptional_rank2_d()) {
            for (long long q : {2, 3, 4, 5}) {
                for (long long ell = 3; ell <= 100; ell += 2) {
                    if (!is_prime(Bigint(ell)) || q % ell == 0) continue;
                    SylowProfile profile = sylow_profile({family, 0, q}, ell);
                    if (profile.v == 0) continue;
                    bool listed =
                        std::find(rank2.begin(), rank2.end(), profile.d) != rank2.end();
                    if ((profile.rank_est == 2) != listed) {
                        ok = false;
                        std::ostringstream os;
                        os << "rank-2 list mismatch: " << family_name(family) << ", q = " << q
                           << ", ell = " << ell << ", d = " << profile.d << ", rank " << profile.rank_est;
                        detail = os.str();
                    }
                    ++checked;
                }
            }
        }
    }
    std::ostringstream os;
    os << "embedded torus orders divide the family orders; Sylow profiles reproduce the rank-2 d-lists "
       << "over q in {2,3,4,5}, ell <= 100 (" << checked << " profiles)";
    report(9, ok, ok ? os.str() : detail);
}

// ---- criterion 10: determinism -------------------------------------------

void criterion_10() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    try {
        const std::string& first = grid_ran ? grid_outcome_cache.serialized : run_classification_grid().serialized;
        GridOutcome serial = run_classification_grid(1);
        GridOutcome parallel = run_classification_grid(2);
        if (serial.serialized != first) {
            ok = false;
            detail = "repeat serial run differs";
        }
        if (ok && parallel.serialized != first) {
            ok = false;
            detail = "parallel run differs";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    double elapsed = seconds_since(start);
    std::ostringstream os;
    os << "full grid serialized twice and under a 2-thread pool: byte-identical (" << elapsed << " s)";
    report(10, ok, ok ? os.str() : detail);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
