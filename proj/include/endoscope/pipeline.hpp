#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "endoscope/blocks.hpp"
#include "endoscope/exceptional.hpp"
#include "endoscope/groups.hpp"
#include "endoscope/regular.hpp"
#include "endoscope/unichar.hpp"

namespace endoscope {

using Json = nlohmann::ordered_json;

struct VerdictRow {
    Partition lambda;
    ScreenVerdict verdict;
};

struct SeriesElimination {
    std::string status;  // "eliminated" | "not-eliminated" | "small-case" | "n/a"
    std::string method;
    std::vector<std::string> shapes;
    std::string witness;  // set when coverage finds a containing subgroup
    std::string note;
};

struct BlocksSummary {
    int d = 0;
    int e = 0;  // inertial index, = d
    long long lsb = 0;
    std::optional<long long> lse;
    std::string lse_note;
    std::optional<long long> x_h;
};

struct ScreenReport {
    GroupSpec spec;
    long long ell = 0;
    SylowProfile sylow;
    std::string mode;  // "screen" | "cyclic-blocks" | "exceptional" | "not-covered"
    std::vector<VerdictRow> verdicts;
    std::vector<std::string> survivors;
    std::vector<KnownCase> matched_known_cases;
    std::vector<std::string> caveats;
    SeriesElimination series;
    std::optional<BlocksSummary> blocks;
};

namespace detail {

inline void match_known_cases(ScreenReport& report) {
    const GroupSpec& spec = report.spec;
    for (const auto& kc : known_cases()) {
        if (kc.family != spec.family) continue;
        if (kc.n != 0 && kc.n != spec.n) continue;
        if (kc.q != 0 && kc.q != spec.q) continue;
        if (kc.ell != 0 && kc.ell != report.ell) continue;
        if (kc.group == "U_3(q)" && !u3_congruence_holds(spec.q)) continue;
        if (kc.family == Family::E7 && kc.ell == 0) {
            // condition: ell | q^2 + 1
            if ((Bigint(spec.q) * spec.q + 1) % report.ell != 0) continue;
        }
        if ((kc.group == "E_6(q)" || kc.group == "2E_6(q)") &&
            (Bigint(spec.q) * spec.q + 1) % 5 != 0)
            continue;
        report.matched_known_cases.push_back(kc);
    }
}

// Non-unipotent series elimination for SL/SU via torus coverage: if no
// proper F-stable Levi of the dual group realizes all the listed torus
// types, the semisimple label must be central and only unipotent
// characters remain. Shapes whose regular elements are not guaranteed at
// this q are dropped before the coverage search.
inline SeriesElimination series_coverage(Family family, int n, long long q, long long ell, int d, bool case_a) {
    SeriesElimination series;
    series.method = "levi-coverage";
    std::vector<CycleType> shapes;
    auto add = [&](std::vector<int> parts) {
        std::vector<int> cleaned;
        for (int p : parts)
            if (p > 0) cleaned.push_back(p);
        if (cleaned.empty()) return;
        Partition shape(std::move(cleaned));
        if (shape.size() != n) return;
        if (!shape.has_part_divisible_by(d)) return;
        RegularityQuery query{shape, family, q, ell, d};
        bool usable = d > 1 ? has_l_singular_regular(query) : has_noncentral_l_regular(query, case_a);
        if (!usable) return;
        for (const auto& s : shapes)
            if (s == shape) return;
        shapes.push_back(shape);
    };
    if (d >= 2) {
        int r = n % d;
        add({n - d, d});
        if (r > 0) add({n - r, r});
        else add({n});
        add({n - d - 1, d, 1});
    } else if (n == 3) {
        // Too small for the coverage argument either way; settled from the
        // known character tables.
        series.status = "small-case";
        if (case_a) {
            series.note = family == Family::SL
                              ? "n = 3, ell | q-1: the only candidate degrees are q(q^2+q+1) = 3 (mod q-1), "
                                "forcing ell = 2 (known tables)"
                              : "n = 3, ell | q+1: the only candidate degrees are q(q^2-q+1) = -3 (mod q+1), "
                                "forcing ell = 2 (known tables)";
        } else {
            series.note = family == Family::SL
                              ? "n = ell = 3 with 3 || q-1: the three characters of degree Phi2*Phi3/3 are "
                                "reducible mod 3 (known decomposition matrices)"
                              : "n = ell = 3 with 3 || q+1: the three cuspidal characters of degree "
                                "(q-1)(q^2-q+1)/3 survive on the simple quotient; see known_cases";
        }
        return series;
    } else if (case_a) {
        add({n - 1, 1});
        add({n - 2, 2});
        if (n >= 6) add({n - 3, 3});
    } else if (n >= 7) {
        add({n - 2, 1, 1});
        add({n - 4, 3, 1});
        add({n - 4, 2, 2});
    } else {
        series.status = "small-case";
        series.note = "d = 1 with ell | n and n <= 6: settled by published character tables, not by coverage";
        return series;
    }
    for (const auto& s : shapes) series.shapes.push_back(s.to_string());
    if (shapes.empty()) {
        series.status = "not-eliminated";
        series.note = "no torus shape with guaranteed l-singular regular elements at this q";
        return series;
    }
    auto witness = fstable_levi_covers(n, shapes);
    if (!witness) {
        series.status = "eliminated";
        series.note = "no proper F-stable Levi subgroup of the dual group realizes all listed torus types; "
                      "only unipotent series remain";
    } else {
        series.status = "not-eliminated";
        series.witness = witness->to_string();
        series.note = "coverage witness exists; the series-level argument does not apply at this q";
    }
    return series;
}

}  // namespace detail

// Classification driver. Routes cyclic-Sylow inputs to the block counts,
// non-cyclic linear/unitary inputs to the unipotent screens plus the
// series-level coverage elimination, and exceptional families to the
// embedded rank data and known-case tables.
inline ScreenReport classify(const GroupSpec& spec, long long ell) {
    validate_spec(spec);
    if (ell < 3 || !is_prime(Bigint(ell))) throw std::invalid_argument("classify: ell must be an odd prime");
    if (spec.q % ell == 0) throw std::invalid_argument("classify: defining characteristic is out of scope");
    if (su_excluded_case(spec)) throw std::invalid_argument("classify: SU_3(2) is solvable and excluded");

    if (spec.family == Family::GL || spec.family == Family::GU)
        throw std::invalid_argument("classify: GL/GU enter through their SL/SU subgroups");

    ScreenReport report;
    report.spec = spec;
    report.ell = ell;
    report.sylow = sylow_profile(spec, ell);
    report.series.status = "n/a";
    if (report.sylow.v == 0) throw std::invalid_argument("classify: ell does not divide |G|");

    if (spec.family == Family::SL || spec.family == Family::SU) {
        if (spec.n % ell == 0)
            report.caveats.push_back("ell divides n: the Phi_d multiplicity is only an estimate of the ell-rank");
        if (report.sylow.cyclic) {
            report.mode = "cyclic-blocks";
            if (spec.family == Family::SU && spec.n == 2) {
                report.caveats.push_back("SU_2(q) is isomorphic to SL_2(q); query the linear family");
                detail::match_known_cases(report);
                return report;
            }
            BlocksSummary b;
            b.d = report.sylow.d;
            b.e = report.sylow.d;
            if (spec.family == Family::SL) {
                b.lsb = lsb_sl(spec.n, spec.q, ell);
                if (b.d > 1) {
                    b.x_h = x_h_order_sl(spec.n, spec.q, ell);
                    if (spec.n > 2) {
                        LseResult lse = lse_sl(spec.n, spec.q, ell);
                        b.lse = lse.count;
                        b.lse_note = lse.note;
                    }
                }
            } else {
                b.lsb = lsb_su(spec.n, spec.q, ell);
                b.x_h = x_h_order_su(spec.n, spec.q, ell);
                b.lse_note = "no unitary analogue of the linear lse counts is available";
            }
            report.blocks = b;
        } else {
            report.mode = "screen";
            const int d = report.sylow.d;
            const long long twisted = spec.family == Family::SL ? spec.q - 1 : spec.q + 1;
            bool case_a = false;
            if (d == 1) {
                int v_tw = l_valuation(Bigint(twisted), Bigint(ell));
                case_a = v_tw > l_valuation(center_order(spec), Bigint(ell));
            }
            for (const auto& lambda : partitions_of(spec.n)) {
                if (lambda == Partition{spec.n}) continue;  // trivial character
                VerdictRow row{lambda, screen_unipotent(spec.family, spec.n, spec.q, ell, lambda)};
                if (!row.verdict.eliminated) report.survivors.push_back(lambda.to_string());
                report.verdicts.push_back(std::move(row));
            }
            report.series = detail::series_coverage(spec.family, spec.n, spec.q, ell, d, case_a);
            if (report.series.status == "not-eliminated")
                report.caveats.push_back("non-unipotent series not eliminated by the coverage screen at this q");
        }
        detail::match_known_cases(report);
        return report;
    }

    // exceptional families
    report.mode = "exceptional";
    int rank = report.sylow.rank_est;
    if (spec.family == Family::G2 || spec.family == Family::D4t3 || spec.family == Family::F4t2) {
        report.mode = "not-covered";
        report.caveats.push_back("low-rank exceptional family: endotrivial classification handled elsewhere; "
                                 "order, Sylow and Loewy data remain available");
        detail::match_known_cases(report);
        return report;
    }
    if (rank > 2) {
        report.series.status = "eliminated";
        report.series.method = "rank-bound";
        report.series.note = "Sylow ell-rank above 2 admits no faithful simple endotrivial module";
    } else if (rank == 2) {
        report.series.method = "exceptional-tables";
        bool have_rows = false;
        for (const auto& row : exceptional_screen_data()) {
            if (row.family != spec.family || row.d != report.sylow.d) continue;
            have_rows = true;
            std::ostringstream os;
            os << "d = " << row.d << ": candidate centralizers";
            if (row.possible_centralizers.empty()) {
                os << " exhausted (no semisimple label survives the Zsigmondy screens)";
            } else {
                os << ":";
                for (const auto& c : row.possible_centralizers) os << " [" << c << "]";
            }
            report.series.shapes.push_back(os.str());
        }
        if (have_rows) {
            report.series.status = "screened";
            report.series.note = "remaining candidates are resolved case by case; survivors and open cases "
                                 "appear under known_cases";
        } else {
            report.series.status = "not-eliminated";
            report.series.note = "rank-2 configuration without embedded screen data";
        }
    } else {
        report.mode = "cyclic-blocks";
        report.caveats.push_back("cyclic Sylow in an exceptional family: see the known-case table for the "
                                 "covering-group data");
    }
    detail::match_known_cases(report);
    return report;
}

struct ZeroWitnessResult {
    std::optional<CycleType> witness;
    std::string caveat;  // set when no witness exists, naming the known exceptions
};

// Vanishing witness for nontrivial unipotent characters at ell-rank >= 3:
// a torus shape with guaranteed ell-singular regular elements on which the
// character value is zero. The known exceptions at ell = 5 (degree q^2 Phi_5
// for the linear family, q^2 Phi_10 for the unitary one, when 5 divides
// q -+ 1 exactly once) return no witness and a caveat naming them.
inline ZeroWitnessResult zero_witness_unipotent(const GroupSpec& spec, long long ell,
                                                const Partition& lambda) {
    if (spec.family != Family::SL && spec.family != Family::SU)
        throw std::invalid_argument("zero_witness_unipotent: family must be SL or SU");
    if (lambda == Partition{spec.n}) throw std::invalid_argument("zero_witness_unipotent: trivial character");
    SylowProfile profile = sylow_profile(spec, ell);
    if (profile.rank_est < 3) throw std::invalid_argument("zero_witness_unipotent: requires ell-rank at least 3");
    for (const auto& shape : partitions_of(spec.n)) {
        if (!shape.has_part_divisible_by(profile.d)) continue;
        RegularityQuery query{shape, spec.family, spec.q, ell, profile.d};
        if (!has_l_singular_regular(query)) continue;
        if (mn_value(lambda, shape) == 0) return {shape, ""};
    }
    ZeroWitnessResult result;
    std::ostringstream os;
    os << "no vanishing witness among the guaranteed torus classes";
    if (spec.n == 5 && ell == 5 && profile.d == 1) {
        os << "; this is the known exception with character degree q^2 "
           << (spec.family == Family::SL ? "Phi_5" : "Phi_10") << " when 5 divides "
           << (spec.family == Family::SL ? "q-1" : "q+1") << " exactly once";
    } else if (lambda == Partition::rectangle(1, spec.n)) {
        os << "; the Steinberg character vanishes on mixed ell-singular elements instead "
              "(product of an ell-element with a commuting unipotent)";
    }
    result.caveat = os.str();
    return result;
}

inline Json known_case_json(const KnownCase& kc, long long effective_ell = 0) {
    Json j;
    j["group"] = kc.group;
    j["ell"] = kc.ell ? kc.ell : effective_ell;
    j["dims"] = kc.dims;
    j["condition"] = kc.condition;
    j["status"] = known_status_name(kc.status);
    j["source"] = kc.source;
    return j;
}

inline Json report_json(const ScreenReport& report) {
    Json j;
    j["schema"] = "endoscope/1";
    Json spec;
    spec["family"] = family_name(report.spec.family);
    if (is_linear_unitary(report.spec.family)) spec["n"] = report.spec.n;
    spec["q"] = report.spec.q;
    spec["ell"] = report.ell;
    j["spec"] = spec;
    Json sylow;
    sylow["d"] = report.sylow.d;
    sylow["v"] = report.sylow.v;
    sylow["rank_est"] = report.sylow.rank_est;
    sylow["cyclic"] = report.sylow.cyclic;
    j["sylow"] = sylow;
    j["mode"] = report.mode;
    Json verdicts = Json::array();
    for (const auto& row : report.verdicts) {
        Json v;
        v["label"] = row.lambda.to_string();
        v["verdict"] = row.verdict.eliminated ? "eliminated" : "survives";
        if (row.verdict.eliminated) {
            v["reason"] = screen_reason_name(row.verdict.reason);
            v["witness"] = row.verdict.witness;
            if (!row.verdict.note.empty()) v["note"] = row.verdict.note;
        }
        verdicts.push_back(v);
    }
    j["verdicts"] = verdicts;
    j["survivors"] = report.survivors;
    Json kcs = Json::array();
    for (const auto& kc : report.matched_known_cases) kcs.push_back(known_case_json(kc, report.ell));
    j["known_cases"] = kcs;
    j["caveats"] = report.caveats;
    Json series;
    series["status"] = report.series.status;
    series["method"] = report.series.method;
    series["shapes"] = report.series.shapes;
    if (!report.series.witness.empty()) series["witness"] = report.series.witness;
    series["note"] = report.series.note;
    j["series"] = series;
    if (report.blocks) {
        Json b;
        b["d"] = report.blocks->d;
        b["e"] = report.blocks->e;
        b["lsb"] = report.blocks->lsb;
        if (report.blocks->lse)
            b["lse"] = *report.blocks->lse;
        else if (!report.blocks->lse_note.empty())
            b["lse"] = nullptr;
        if (!report.blocks->lse_note.empty()) b["lse_note"] = report.blocks->lse_note;
        if (report.blocks->x_h) b["x_h"] = *report.blocks->x_h;
        j["blocks"] = b;
    } else {
        j["blocks"] = nullptr;
    }
    return j;
}

inline std::string emit_report(const ScreenReport& report, const std::string& format) {
    if (format == "json") return report_json(report).dump(2) + "\n";
    if (format != "text") throw std::invalid_argument("emit_report: format must be json or text");
    std::ostringstream os;
    os << family_name(report.spec.family);
    if (is_linear_unitary(report.spec.family)) os << "_" << report.spec.n;
    os << "(" << report.spec.q << "), ell = " << report.ell << "\n";
    os << "  sylow: d = " << report.sylow.d << ", |G|_ell = ell^" << report.sylow.v
       << ", rank_est = " << report.sylow.rank_est << (report.sylow.cyclic ? " (cyclic)" : " (non-cyclic)")
       << "\n";
    os << "  mode: " << report.mode << "\n";
    if (!report.verdicts.empty()) {
        os << "  unipotent verdicts by reason:\n";
        std::vector<std::pair<std::string, std::vector<std::string>>> groups;
        for (const auto& row : report.verdicts) {
            std::string key = row.verdict.eliminated ? screen_reason_name(row.verdict.reason) : "SURVIVES";
            bool found = false;
            for (auto& g : groups)
                if (g.first == key) {
                    g.second.push_back(row.lambda.to_string());
                    found = true;
                }
            if (!found) groups.push_back({key, {row.lambda.to_string()}});
        }
        for (const auto& g : groups) {
            os << "    " << g.first << ":";
            for (const auto& label : g.second) os << " (" << label << ")";
            os << "\n";
        }
    }
    os << "  survivors:";
    if (report.survivors.empty()) os << " none";
    for (const auto& s : report.survivors) os << " (" << s << ")";
    os << "\n";
    if (report.series.status != "n/a")
        os << "  non-unipotent series: " << report.series.status
           << (report.series.witness.empty() ? "" : " [witness " + report.series.witness + "]") << "\n";
    if (report.blocks) {
        os << "  blocks: d = " << report.blocks->d << ", lsb = " << report.blocks->lsb;
        if (report.blocks->lse) os << ", lse = " << *report.blocks->lse;
        os << "\n";
    }
    for (const auto& kc : report.matched_known_cases)
        os << "  known case: " << kc.group << " (ell = " << (kc.ell ? kc.ell : report.ell) << "): " << kc.dims
           << " [" << known_status_name(kc.status) << "]\n";
    for (const auto& c : report.caveats) os << "  caveat: " << c << "\n";
    return os.str();
}

}  // namespace endoscope
