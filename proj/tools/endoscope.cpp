#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "endoscope/endotest.hpp"
#include "endoscope/gridrun.hpp"
#include "endoscope/pipeline.hpp"

namespace {

using namespace endoscope;

GroupSpec make_spec(const std::string& family, int n, long long q) {
    auto f = parse_family(family);
    if (!f) throw std::invalid_argument("unknown family: " + family);
    GroupSpec spec{*f, n, q};
    validate_spec(spec);
    return spec;
}

int run_verify(const std::string& suite, int nmax, int dmax, int hmax, int jobs) {
    if (suite == "sn-orthogonality") {
        for (int n = 1; n <= nmax; ++n) {
            auto parts = partitions_of(n);
            auto table = character_table_sn(n, nmax);
            Bigint order = factorial(n);
            bool rows = true, cols = true;
            for (size_t i = 0; i < parts.size() && rows; ++i) {
                for (size_t j = 0; j < parts.size() && rows; ++j) {
                    Bigint sum = 0;  // sum over classes of chi_i chi_j |class|
                    for (size_t k = 0; k < parts.size(); ++k)
                        sum += Bigint(table[i][k]) * table[j][k] * (order / centralizer_order(parts[k]));
                    if (sum != (i == j ? order : Bigint(0))) rows = false;
                }
            }
            for (size_t k = 0; k < parts.size() && cols; ++k) {
                for (size_t l = 0; l < parts.size() && cols; ++l) {
                    Bigint sum = 0;
                    for (size_t i = 0; i < parts.size(); ++i) sum += Bigint(table[i][k]) * table[i][l];
                    if (sum != (k == l ? centralizer_order(parts[k]) : Bigint(0))) cols = false;
                }
            }
            std::cout << "n = " << n << ": row orthogonality " << (rows ? "exact" : "FAILED")
                      << ", column orthogonality " << (cols ? "exact" : "FAILED") << "\n";
            if (!rows || !cols) return 1;
        }
        return 0;
    }
    if (suite == "andrews") {
        for (int d = 2; d <= dmax; ++d) {
            for (int h = 2; h <= hmax; ++h) {
                IntPolynomial residue = andrews_residue(d, h);
                std::cout << "d = " << d << ", h = " << h << ": residue "
                          << (residue.is_zero() ? "0" : residue.to_string("x"));
                if (!residue.is_zero())
                    std::cout << "  [sign-corrected residue "
                              << (andrews_residue_signed(d, h).is_zero() ? "0" : "NONZERO") << "]";
                std::cout << "\n";
            }
        }
        std::cout << "The unsigned congruence fails exactly when d and h are both even ((2,2) is the\n"
                     "smallest case): at a primitive d-th root of unity the binomial is 1 while the\n"
                     "monomial is (-1)^{(h-1)(d-1)}. With that sign the congruence holds throughout.\n";
        return 0;
    }
    if (suite == "degrees") {
        for (int d = 2; d <= 6; ++d) {
            std::vector<int> parts{d + 1};
            parts.insert(parts.end(), static_cast<size_t>(d - 1), 1);
            IntPolynomial lhs = generic_degree({Partition(parts), Family::SL});
            IntPolynomial rhs = IntPolynomial::monomial(d * (d - 1) / 2) * gaussian_binomial(2 * d - 1, d - 1);
            std::cout << "(d+1,1^{d-1}), d = " << d << ": " << (lhs == rhs ? "matches" : "MISMATCH") << " q^"
                      << d * (d - 1) / 2 << "*[2d-1, d-1]_q\n";
            if (lhs != rhs) return 1;
        }
        for (int n = 2; n <= 10; ++n) {
            IntPolynomial st = generic_degree({Partition::rectangle(1, n), Family::SL});
            bool ok = st == IntPolynomial::monomial(n * (n - 1) / 2);
            std::cout << "(1^" << n << "): degree " << (ok ? "= " : "!= ") << "q^" << n * (n - 1) / 2 << "\n";
            if (!ok) return 1;
        }
        return 0;
    }
    if (suite == "grid") {
        GridOutcome outcome = run_classification_grid(jobs);
        std::cout << "grid points (non-cyclic Sylow): " << outcome.points << "\n";
        std::cout << "verdicts by reason:\n";
        for (const auto& [reason, count] : outcome.reasons)
            std::cout << "  " << reason << ": " << count << "\n";
        std::cout << "series eliminated at " << outcome.series_eliminated << " points, caveats at "
                  << outcome.series_caveats << "\n";
        if (!outcome.survivor_details.empty()) {
            std::cout << "UNEXPLAINED SURVIVORS:\n";
            for (const auto& s : outcome.survivor_details) std::cout << "  " << s << "\n";
            return 1;
        }
        if (!outcome.known_case_mismatches.empty()) {
            std::cout << "KNOWN-CASE MISMATCHES:\n";
            for (const auto& s : outcome.known_case_mismatches) std::cout << "  " << s << "\n";
            return 1;
        }
        std::cout << "no unipotent survivors; unitary known cases match\n";
        return 0;
    }
    throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic screening toolkit for simple endotrivial module candidates"};
    app.require_subcommand(1);

    std::string family = "sl", format = "json", suite, table_path, char_name, shapes_arg;
    int n = 0, nmax = 10, dmax = 10, hmax = 5, jobs = 1;
    long long q = 2, ell = 3;

    auto* classify_cmd = app.add_subcommand("classify", "run the elimination screens for one (group, ell)");
    classify_cmd->add_option("--family", family, "sl|su|gl|gu|g2|3d4|f4|e6|2e6|e7|e8|2f4")->required();
    classify_cmd->add_option("--n", n, "rank parameter (linear/unitary)");
    classify_cmd->add_option("--q", q, "prime power")->required();
    classify_cmd->add_option("--ell", ell, "odd prime")->required();
    classify_cmd->add_option("--format", format, "json|text");

    auto* verify_cmd = app.add_subcommand("verify", "self-contained verification suites");
    verify_cmd->add_option("--suite", suite, "andrews|sn-orthogonality|degrees|grid")->required();
    verify_cmd->add_option("--nmax", nmax, "bound for sn-orthogonality");
    verify_cmd->add_option("--dmax", dmax, "bound for andrews");
    verify_cmd->add_option("--hmax", hmax, "bound for andrews");
    verify_cmd->add_option("--jobs", jobs, "worker threads for the grid suite");

    auto* torchar_cmd = app.add_subcommand("torchar", "trivial-source endotriviality test on an ingested table");
    torchar_cmd->add_option("--table", table_path, "character table JSON")->required();
    torchar_cmd->add_option("--char", char_name, "character name")->required();
    torchar_cmd->add_option("--ell", ell, "prime")->required();

    auto* loewy_cmd = app.add_subcommand("loewy4", "Loewy-length-4 necessary condition on an ingested table");
    loewy_cmd->add_option("--table", table_path, "character table JSON")->required();
    loewy_cmd->add_option("--ell", ell, "prime")->required();
    loewy_cmd->add_option("--char", char_name, "restrict to one character");

    auto* blocks_cmd = app.add_subcommand("blocks", "cyclic-Sylow block and module counts");
    blocks_cmd->add_option("--family", family, "sl|su")->required();
    blocks_cmd->add_option("--n", n, "rank parameter")->required();
    blocks_cmd->add_option("--q", q, "prime power")->required();
    blocks_cmd->add_option("--ell", ell, "odd prime")->required();

    auto* groups_cmd = app.add_subcommand("groups", "order and Sylow data");
    groups_cmd->require_subcommand(1);
    auto* order_cmd = groups_cmd->add_subcommand("order", "factored and evaluated group order");
    order_cmd->add_option("--family", family)->required();
    order_cmd->add_option("--n", n);
    order_cmd->add_option("--q", q)->required();
    auto* sylow_cmd = groups_cmd->add_subcommand("sylow", "Sylow ell-profile as JSON");
    sylow_cmd->add_option("--family", family)->required();
    sylow_cmd->add_option("--n", n);
    sylow_cmd->add_option("--q", q)->required();
    sylow_cmd->add_option("--ell", ell)->required();

    auto* regular_cmd = app.add_subcommand("regular", "coverage decisions for cycle-shape lists");
    regular_cmd->require_subcommand(1);
    auto* cover_cmd = regular_cmd->add_subcommand("cover", "search intransitive/imprimitive cover");
    cover_cmd->add_option("--n", n)->required();
    cover_cmd->add_option("--shapes", shapes_arg, "comma-separated, e.g. 4+1,3+2")->required();
    bool levi = false;
    cover_cmd->add_flag("--levi", levi, "also run the F-stable Levi realizability test");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*classify_cmd) {
            ScreenReport report = classify(make_spec(family, n, q), ell);
            std::cout << emit_report(report, format);
            return 0;
        }
        if (*verify_cmd) return run_verify(suite, nmax, dmax, hmax, jobs);
        if (*torchar_cmd) {
            CharacterTableData table = ingest_table_file(table_path);
            TorcharResult r = torchar_check(table, char_name, ell);
            Json out;
            out["verdict"] = r.verdict == TorcharVerdict::Endotrivial
                                 ? "endotrivial"
                                 : (r.verdict == TorcharVerdict::NotEndotrivial ? "not_endotrivial"
                                                                                : "not_applicable");
            if (!r.witness_class.empty()) out["witness_class"] = r.witness_class;
            out["residue"] = r.residue.str();
            out["reason"] = r.reason;
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (*loewy_cmd) {
            CharacterTableData table = ingest_table_file(table_path);
            Json out = Json::array();
            for (const auto& chi : table.characters) {
                if (!char_name.empty() && chi.name != char_name) continue;
                Loewy4Result r = loewy4_check(table, chi.name, ell);
                Json row;
                row["char"] = chi.name;
                row["passes"] = r.passes;
                if (!r.witness_class.empty()) row["witness_class"] = r.witness_class;
                row["reason"] = r.reason;
                out.push_back(row);
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (*blocks_cmd) {
            GroupSpec spec = make_spec(family, n, q);
            SylowProfile profile = sylow_profile(spec, ell);
            Json out;
            out["d"] = profile.d;
            out["cyclic"] = profile.cyclic;
            if (profile.cyclic && profile.v > 0) {
                if (spec.family == Family::SL) {
                    out["lsb"] = lsb_sl(n, q, ell);
                    if (profile.d > 1 && n > 2) {
                        LseResult lse = lse_sl(n, q, ell);
                        if (lse.count)
                            out["lse"] = *lse.count;
                        else
                            out["lse"] = nullptr;
                        out["lse_note"] = lse.note;
                    }
                } else if (spec.family == Family::SU) {
                    out["lsb"] = lsb_su(n, q, ell);
                } else {
                    throw std::invalid_argument("blocks: family must be sl or su");
                }
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (*groups_cmd) {
            GroupSpec spec = make_spec(family, n, q);
            if (*order_cmd) {
                GroupOrder order = order_formula(spec);
                std::cout << "q-power: q^" << order.q_exponent << "\n";
                std::cout << "factors:";
                for (const auto& f : order.natural_factors) std::cout << " (" << f.to_string() << ")";
                std::cout << "\ncyclotomic:";
                for (const auto& [d, m] : order.phi) {
                    std::cout << " Phi" << d;
                    if (m > 1) std::cout << "^" << m;
                }
                std::cout << "\n|G| at q = " << q << ": " << order.eval(q).str() << "\n";
                return 0;
            }
            SylowProfile profile = sylow_profile(spec, ell);
            Json out;
            out["family"] = family_name(spec.family);
            if (is_linear_unitary(spec.family)) out["n"] = spec.n;
            out["q"] = spec.q;
            out["ell"] = ell;
            out["d"] = profile.d;
            out["v"] = profile.v;
            out["rank_est"] = profile.rank_est;
            out["cyclic"] = profile.cyclic;
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (*regular_cmd) {
            std::vector<CycleType> shapes;
            std::stringstream ss(shapes_arg);
            std::string token;
            while (std::getline(ss, token, ',')) {
                auto p = Partition::parse(token);
                if (!p) throw std::invalid_argument("bad shape: " + token);
                shapes.push_back(*p);
            }
            auto witness = proper_subgroup_covers(n, shapes);
            if (witness)
                std::cout << "witness: " << witness->to_string() << "\n";
            else
                std::cout << "none\n";
            if (levi) {
                auto lw = fstable_levi_covers(n, shapes);
                if (lw)
                    std::cout << "levi witness: " << lw->to_string() << "\n";
                else
                    std::cout << "levi: none\n";
            }
            return 0;
        }
    } catch (const internal_error& e) {
        std::cerr << "internal assertion: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
