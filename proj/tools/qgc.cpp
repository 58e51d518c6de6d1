// qgc: exact constructors and verification suites for the Jordanian
// contraction workbench. Exit codes: 0 pass, 1 verification failure,
// 2 usage error or genuine pole.

#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "qgc/coupling.hpp"
#include "qgc/fock.hpp"
#include "qgc/freealg.hpp"
#include "qgc/qgroup.hpp"

using namespace qgc;

namespace {

RingMatrix corrupt_entry(RingMatrix m) {
    // One-entry perturbation by +h: the canonical mutated input.
    m.at(0, 1) = m.at(0, 1) + ScalarQH::h();
    return m;
}

std::string table_json(const CouplingTable& t) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (auto& [key, val] : t.entries) {
        auto [jj, m, a, b] = key;
        nlohmann::ordered_json e;
        e["j"] = jj;
        e["m"] = m;
        e["m1"] = (a == 1) ? "1/2" : "-1/2";
        e["m2"] = (b == 1) ? "1/2" : "-1/2";
        e["coeff"] = val.str();
        entries.push_back(e);
    }
    j["table"] = entries;
    j["convention_note"] = t.convention_note;
    return j.dump(2);
}

int run_emit(const std::string& name, int n, const std::string& format) {
    if (name == "cgc-h") {
        RewriteSystem rs = boson_system_h(2, 1, BosonForm::tilde);
        std::cout << table_json(derive_table(rs)) << "\n";
        return 0;
    }
    if ((name == "r_h" || name == "rtilde_h") && n < 2) {
        std::cerr << "the contracted R-matrix needs n >= 2\n";
        return 2;
    }
    RingMatrix m;
    if (name == "r_q") {
        m = r_standard(n);
    } else if (name == "r_h") {
        m = r_jordanian(n);
    } else if (name == "c_q") {
        m = c_metric_q(n);
    } else if (name == "c_h" || name == "rtilde_h") {
        if (n >= 3 && n % 2 == 1) {
            std::cerr << "no contraction limit: n must be even\n";
            return 2;
        }
        RingMatrix c = c_metric_contract(n);
        m = (name == "c_h") ? c : r_tilde(r_jordanian(n), c, RTildeVariant::h_side);
    } else {
        std::cerr << "unknown matrix name: " << name << "\n";
        return 2;
    }
    std::cout << (format == "latex" ? matrix_latex(m) : matrix_json(m)) << "\n";
    return 0;
}

void run_c_parity(VerificationReport& rep) {
    for (int n : {2, 4}) {
        bool ok = false;
        std::string witness;
        try {
            c_metric_contract(n);
            ok = true;
        } catch (const error& e) {
            witness = e.what();
        }
        rep.add("contracted metric exists for n = " + std::to_string(n), ok, witness);
    }
    for (int n : {3, 5}) {
        bool poled = false;
        try {
            c_metric_contract(n);
        } catch (const pole_error&) {
            poled = true;
        }
        rep.add("contracted metric pole for n = " + std::to_string(n), poled,
                "limit unexpectedly exists");
    }
}

VerificationReport run_suite(const std::string& suite, int n, int m, int trunc, bool corrupt);

void run_negative_controls(VerificationReport& rep) {
    // Mutated-input runs that must fail, guarding against vacuous passes.
    {
        auto r = verify_structure(corrupt_entry(r_jordanian(2)), {StructureCheck::ybe});
        rep.add("negative control: ybe detects a corrupted R", !r.overall(),
                "corrupted matrix passed");
    }
    {
        auto r = verify_structure(corrupt_entry(r_jordanian(2)), {StructureCheck::triangular});
        rep.add("negative control: triangularity detects a corrupted R", !r.overall(),
                "corrupted matrix passed");
    }
    {
        auto r = verify_structure(corrupt_entry(r_standard(2)), {StructureCheck::hecke});
        rep.add("negative control: hecke detects a corrupted R", !r.overall(),
                "corrupted matrix passed");
    }
}

VerificationReport run_suite(const std::string& suite, int n, int m, int trunc, bool corrupt) {
    VerificationReport rep;
    rep.suite = suite;
    rep.parameters["n"] = std::to_string(n);
    rep.parameters["m"] = std::to_string(m);
    rep.parameters["trunc"] = std::to_string(trunc);

    static const std::vector<std::string> need_n2 = {"ybe",      "triangular", "hecke",
                                                     "contract", "covariance", "coupled"};
    for (auto& s : need_n2)
        if (suite == s && n < 2) throw CLI::ValidationError(suite + " needs n >= 2");
    if ((suite == "covariance" || suite == "coupled") && (n != 2 || (m != 1 && m != 2)))
        throw CLI::ValidationError(suite + " supports n = 2 and m in {1, 2}");

    if (suite == "ybe" || suite == "triangular") {
        RingMatrix rh = r_jordanian(n);
        if (corrupt) rh = corrupt_entry(rh);
        StructureCheck chk = (suite == "ybe") ? StructureCheck::ybe : StructureCheck::triangular;
        rep.merge(verify_structure(rh, {chk, StructureCheck::unital}), "r_h(n=" + std::to_string(n) + ")");
        if (suite == "ybe" && !corrupt)
            rep.merge(verify_structure(r_standard(n), {StructureCheck::ybe}),
                      "r_q(n=" + std::to_string(n) + ")");
    } else if (suite == "hecke") {
        RingMatrix rq = r_standard(n);
        if (corrupt) rq = corrupt_entry(rq);
        rep.merge(verify_structure(rq, {StructureCheck::hecke}), "r_q(n=" + std::to_string(n) + ")");
    } else if (suite == "limit-equivalence") {
        for (int nn = 2; nn <= std::max(n, 4); ++nn)
            rep.add("both RTT orientations contract to r_h at n = " + std::to_string(nn),
                    limit_equivalence(nn));
    } else if (suite == "c-parity") {
        run_c_parity(rep);
    } else if (suite == "contract") {
        ContractionReport cr = contract_r(n);
        rep.add("limit path equals closed form at n = " + std::to_string(n), cr.agree);
    } else if (suite == "boson-fock") {
        FockRep fr = build_weyl(2, trunc);
        build_h_spinors(fr);
        if (corrupt) fr.cap_plus[0].at(0, 1) = fr.cap_plus[0].at(0, 1) + PolyH::h();
        rep.merge(verify_all_relations(fr));
        rep.merge(verify_classical_degeneration(fr));
        rep.merge(verify_degree_blocks(fr));
    } else if (suite == "boson-abstract") {
        rep.merge(verify_rform_match());
        if (m == 1) rep.merge(verify_rep_morphism(trunc));
        // building throws non_confluent on failure
        boson_system_h(n, m, BosonForm::tilde);
        rep.add("tilde rewrite system (n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                    ") built and confluent",
                true);
    } else if (suite == "confluence") {
        RewriteSystem rs = boson_system_h(n, m, BosonForm::tilde);
        rep.merge(rs.check_confluence(3), "tilde(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")");
        if (m == 1) {
            RewriteSystem plain = boson_system_h(n, m, BosonForm::plain);
            rep.merge(plain.check_confluence(3), "plain(n=" + std::to_string(n) + ",m=1)");
        }
    } else if (suite == "covariance") {
        rep.merge(covariance_check(n, m));
    } else if (suite == "coupled") {
        RingMatrix rh = r_jordanian(2);
        if (corrupt) rh = corrupt_entry(rh);
        RingMatrix cal_r = RingMatrix::identity(1);
        cal_r.set_factors({1, 1});
        try {
            RewriteSystem rs = boson_relations(rh, cal_r, c_metric_contract(2),
                                               RingMatrix::identity(1), BosonForm::tilde);
            CouplingTable t = derive_table(rs);
            rep.merge(verify_coupled_n2m1(t, trunc));
            if (m == 2) rep.merge(verify_coupled_n2m2(t));
        } catch (const error& e) {
            rep.add("coupling table derivation", false, e.what());
        }
    } else if (suite == "all") {
        rep.merge(run_suite("ybe", 2, 1, trunc, false));
        rep.merge(run_suite("triangular", 2, 1, trunc, false));
        rep.merge(run_suite("hecke", 2, 1, trunc, false));
        rep.merge(run_suite("contract", 2, 1, trunc, false));
        rep.merge(run_suite("limit-equivalence", 4, 1, trunc, false));
        rep.merge(run_suite("c-parity", 2, 1, trunc, false));
        rep.merge(run_suite("boson-fock", 2, 1, trunc, false));
        rep.merge(run_suite("boson-abstract", 2, 1, trunc, false));
        rep.merge(run_suite("covariance", 2, 1, trunc, false));
        rep.merge(run_suite("covariance", 2, 2, trunc, false));
        rep.merge(run_suite("coupled", 2, 2, trunc, false));
        run_negative_controls(rep);
    } else {
        throw CLI::ValidationError("unknown suite: " + suite);
    }
    return rep;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for Jordanian quantum groups and covariant deformed bosons"};
    app.require_subcommand(1);

    auto* emit = app.add_subcommand("emit", "print a constructed matrix or table");
    std::string matrix_name, table_name, format = "json", emit_out;
    int emit_n = 2;
    auto* mopt = emit->add_option("--matrix", matrix_name, "r_q | r_h | c_q | c_h | rtilde_h | cgc-h");
    emit->add_option("--table", table_name, "cgc-h")->excludes(mopt);
    emit->add_option("--n", emit_n, "dimension");
    emit->add_option("--format", format, "json | latex")
        ->check(CLI::IsMember({"json", "latex"}));
    emit->add_option("--out", emit_out, "write output to file");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite, verify_out, verify_format = "text";
    int n = 2, m = 1, trunc = 6;
    bool corrupt = false;
    verify->add_option("--suite", suite,
                       "ybe | triangular | hecke | limit-equivalence | c-parity | contract | "
                       "boson-fock | boson-abstract | confluence | covariance | coupled | all")
        ->required();
    verify->add_option("--n", n, "first quantum-group dimension");
    verify->add_option("--m", m, "second quantum-group dimension");
    verify->add_option("--trunc", trunc, "Fock truncation degree");
    verify->add_option("--format", verify_format, "text | json (stdout format)")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", verify_out, "write the JSON report to file");
    verify->add_flag("--corrupt", corrupt, "perturb one matrix entry by +h (negative control)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (emit->parsed()) {
            std::string name = matrix_name.empty() ? table_name : matrix_name;
            if (name.empty()) {
                std::cerr << "emit needs --matrix or --table\n";
                return 2;
            }
            if (emit_n < 1) {
                std::cerr << "dimension must be positive\n";
                return 2;
            }
            if (!emit_out.empty()) {
                std::ofstream f(emit_out);
                std::streambuf* old = std::cout.rdbuf(f.rdbuf());
                int rc = run_emit(name, emit_n, format);
                std::cout.rdbuf(old);
                return rc;
            }
            return run_emit(name, emit_n, format);
        }
        auto t0 = std::chrono::steady_clock::now();
        VerificationReport rep = run_suite(suite, n, m, trunc, corrupt);
        rep.elapsed_sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (verify_format == "json") {
            std::cout << rep.to_json() << "\n";
        } else {
            std::cout << rep.summary_lines();
            std::cout << (rep.overall() ? "OVERALL PASS" : "OVERALL FAIL") << "\n";
        }
        if (!verify_out.empty()) {
            std::ofstream f(verify_out);
            f << rep.to_json() << "\n";
        }
        return rep.overall() ? 0 : 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const pole_error& e) {
        std::cerr << "pole: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
