// molq - exact workbench for modular ortholattice term evaluation, witness
// terms, frames, the dyadic direct limit, and the projection ring.
//
// Every invocation prints a single JSON document on stdout. Exit codes:
// 0 verdict true / success, 1 verdict false, 2 usage or input error.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "molq/json_io.hpp"
#include "molq/laws.hpp"
#include "molq/limit.hpp"
#include "molq/parser.hpp"
#include "molq/star_ring.hpp"

using namespace molq;

namespace {

bool pretty = false;

void emit(const json& j) { std::cout << j.dump(pretty ? 2 : -1) << "\n"; }

json load_json(const std::string& spec) {
    if (!spec.empty() && spec.front() == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw std::invalid_argument("cannot open file " + spec.substr(1));
        return json::parse(in);
    }
    return json::parse(spec);
}

// --sub entries look like name=@file.json or name={inline json}.
Substitution parse_subs(const std::vector<std::string>& entries) {
    Substitution sub;
    for (const std::string& entry : entries) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("substitution must look like name=@file or name=json");
        sub[entry.substr(0, eq)] = subspace_from_json(load_json(entry.substr(eq + 1)));
    }
    return sub;
}

Matrix load_matrix(const std::string& spec) { return matrix_from_json(load_json(spec)); }

json law_report_json(const LawReport& report) {
    return {{"checks", report.checks},
            {"failures", report.failures.size()},
            {"failure_notes", report.failures}};
}

int run(CLI::App& app, int argc, char** argv) {
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.add_flag("--pretty", pretty, "indented JSON output");

    int exit_code = 0;

    // ---- parse / print ------------------------------------------------
    std::string term_text;
    auto* parse_cmd = app.add_subcommand("parse", "parse a term and echo its canonical form");
    parse_cmd->add_option("--term", term_text)->required();
    parse_cmd->callback([&] {
        const TermPtr t = parse(term_text);
        emit({{"term", print(t)}, {"variables", variables(t)}});
    });

    auto* print_cmd = app.add_subcommand("print", "fully parenthesized form of a term");
    print_cmd->add_option("--term", term_text)->required();
    print_cmd->callback([&] { emit({{"term", print(parse(term_text))}}); });

    // ---- eval ----------------------------------------------------------
    int dim = 2;
    std::string field_str = "Q";
    std::vector<std::string> sub_entries;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a term under a substitution");
    eval_cmd->add_option("--dim", dim)->required();
    eval_cmd->add_option("--field", field_str)->check(CLI::IsMember({"Q", "Qi"}));
    eval_cmd->add_option("--term", term_text)->required();
    eval_cmd->add_option("--sub", sub_entries, "name=@file or name=json, repeatable");
    eval_cmd->callback([&] {
        const Lattice lat{field_from_name(field_str), dim};
        const Subspace value = eval(parse(term_text), parse_subs(sub_entries), lat);
        emit({{"value", to_json(value)},
              {"dim", value.dim()},
              {"is_top", value.is_full()},
              {"is_bottom", value.is_zero()}});
        if (!value.is_full()) exit_code = 1;
    });

    // ---- taut-check ------------------------------------------------------
    std::string testset_spec;
    std::uint64_t budget = kDefaultBudget;
    bool as_tdn = false;
    auto* taut = app.add_subcommand("taut-check", "exhaustively check a term over a test set");
    taut->add_option("--term", term_text)->required();
    taut->add_option("--testset", testset_spec, "@file or inline JSON")->required();
    taut->add_option("--budget", budget);
    taut->add_flag("--tdn", as_tdn, "treat --term as 'D N' and use the witness term");
    taut->callback([&] {
        const TestSet testset = testset_from_json(load_json(testset_spec));
        Target target{PlainTarget{nullptr}};
        if (as_tdn) {
            int d = 0, n = 0;
            if (std::sscanf(term_text.c_str(), "%d %d", &d, &n) != 2)
                throw std::invalid_argument("--tdn expects --term \"D N\"");
            target = TdnTarget{tdn_term(d, n)};
        } else {
            target = PlainTarget{parse(term_text)};
        }
        const HoldsReport report = holds_over(target, testset, budget);
        json out{{"holds", report.holds},
                 {"substitutions", report.stats.substitutions},
                 {"seconds", report.stats.seconds}};
        if (!report.holds) {
            out["counterexample"] = to_json(*report.counterexample);
            out["value"] = to_json(*report.counterexample_value);
            exit_code = 1;
        }
        emit(out);
    });

    // ---- refute ----------------------------------------------------------
    auto* refute = app.add_subcommand("refute", "witness that a finite set is not a universal test set");
    refute->add_option("--dim", dim)->required();
    refute->add_option("--testset", testset_spec)->required();
    refute->add_option("--budget", budget);
    refute->callback([&] {
        const TestSet testset = testset_from_json(load_json(testset_spec));
        if (testset.lattice.dim != dim)
            throw std::invalid_argument("--dim disagrees with the test set's ambient dimension");
        const RefutationCertificate cert = refute_testset(testset, budget);
        emit(to_json(cert));
        // A produced certificate means the set fails to be universal.
        exit_code = cert.testset_check.holds && !cert.witness_value.is_full() ? 1 : 0;
    });

    // ---- gen-term ----------------------------------------------------------
    int gd = 2, gn = 2;
    auto* gen = app.add_subcommand("gen-term", "emit a derived term");
    auto* gen_tdn = gen->add_subcommand("tdn", "the witness term for given d, n");
    gen_tdn->add_option("--d", gd)->required();
    gen_tdn->add_option("--n", gn)->required();
    gen_tdn->callback([&] {
        const TdnTerm t = tdn_term(gd, gn);
        emit({{"term", print(t.term)}, {"variables", t.vars}, {"d", t.d}, {"n", t.n}});
    });

    // ---- frame ----------------------------------------------------------
    std::string frame_spec;
    int atoms_n = 1;
    auto* frame = app.add_subcommand("frame", "frame construction and checks");
    auto* f_canon = frame->add_subcommand("canonical", "canonical frame of L(Q^d)");
    f_canon->add_option("--d", gd)->required();
    f_canon->callback([&] { emit(to_json(canonical_frame(gd))); });

    auto* f_verify = frame->add_subcommand("verify", "check the frame axioms");
    f_verify->add_option("--in", frame_spec)->required();
    f_verify->callback([&] {
        const FrameCheck check = verify_frame(frame_from_json(load_json(frame_spec)));
        emit({{"frame", check.ok}, {"trivial", check.trivial}, {"violations", check.violations}});
        if (!check.ok) exit_code = 1;
    });

    auto* f_norm = frame->add_subcommand("normalize", "frame normalization gadget");
    f_norm->add_option("--in", frame_spec)->required();
    f_norm->callback([&] { emit(to_json(normalize_frame(frame_from_json(load_json(frame_spec))))); });

    auto* f_atoms = frame->add_subcommand("atoms", "distinct line atoms of a frame");
    f_atoms->add_option("--in", frame_spec)->required();
    f_atoms->add_option("--n", atoms_n)->required();
    f_atoms->callback([&] {
        json out = json::array();
        for (const Subspace& s : line_atoms(frame_from_json(load_json(frame_spec)), atoms_n))
            out.push_back(to_json(s));
        emit({{"atoms", out}});
    });

    // ---- limit ----------------------------------------------------------
    std::string elem_spec, other_spec;
    int level = 1, random_count = 0;
    std::uint64_t seed = 0;
    auto* limit = app.add_subcommand("limit", "direct-limit elements");
    auto* l_double = limit->add_subcommand("double", "doubling embedding, one level up");
    l_double->add_option("--in", elem_spec)->required();
    l_double->callback([&] { emit(to_json(doubled(limit_from_json(load_json(elem_spec))))); });

    auto* l_dim = limit->add_subcommand("dim", "normalized dimension");
    l_dim->add_option("--in", elem_spec)->required();
    l_dim->callback([&] {
        const DyadicDim d = delta(limit_from_json(load_json(elem_spec)));
        emit({{"numerator", d.numerator},
              {"level", d.level},
              {"delta", std::to_string(d.numerator) + "/2^" + std::to_string(d.level)},
              {"lowest_terms", d.value.get_str()}});
    });

    auto* l_metric = limit->add_subcommand("metric", "distance of two limit elements");
    l_metric->add_option("--a", elem_spec)->required();
    l_metric->add_option("--b", other_spec)->required();
    l_metric->callback([&] {
        const Rational m = limit_metric(limit_from_json(load_json(elem_spec)),
                                        limit_from_json(load_json(other_spec)));
        emit({{"metric", m.get_str()}});
    });

    auto* l_enum = limit->add_subcommand("enumerate", "deterministic level-n enumeration");
    l_enum->add_option("--level", level)->required();
    l_enum->add_option("--random", random_count);
    l_enum->add_option("--seed", seed);
    l_enum->callback([&] {
        json out = json::array();
        for (const LimitElement& e : testset_enumeration(level, random_count, seed)) {
            const DyadicDim d = delta(e);
            out.push_back({{"element", to_json(e)}, {"delta", d.value.get_str()}});
        }
        emit({{"elements", out}});
    });

    auto* l_real = limit->add_subcommand("realify", "realification of a Qi subspace");
    l_real->add_option("--in", elem_spec)->required();
    l_real->callback([&] { emit(to_json(realify(subspace_from_json(load_json(elem_spec))))); });

    // ---- ring ----------------------------------------------------------
    std::string a_spec, b_spec;
    auto* ring = app.add_subcommand("ring", "matrix *-ring operations");
    auto* r_mp = ring->add_subcommand("mp", "Moore-Penrose pseudo-inverse");
    r_mp->add_option("--in", a_spec)->required();
    r_mp->callback([&] { emit({{"mp", to_json(mp_inverse(load_matrix(a_spec)))}}); });

    auto* r_meet = ring->add_subcommand("meet", "projection meet");
    r_meet->add_option("--a", a_spec)->required();
    r_meet->add_option("--b", b_spec)->required();
    r_meet->callback([&] {
        emit({{"meet", to_json(
                   proj_meet(ProjMatrix(load_matrix(a_spec)), ProjMatrix(load_matrix(b_spec))).p)}});
    });

    auto* r_join = ring->add_subcommand("join", "projection join");
    r_join->add_option("--a", a_spec)->required();
    r_join->add_option("--b", b_spec)->required();
    r_join->callback([&] {
        emit({{"join", to_json(
                   proj_join(ProjMatrix(load_matrix(a_spec)), ProjMatrix(load_matrix(b_spec))).p)}});
    });

    auto* r_ortho = ring->add_subcommand("ortho", "projection orthocomplement");
    r_ortho->add_option("--in", a_spec)->required();
    r_ortho->callback([&] { emit({{"ortho", to_json(proj_ortho(ProjMatrix(load_matrix(a_spec))).p)}}); });

    auto* r_tosub = ring->add_subcommand("to-subspace", "fixed row space of a projection");
    r_tosub->add_option("--in", a_spec)->required();
    r_tosub->add_option("--field", field_str)->check(CLI::IsMember({"Q", "Qi"}));
    r_tosub->callback([&] {
        emit(to_json(proj_to_subspace(ProjMatrix(load_matrix(a_spec)), field_from_name(field_str))));
    });

    auto* r_double = ring->add_subcommand("double", "block-diagonal doubling");
    r_double->add_option("--in", a_spec)->required();
    r_double->callback([&] { emit({{"double", to_json(block_double(load_matrix(a_spec)))}}); });

    // ---- axioms ----------------------------------------------------------
    std::string suite = "mol";
    int samples = 100;
    auto* axioms = app.add_subcommand("axioms", "randomized law suites");
    axioms->add_option("--suite", suite)->check(CLI::IsMember({"mol", "penrose", "frame"}));
    axioms->add_option("--dim", dim);
    axioms->add_option("--field", field_str)->check(CLI::IsMember({"Q", "Qi"}));
    axioms->add_option("--seed", seed);
    axioms->add_option("--samples", samples);
    axioms->callback([&] {
        LawReport report;
        if (suite == "mol") {
            report = mol_axiom_suite({field_from_name(field_str), dim}, samples, seed);
        } else if (suite == "penrose") {
            report = penrose_suite(field_from_name(field_str), 6, samples, seed);
        } else {
            report = frame_suite(2, std::max(2, dim), samples, seed);
        }
        emit(law_report_json(report));
        if (!report.ok()) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact modular-ortholattice workbench"};
    try {
        return run(app, argc, argv);
    } catch (const std::exception& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }
}
