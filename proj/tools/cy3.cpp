// cy3: exact intersection-theory computations on the built-in Calabi-Yau
// threefold models (or user model files) and the reproduction suite.

#include "cy3/errors.hpp"
#include "cy3/matcher.hpp"
#include "cy3/model_io.hpp"
#include "cy3/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

using namespace cy3;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

/// Collects results for both the aligned text view and the JSON report.
class Output {
  public:
    void add(const std::string& key, const std::string& value) {
        rows_.emplace_back(key, value);
        results_[key] = value;
    }
    void add_json(const std::string& key, json value) { results_[key] = std::move(value); }
    void line(const std::string& text) { rows_.emplace_back("", text); }
    void cite(std::string citation) { citations_.push_back(std::move(citation)); }

    void emit(bool as_json, const std::string& command, const std::string& digest) const {
        if (as_json) {
            ReportDocument doc;
            doc.command = command;
            doc.inputs_digest = digest;
            doc.results = results_;
            doc.citations = citations_;
            std::cout << doc.to_json();
            return;
        }
        std::size_t width = 0;
        for (const auto& [k, v] : rows_) {
            width = std::max(width, k.size());
        }
        for (const auto& [k, v] : rows_) {
            if (k.empty()) {
                std::cout << v << "\n";
            } else {
                std::cout << k << std::string(width - k.size() + 2, ' ') << v << "\n";
            }
        }
    }

  private:
    std::vector<std::pair<std::string, std::string>> rows_;
    json results_ = json::object();
    std::vector<std::string> citations_;
};

std::string digest_of(const std::string& command, const std::vector<const ThreefoldModel*>& models) {
    std::string data = command;
    for (const auto* m : models) {
        data += "\n" + export_model(*m);
    }
    return fnv1a_hex(data);
}

DivisorExpr resolve_divisor(const ThreefoldModel& model, const std::string& spec) {
    constexpr std::string_view prefix = "template:";
    if (spec.rfind(prefix, 0) == 0) {
        return model.require_template(spec.substr(prefix.size())).expr;
    }
    return parse_divisor(model.basis, spec);
}

std::map<std::string, Integer> parse_bindings(const std::vector<std::string>& items) {
    std::map<std::string, Integer> out;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw ArgumentError("expected name=value, got '" + item + "'");
        }
        out[item.substr(0, eq)] = parse_integer(item.substr(eq + 1));
    }
    return out;
}

SumBranch parse_branch(const std::string& name) {
    if (name == "paper") {
        return SumBranch::paper;
    }
    if (name == "standard") {
        return SumBranch::standard;
    }
    throw ArgumentError("--equation must be 'paper' or 'standard'");
}

std::string join_command(int argc, char** argv) {
    std::string out = "cy3";
    for (int i = 1; i < argc; ++i) {
        out += " ";
        out += argv[i];
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact intersection numbers, Chern pairings and Hilbert-polynomial matching "
                 "for Calabi-Yau threefold models"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit a canonical JSON report");
    app.fallthrough();

    std::string x_phi_ref = "builtin:x_phi";
    std::string x_t_ref = "builtin:x_t";

    auto* verify = app.add_subcommand("verify-paper", "recompute every published intermediate");
    verify->add_option("--x-phi", x_phi_ref, "model standing in for X_phi");
    verify->add_option("--x-t", x_t_ref, "model standing in for X_T");

    std::string model_ref;
    std::string out_path;
    auto* exporter = app.add_subcommand("export", "write a model in the model-file schema");
    exporter->add_option("--model", model_ref, "builtin:x_phi | builtin:x_t | path")->required();
    exporter->add_option("-o,--output", out_path, "output file (default stdout)");

    std::string divisor_spec;
    bool split = false;
    auto* cube_cmd = app.add_subcommand("cube", "D^3 of a divisor");
    cube_cmd->add_option("--model", model_ref)->required();
    cube_cmd->add_option("--divisor", divisor_spec, "template:NAME or a linear expression")
        ->required();
    cube_cmd->add_flag("--split", split,
                       "split into constant part P and parametric part L and list P^3, P^2L, "
                       "PL^2, L^3");

    auto* c2_cmd = app.add_subcommand("c2", "D.c2 of a divisor");
    c2_cmd->add_option("--model", model_ref)->required();
    c2_cmd->add_option("--divisor", divisor_spec)->required();

    std::string d3_text;
    std::string dc2_text;
    std::vector<std::string> set_items;
    std::vector<long> at_points = {1, 2, 3};
    auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert polynomial chi(O(nD))");
    hilbert_cmd->add_option("--d3", d3_text, "D^3");
    hilbert_cmd->add_option("--dc2", dc2_text, "D.c2");
    hilbert_cmd->add_option("--model", model_ref);
    hilbert_cmd->add_option("--divisor", divisor_spec);
    hilbert_cmd->add_option("--set", set_items, "parameter binding name=value");
    hilbert_cmd->add_option("--at", at_points, "evaluation points");

    std::vector<std::string> pair_refs;
    auto* distinguish_cmd =
        app.add_subcommand("distinguish", "compare c2 mod 6 and cubic-form mod 3 invariants");
    distinguish_cmd->add_option("models", pair_refs, "two model references")
        ->required()
        ->expected(2);

    std::string equation_name = "paper";
    std::string bound_text = "0";
    std::string box_text;
    std::vector<std::string> box_items;
    unsigned workers = 0;
    bool want_certificate = false;
    auto* match_cmd = app.add_subcommand("match", "enumerate parameters with equal H^3");
    match_cmd->add_option("--equation", equation_name, "paper | standard");
    match_cmd->add_option("--bound", bound_text, "parameters strictly greater than this");
    match_cmd->add_option("--box", box_text, "inclusive upper bound for every parameter");
    match_cmd->add_option("--box-param", box_items, "per-parameter bound name=value");
    match_cmd->add_option("--workers", workers, "enumeration threads (0 = hardware)");
    match_cmd->add_flag("--certificate", want_certificate,
                        "emit a connectivity certificate for the first solution");
    match_cmd->add_option("--x-phi", x_phi_ref);
    match_cmd->add_option("--x-t", x_t_ref);

    auto* family_cmd = app.add_subcommand("family-check", "verify the closed-form solution family");
    family_cmd->add_option("--equation", equation_name, "paper | standard");
    family_cmd->add_option("--x-phi", x_phi_ref);
    family_cmd->add_option("--x-t", x_t_ref);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    const std::string command = join_command(argc, argv);
    Output out;
    try {
        if (verify->parsed()) {
            const ThreefoldModel x_phi = load_model(x_phi_ref);
            const ThreefoldModel x_t = load_model(x_t_ref);
            const SuiteResult suite = run_paper_suite(x_phi, x_t);
            if (as_json) {
                std::cout << suite_report(suite, command, digest_of(command, {&x_phi, &x_t}))
                                 .to_json();
            } else {
                std::cout << render_text(suite);
            }
            return suite.ok() ? 0 : kExitFail;
        }

        if (exporter->parsed()) {
            const ThreefoldModel model = load_model(model_ref);
            const std::string text = export_model(model);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream file(out_path);
                if (!(file << text)) {
                    throw LoadError("cannot write '" + out_path + "'");
                }
            }
            return 0;
        }

        if (cube_cmd->parsed() || c2_cmd->parsed()) {
            const ThreefoldModel model = load_model(model_ref);
            const DivisorExpr d = resolve_divisor(model, divisor_spec);
            out.add("model", model.name);
            out.add("divisor", d.to_string());
            if (c2_cmd->parsed()) {
                out.add("D.c2", pair(model.c2, d).to_string());
            } else {
                out.add("D^3", cube(model.cup, d).to_string());
                if (split) {
                    const auto [p, l] = split_constant_part(d);
                    const CubeSplit cs = cube_split(model.cup, p, l);
                    out.add("P", p.to_string());
                    out.add("L", l.to_string());
                    out.add("P^3", cs.p3.to_string());
                    out.add("P^2.L", cs.p2l.to_string());
                    out.add("P.L^2", cs.pl2.to_string());
                    out.add("L^3", cs.l3.to_string());
                    out.add("P^3 + P^2.L + P.L^2 + L^3", cs.paper_sum.to_string());
                    out.add("P^3 + 3P^2.L + 3P.L^2 + L^3", cs.standard_sum.to_string());
                    out.add("sums agree", cs.sums_agree() ? "yes" : "no");
                }
            }
            out.emit(as_json, command, digest_of(command, {&model}));
            return 0;
        }

        if (hilbert_cmd->parsed()) {
            ChernPair p;
            std::vector<const ThreefoldModel*> inputs;
            std::optional<ThreefoldModel> model;
            if (!model_ref.empty()) {
                model = load_model(model_ref);
                inputs.push_back(&*model);
                if (divisor_spec.empty()) {
                    throw ArgumentError("hilbert --model requires --divisor");
                }
                const DivisorExpr d = resolve_divisor(*model, divisor_spec);
                p = model->chern_pair(d).evaluate(parse_bindings(set_items));
            } else {
                if (d3_text.empty() || dc2_text.empty()) {
                    throw ArgumentError("hilbert needs --d3 and --dc2, or --model and --divisor");
                }
                p = {parse_integer(d3_text), parse_integer(dc2_text)};
            }
            const HilbertPolynomial hp(p);
            out.add("(D^3, D.c2)", p.to_string());
            out.add("P(n)", hp.to_string());
            out.add("integer-valued", is_integer_valued(hp) ? "yes" : "no");
            for (long n : at_points) {
                out.add("P(" + std::to_string(n) + ")", to_string(hp(n)));
            }
            out.cite("chi(O(nH)) = H^3/6 n^3 + H.c2/12 n");
            out.emit(as_json, command, digest_of(command, inputs));
            return 0;
        }

        if (distinguish_cmd->parsed()) {
            const ThreefoldModel m1 = load_model(pair_refs.at(0));
            const ThreefoldModel m2 = load_model(pair_refs.at(1));
            const DistinguishVerdict v = distinguish(m1, m2);
            out.line(v.summary());
            for (const ModelInvariants* inv : {&v.first, &v.second}) {
                out.add(inv->model + " c2 = 0 mod 6", inv->c2_divisible_by_6 ? "yes" : "no");
                out.add(inv->model + " cubic form = 0 mod 3",
                        to_string(inv->cube_mod3) + " (" + inv->cube_reason + ")");
            }
            out.add_json("verdict", v.verdict);
            out.add_json("distinguished", v.distinguished);
            out.add_json("witnesses", v.witnesses);
            out.cite("topological invariance of the cubic form and the c2 linear form");
            out.emit(as_json, command, digest_of(command, {&m1, &m2}));
            return 0;
        }

        if (match_cmd->parsed()) {
            const ThreefoldModel x_phi = load_model(x_phi_ref);
            const ThreefoldModel x_t = load_model(x_t_ref);
            const SumBranch branch = parse_branch(equation_name);
            const auto derivation = derive_matching_equation(x_phi, x_t, branch);
            out.add("equation", derivation.equation.to_string() + " = 0");
            out.add("H^3 sides", derivation.lhs_cube.to_string() + " = " +
                                     derivation.rhs_cube.to_string());
            if (auto obstruction = modular_obstruction(derivation.equation)) {
                out.add("infeasible", obstruction->proof);
                out.add_json("solutions", json::array());
                out.emit(as_json, command, digest_of(command, {&x_phi, &x_t}));
                return 0;
            }
            std::map<std::string, Integer> box;
            const auto params = [&] {
                MatchProblem probe = matching_problem(x_phi, x_t, branch, 0, {});
                return probe.parameters();
            }();
            if (!box_text.empty()) {
                for (const auto& name : params) {
                    box[name] = parse_integer(box_text);
                }
            }
            for (const auto& [name, value] : parse_bindings(box_items)) {
                box[name] = value;
            }
            const MatchProblem problem =
                matching_problem(x_phi, x_t, branch, parse_integer(bound_text), box);
            const auto solutions = enumerate_matches(problem, workers);

            std::string names = "(";
            for (std::size_t i = 0; i < params.size(); ++i) {
                names += (i == 0 ? "" : ", ") + params[i];
            }
            out.add("parameters", names + ")");
            out.add("solutions", std::to_string(solutions.size()));
            json listed = json::array();
            for (const auto& s : solutions) {
                out.line("  " + s.tuple() + "  H^3 = " + to_string(s.common_value));
                listed.push_back({{"assignment", s.tuple()}, {"h3", to_string(s.common_value)}});
            }
            out.add_json("solution_list", std::move(listed));
            if (want_certificate && !solutions.empty()) {
                const auto cert = build_certificate(solutions.front(), x_phi,
                                                    x_phi.templates.begin()->first, x_t,
                                                    x_t.templates.begin()->first, branch);
                out.add("certificate solution", cert.solution.tuple());
                out.add("certificate (H^3, H.c2)", cert.first.to_string());
                out.add("certificate P(n)", cert.hilbert.to_string());
                out.add("certificate note", cert.citation);
            }
            out.cite("matching equation 6xyz = 2ab - 3b - 10");
            out.emit(as_json, command, digest_of(command, {&x_phi, &x_t}));
            return 0;
        }

        if (family_cmd->parsed()) {
            const ThreefoldModel x_phi = load_model(x_phi_ref);
            const ThreefoldModel x_t = load_model(x_t_ref);
            const auto derivation =
                derive_matching_equation(x_phi, x_t, parse_branch(equation_name));
            const FamilyWitness witness = paper_family(derivation.equation);
            const FamilyCheck check = verify_family(witness);
            out.add("equation", derivation.equation.to_string() + " = 0");
            for (const auto& [name, value] : witness.substitutions) {
                out.add(name, value.to_string());
            }
            out.add("composed", check.composed.to_string());
            out.add("identically zero", check.identically_zero ? "yes" : "no");
            for (const auto& p : check.positivity) {
                out.add(p.parameter + " - " + check.free_variable + " > 0",
                        std::string(p.positive ? "yes" : "no") + " (" + p.argument + ")");
            }
            if (!check.identically_zero) {
                if (auto obstruction = modular_obstruction(derivation.equation)) {
                    out.add("obstruction", obstruction->proof);
                }
            }
            out.cite("family x = 12C^2 - 6, y = z = 2C, a = 6C^2 + 1, b = 24C^2 - 10");
            out.emit(as_json, command, digest_of(command, {&x_phi, &x_t}));
            return check.identically_zero ? 0 : kExitFail;
        }
    } catch (const LoadError& e) {
        std::cerr << "cy3: load error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ValidationError& e) {
        std::cerr << "cy3: validation error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ArgumentError& e) {
        std::cerr << "cy3: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "cy3: " << e.what() << "\n";
        return kExitFail;
    }
    return 0;
}
