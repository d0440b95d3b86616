#include "cy3/matcher.hpp"

#include "cy3/errors.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace cy3 {

std::string to_string(SumBranch branch) {
    return branch == SumBranch::paper ? "paper" : "standard";
}

namespace {

const AmpleTemplate& only_template(const ThreefoldModel& m) {
    if (m.templates.size() != 1) {
        throw ArgumentError(m.name + " must carry exactly one template, has " +
                            std::to_string(m.templates.size()));
    }
    return m.templates.begin()->second;
}

MultiPoly branch_cube(const ThreefoldModel& m, const DivisorExpr& expr, SumBranch branch) {
    const auto [constant, parametric] = split_constant_part(expr);
    const CubeSplit split = cube_split(m.cup, constant, parametric);
    return branch == SumBranch::paper ? split.paper_sum : split.standard_sum;
}

}  // namespace

SymbolicChernPair template_chern_pair(const ThreefoldModel& model, std::string_view name,
                                      SumBranch branch) {
    const DivisorExpr& expr = model.require_template(name).expr;
    return {branch_cube(model, expr, branch), pair(model.c2, expr)};
}

EquationDerivation derive_matching_equation(const ThreefoldModel& x_phi,
                                            const ThreefoldModel& x_t, SumBranch branch) {
    EquationDerivation d;
    d.lhs_cube = cube(x_phi.cup, only_template(x_phi).expr);
    d.rhs_cube = branch_cube(x_t, only_template(x_t).expr, branch);
    d.difference = d.lhs_cube - d.rhs_cube;
    d.factor = d.difference.content();
    if (d.factor == 0) {
        d.factor = 1;
    }
    auto quotient = d.difference.divide_exact(d.factor);
    if (!quotient) {
        throw ContractViolation("content does not divide the difference");
    }
    d.equation = std::move(*quotient);
    return d;
}

MultiPoly paper_equation() {
    return derive_matching_equation(model_x_phi(), model_x_t(), SumBranch::paper).equation;
}

std::optional<ModularObstruction> modular_obstruction(const MultiPoly& equation,
                                                      const std::vector<long>& primes) {
    for (long p : primes) {
        const MultiPoly reduced = fermat_reduce(equation, p);
        if (!reduced.is_zero() && reduced.is_constant()) {
            ModularObstruction o{p, reduced.constant_value(), {}};
            o.proof = equation.to_string() + " = " + to_string(o.residue) + " mod " +
                      std::to_string(p) + " at every integer point, so it never vanishes";
            return o;
        }
    }
    return std::nullopt;
}

std::vector<std::string> MatchProblem::parameters() const {
    auto params = lhs.variables();
    for (auto& v : rhs.variables()) {
        params.push_back(std::move(v));
    }
    return params;
}

void MatchProblem::validate() const {
    const auto left = lhs.variables();
    for (const auto& v : rhs.variables()) {
        if (std::binary_search(left.begin(), left.end(), v)) {
            throw ArgumentError("parameter '" + v + "' occurs on both sides of the match");
        }
    }
    for (const auto& v : parameters()) {
        if (box.find(v) == box.end()) {
            throw ArgumentError("no box bound for parameter '" + v + "'");
        }
    }
}

std::map<std::string, Integer> MatchSolution::bindings() const {
    return {assignment.begin(), assignment.end()};
}

std::string MatchSolution::tuple() const {
    std::string out = "(";
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        out += (i == 0 ? "" : ", ") + to_string(assignment[i].second);
    }
    return out + ")";
}

namespace {

struct SideEntry {
    std::vector<Integer> values;
    Integer value;
};

// Odometer over vars[1..] for first-variable values in [from, to].
void tabulate_chunk(const PolyEvaluator& eval, const Integer& from, const Integer& to,
                    const Integer& lo, const std::vector<Integer>& hi,
                    std::vector<SideEntry>& out) {
    const std::size_t n = hi.size();
    std::vector<Integer> point(n, lo + 1);
    point[0] = from;
    for (;;) {
        out.push_back({point, eval(point)});
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (i == 0) {
                if (point[0] >= to) {
                    return;
                }
                ++point[0];
                break;
            }
            if (point[i] < hi[i]) {
                ++point[i];
                break;
            }
            point[i] = lo + 1;
        }
    }
}

std::vector<SideEntry> tabulate(const MultiPoly& p, const std::vector<std::string>& vars,
                                const Integer& lo, const std::vector<Integer>& hi,
                                unsigned workers) {
    const PolyEvaluator eval(p, vars);
    if (vars.empty()) {
        return {SideEntry{{}, eval({})}};
    }
    for (const auto& bound : hi) {
        if (bound <= lo) {
            return {};
        }
    }
    const Integer first = lo + 1;
    const Integer span = hi[0] - lo;
    Integer chunks = std::max(1u, workers);
    if (chunks > span) {
        chunks = span;
    }
    const std::size_t count = chunks.get_ui();
    std::vector<std::vector<SideEntry>> parts(count);
    std::vector<std::thread> threads;
    for (std::size_t c = 0; c < count; ++c) {
        const Integer from = first + span * c / chunks;
        const Integer to = first + span * (c + 1) / chunks - 1;
        auto job = [&, from, to, c] { tabulate_chunk(eval, from, to, lo, hi, parts[c]); };
        if (count == 1) {
            job();
        } else {
            threads.emplace_back(job);
        }
    }
    for (auto& t : threads) {
        t.join();
    }
    std::vector<SideEntry> all;
    for (auto& part : parts) {
        std::move(part.begin(), part.end(), std::back_inserter(all));
    }
    return all;
}

}  // namespace

std::vector<MatchSolution> enumerate_matches(const MatchProblem& problem, unsigned workers) {
    problem.validate();
    if (problem.shared_c2.first != problem.shared_c2.second) {
        return {};
    }
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    const auto left_vars = problem.lhs.variables();
    const auto right_vars = problem.rhs.variables();
    auto bounds = [&](const std::vector<std::string>& vars) {
        std::vector<Integer> hi;
        for (const auto& v : vars) {
            hi.push_back(problem.box.at(v));
        }
        return hi;
    };
    const auto left =
        tabulate(problem.lhs, left_vars, problem.lower_bound, bounds(left_vars), workers);
    const auto right =
        tabulate(problem.rhs, right_vars, problem.lower_bound, bounds(right_vars), workers);

    std::map<Integer, std::vector<std::size_t>> by_value;
    for (std::size_t i = 0; i < left.size(); ++i) {
        by_value[left[i].value].push_back(i);
    }
    std::vector<MatchSolution> solutions;
    for (const auto& r : right) {
        auto it = by_value.find(r.value);
        if (it == by_value.end()) {
            continue;
        }
        for (std::size_t i : it->second) {
            MatchSolution s;
            for (std::size_t k = 0; k < left_vars.size(); ++k) {
                s.assignment.emplace_back(left_vars[k], left[i].values[k]);
            }
            for (std::size_t k = 0; k < right_vars.size(); ++k) {
                s.assignment.emplace_back(right_vars[k], r.values[k]);
            }
            s.common_value = r.value;
            solutions.push_back(std::move(s));
        }
    }
    std::sort(solutions.begin(), solutions.end(), [](const MatchSolution& a, const MatchSolution& b) {
        for (std::size_t k = 0; k < a.assignment.size(); ++k) {
            if (a.assignment[k].second != b.assignment[k].second) {
                return a.assignment[k].second < b.assignment[k].second;
            }
        }
        return false;
    });
    return solutions;
}

MatchProblem matching_problem(const ThreefoldModel& x_phi, const ThreefoldModel& x_t,
                              SumBranch branch, const Integer& lower_bound,
                              std::map<std::string, Integer> box) {
    const AmpleTemplate& t1 = only_template(x_phi);
    const AmpleTemplate& t2 = only_template(x_t);
    MatchProblem problem;
    problem.lhs = cube(x_phi.cup, t1.expr);
    problem.rhs = branch_cube(x_t, t2.expr, branch);
    const MultiPoly c2_left = pair(x_phi.c2, t1.expr);
    const MultiPoly c2_right = pair(x_t.c2, t2.expr);
    if (!c2_left.is_constant() || !c2_right.is_constant()) {
        throw ArgumentError("c2 pairings of the templates depend on the parameters: " +
                            c2_left.to_string() + ", " + c2_right.to_string());
    }
    problem.shared_c2 = {c2_left.constant_value(), c2_right.constant_value()};
    problem.lower_bound = lower_bound;
    problem.box = std::move(box);
    return problem;
}

FamilyWitness paper_family(const MultiPoly& equation) {
    return {{{"x", parse_poly("12*C^2 - 6")},
             {"y", parse_poly("2*C")},
             {"z", parse_poly("2*C")},
             {"a", parse_poly("6*C^2 + 1")},
             {"b", parse_poly("24*C^2 - 10")}},
            equation};
}

bool FamilyCheck::all_positive() const {
    return !positivity.empty() &&
           std::all_of(positivity.begin(), positivity.end(),
                       [](const PositivityCheck& p) { return p.positive; });
}

namespace {

// margin(C) > 0 for every integer C >= 1: positive leading coefficient, and
// positive at 1..B where B bounds every real root (Cauchy).
PositivityCheck check_positivity(const std::string& parameter, const MultiPoly& margin,
                                 const std::string& free) {
    PositivityCheck check{parameter, margin, false, {}};
    const auto coeffs = margin.univariate_coefficients(free);
    std::size_t degree = coeffs.size() - 1;
    while (degree > 0 && coeffs[degree] == 0) {
        --degree;
    }
    const Integer& lead = coeffs[degree];
    if (lead <= 0) {
        check.argument = "leading coefficient " + to_string(lead) + " is not positive";
        return check;
    }
    Integer max_ratio = 0;
    for (std::size_t i = 0; i < degree; ++i) {
        Integer ratio;
        mpz_cdiv_q(ratio.get_mpz_t(), Integer(abs(coeffs[i])).get_mpz_t(), lead.get_mpz_t());
        max_ratio = std::max(max_ratio, ratio);
    }
    const Integer root_bound = max_ratio + 1;
    if (root_bound > 1000000) {
        check.argument = "root bound " + to_string(root_bound) + " too large to sweep";
        return check;
    }
    const unsigned long last = std::max<unsigned long>(root_bound.get_ui(), 1);
    for (unsigned long c = 1; c <= last; ++c) {
        const Integer value = margin.evaluate({{free, Integer(c)}});
        if (value <= 0) {
            check.argument = "margin is " + to_string(value) + " at " + free + " = " +
                             std::to_string(c);
            return check;
        }
    }
    check.positive = true;
    check.argument = "leading coefficient " + to_string(lead) + " > 0, positive for " + free +
                     " = 1.." + std::to_string(last) + ", no real root beyond " +
                     to_string(root_bound);
    return check;
}

}  // namespace

FamilyCheck verify_family(const FamilyWitness& witness) {
    for (const auto& v : witness.equation.variables()) {
        if (witness.substitutions.find(v) == witness.substitutions.end()) {
            throw ArgumentError("family leaves parameter '" + v + "' unbound");
        }
    }
    FamilyCheck check;
    check.composed = witness.equation.substitute(witness.substitutions);
    check.identically_zero = check.composed.is_zero();

    std::set<std::string> free;
    for (const auto& [name, value] : witness.substitutions) {
        for (auto& v : value.variables()) {
            free.insert(std::move(v));
        }
    }
    if (free.size() == 1) {
        check.free_variable = *free.begin();
        const MultiPoly c = MultiPoly::variable(check.free_variable);
        for (const auto& [name, value] : witness.substitutions) {
            check.positivity.push_back(check_positivity(name, value - c, check.free_variable));
        }
    }
    return check;
}

ConnectivityCertificate certify(const ChernPair& first, const ChernPair& second,
                                const MatchSolution& solution) {
    if (!same_hilbert_scheme(first, second)) {
        throw ContractViolation("Chern pairs " + first.to_string() + " and " +
                                second.to_string() + " differ; no common Hilbert polynomial");
    }
    HilbertPolynomial hp(first);
    const bool integral = is_integer_valued(hp);
    if (!integral) {
        throw ContractViolation("Hilbert polynomial " + hp.to_string() +
                                " is not integer-valued");
    }
    return {"",
            "",
            first,
            second,
            std::move(hp),
            integral,
            solution,
            "Equal (H^3, H.c2) give equal Hilbert polynomials; the Hilbert scheme with that "
            "polynomial is connected (Hartshorne), so the two embedded threefolds are joined by "
            "projective flat deformation. Ampleness of both templates is assumed for parameters "
            "above the unquantified bound C, not verified."};
}

ConnectivityCertificate build_certificate(const MatchSolution& solution,
                                          const ThreefoldModel& m1, std::string_view template1,
                                          const ThreefoldModel& m2, std::string_view template2,
                                          SumBranch branch) {
    const auto values = solution.bindings();
    const ChernPair first = template_chern_pair(m1, template1, branch).evaluate(values);
    const ChernPair second = template_chern_pair(m2, template2, branch).evaluate(values);
    ConnectivityCertificate cert = certify(first, second, solution);
    cert.first_model = m1.name + ":" + std::string(template1);
    cert.second_model = m2.name + ":" + std::string(template2);
    return cert;
}

}  // namespace cy3
