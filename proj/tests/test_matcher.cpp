#include "cy3/errors.hpp"
#include "cy3/matcher.hpp"

#include <doctest.h>

using namespace cy3;

namespace {

// Nested-loop oracle for 6xyz - 2ab + 3b + 10 = 0 over (0, box]^5 in
// lexicographic (a, b, x, y, z) order.
std::vector<std::array<long, 5>> oracle(long box) {
    std::vector<std::array<long, 5>> out;
    for (long a = 1; a <= box; ++a)
        for (long b = 1; b <= box; ++b)
            for (long x = 1; x <= box; ++x)
                for (long y = 1; y <= box; ++y)
                    for (long z = 1; z <= box; ++z)
                        if (6 * x * y * z == 2 * a * b - 3 * b - 10) out.push_back({a, b, x, y, z});
    return out;
}

}  // namespace

TEST_CASE("matching equation derivation") {
    const ThreefoldModel phi = model_x_phi();
    const ThreefoldModel t = model_x_t();
    const EquationDerivation paper = derive_matching_equation(phi, t, SumBranch::paper);
    CHECK(paper.lhs_cube == parse_poly("54*x*y*z - 243"));
    CHECK(paper.rhs_cube == parse_poly("18*a*b - 27*b - 333"));
    CHECK(paper.factor == 9);
    CHECK(paper.equation == parse_poly("6*x*y*z - 2*a*b + 3*b + 10"));
    CHECK(paper.difference == MultiPoly(9) * paper.equation);
    CHECK(paper_equation() == paper.equation);
    CHECK_FALSE(modular_obstruction(paper.equation).has_value());

    const EquationDerivation standard = derive_matching_equation(phi, t, SumBranch::standard);
    CHECK(standard.rhs_cube == parse_poly("54*a*b - 81*b - 333"));
    CHECK(standard.equation == parse_poly("6*x*y*z - 6*a*b + 9*b + 10"));
    const auto obstruction = modular_obstruction(standard.equation);
    REQUIRE(obstruction.has_value());
    CHECK(obstruction->prime == 3);
    CHECK(obstruction->residue == 1);
}

TEST_CASE("enumerate_matches agrees with a nested-loop oracle") {
    const MultiPoly eq = paper_equation();
    for (long box : {1L, 5L, 12L}) {
        MatchProblem problem;
        problem.lhs = parse_poly("6*x*y*z");
        problem.rhs = parse_poly("2*a*b - 3*b - 10");
        for (const char* v : {"a", "b", "x", "y", "z"}) problem.box[v] = box;
        CHECK(problem.parameters() == std::vector<std::string>{"x", "y", "z", "a", "b"});
        const auto found = enumerate_matches(problem, 2);
        std::vector<std::array<long, 5>> got;
        for (const auto& s : found) {
            const auto b = s.bindings();
            got.push_back({b.at("a").get_si(), b.at("b").get_si(), b.at("x").get_si(),
                           b.at("y").get_si(), b.at("z").get_si()});
            CHECK(eq.evaluate(b) == 0);
        }
        std::sort(got.begin(), got.end());
        CHECK(got == oracle(box));
    }
}

TEST_CASE("matcher examples") {
    const ThreefoldModel phi = model_x_phi();
    const ThreefoldModel t = model_x_t();
    std::map<std::string, Integer> box;
    for (const char* v : {"a", "b", "x", "y", "z"}) box[v] = 16;
    const auto solutions = enumerate_matches(matching_problem(phi, t, SumBranch::paper, 0, box));
    REQUIRE_FALSE(solutions.empty());
    CHECK(solutions.front().tuple() == "(1, 1, 1, 2, 16)");
    CHECK(solutions.front().common_value == 54 - 243);

    box["x"] = 6;
    box["y"] = 2;
    box["z"] = 2;
    box["a"] = 7;
    box["b"] = 14;
    const auto tight = enumerate_matches(matching_problem(phi, t, SumBranch::paper, 0, box));
    CHECK(std::any_of(tight.begin(), tight.end(),
                      [](const MatchSolution& s) { return s.tuple() == "(6, 2, 2, 7, 14)"; }));

    for (auto& [k, v] : box) v = 8;
    CHECK(enumerate_matches(matching_problem(phi, t, SumBranch::standard, 0, box)).empty());

    MatchProblem bad;
    bad.lhs = parse_poly("x");
    bad.rhs = parse_poly("x + 1");
    bad.box["x"] = 3;
    CHECK_THROWS_AS(bad.validate(), ArgumentError);
    MatchProblem unbounded;
    unbounded.lhs = parse_poly("x");
    unbounded.rhs = parse_poly("y");
    unbounded.box["x"] = 3;
    CHECK_THROWS_AS(unbounded.validate(), ArgumentError);
}

TEST_CASE("unequal c2 pairings make the problem infeasible") {
    MatchProblem p;
    p.lhs = parse_poly("9*k^3");
    p.rhs = parse_poly("9*l^3");
    p.box["k"] = 5;
    p.box["l"] = 5;
    CHECK(enumerate_matches(p).size() == 5);
    p.shared_c2 = {162, 160};
    CHECK(enumerate_matches(p).empty());
}

TEST_CASE("no integral multiples with 9k^3 = 5l^3") {
    MatchProblem p;
    p.lhs = parse_poly("9*k^3");
    p.rhs = parse_poly("5*l^3");
    p.box["k"] = 100;
    p.box["l"] = 100;
    CHECK(enumerate_matches(p).empty());
}

TEST_CASE("results do not depend on the worker count") {
    MatchProblem p;
    p.lhs = parse_poly("6*x*y*z");
    p.rhs = parse_poly("2*a*b - 3*b - 10");
    for (const char* v : {"a", "b", "x", "y", "z"}) p.box[v] = 14;
    const auto reference = enumerate_matches(p, 1);
    for (unsigned w : {2u, 3u, 5u, 8u, 0u}) {
        CHECK(enumerate_matches(p, w) == reference);
    }
}

TEST_CASE("verify_family") {
    const FamilyCheck paper = verify_family(paper_family(paper_equation()));
    CHECK(paper.identically_zero);
    CHECK(paper.composed.is_zero());
    CHECK(paper.free_variable == "C");
    CHECK(paper.all_positive());

    const MultiPoly standard = parse_poly("6*x*y*z - 6*a*b + 9*b + 10");
    const FamilyCheck s = verify_family(paper_family(standard));
    CHECK_FALSE(s.identically_zero);

    FamilyWitness identity;
    identity.equation = parse_poly("x - y");
    identity.substitutions = {{"x", parse_poly("t + 1")}, {"y", parse_poly("t + 1")}};
    CHECK(verify_family(identity).identically_zero);

    FamilyWitness unbound;
    unbound.equation = parse_poly("x - y");
    unbound.substitutions = {{"x", parse_poly("t")}};
    CHECK_THROWS_AS(verify_family(unbound), ArgumentError);

    const ThreefoldModel phi = model_x_phi();
    const ThreefoldModel t = model_x_t();
    const auto family = paper_family(paper_equation()).substitutions;
    const SymbolicChernPair hp = template_chern_pair(phi, "H_phi", SumBranch::paper);
    const SymbolicChernPair ht = template_chern_pair(t, "H_T", SumBranch::paper);
    for (long c = 1; c <= 10; ++c) {
        std::map<std::string, Integer> values;
        for (const auto& [name, poly] : family) {
            values[name] = poly.evaluate({{"C", c}});
        }
        const ChernPair left = hp.evaluate(values);
        const ChernPair right = ht.evaluate(values);
        CHECK(left == right);
        const Integer& x = values.at("x");
        const Integer& a = values.at("a");
        const Integer& b = values.at("b");
        CHECK(left.d3 == 54 * x * values.at("y") * values.at("z") - 243);
        CHECK(right.d3 == 18 * a * b - 27 * b - 333);
        CHECK(left.dc2 == 162);
    }
}

TEST_CASE("certificates") {
    const ThreefoldModel phi = model_x_phi();
    const ThreefoldModel t = model_x_t();
    MatchSolution sol;
    sol.assignment = {{"x", 6}, {"y", 2}, {"z", 2}, {"a", 7}, {"b", 14}};
    sol.common_value = 1053;
    const ConnectivityCertificate cert = build_certificate(sol, phi, "H_phi", t, "H_T");
    CHECK(cert.first == ChernPair{1053, 162});
    CHECK(cert.second == ChernPair{1053, 162});
    CHECK(cert.hilbert.to_string() == "(351*n^3 + 27*n)/2");
    CHECK(cert.hilbert(1) == 189);
    CHECK(cert.hilbert(2) == 1431);
    CHECK(cert.integer_valued);
    CHECK_FALSE(cert.citation.empty());

    CHECK_THROWS_AS(build_certificate(sol, phi, "H_phi", t, "H_T", SumBranch::standard),
                    ContractViolation);
    CHECK_THROWS_AS(certify({9, -6}, {8, -4}, sol), ContractViolation);
    CHECK_NOTHROW(build_certificate(sol, phi, "H_phi", phi, "H_phi"));
}
