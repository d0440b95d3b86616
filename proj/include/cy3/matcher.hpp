#ifndef CY3_MATCHER_HPP
#define CY3_MATCHER_HPP

#include "cy3/chern.hpp"
#include "cy3/models.hpp"
#include "cy3/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cy3 {

/// Which expansion of the second template's cube enters the matching equation.
enum class SumBranch { paper, standard };

std::string to_string(SumBranch branch);

/// (H^3, H.c2) of a model template, with H^3 taken from the chosen expansion
/// of (P + L)^3, P the constant-coefficient part and L the parametric part.
SymbolicChernPair template_chern_pair(const ThreefoldModel& model, std::string_view name,
                                      SumBranch branch);

struct EquationDerivation {
    MultiPoly lhs_cube;
    MultiPoly rhs_cube;
    MultiPoly difference;
    /// Content of the difference, divided out exactly.
    Integer factor;
    MultiPoly equation;
};

/// Equates cube(H_phi) on x_phi with the chosen expansion of cube(H_T) on x_t
/// and divides out the content.
EquationDerivation derive_matching_equation(const ThreefoldModel& x_phi,
                                            const ThreefoldModel& x_t, SumBranch branch);

/// 6*x*y*z - 2*a*b + 3*b + 10, derived from the built-in models.
MultiPoly paper_equation();

/// A prime modulo which the equation reduces to a nonzero constant, so it
/// has no integer solutions at all.
struct ModularObstruction {
    Integer prime;
    Integer residue;
    std::string proof;
};

std::optional<ModularObstruction> modular_obstruction(const MultiPoly& equation,
                                                      const std::vector<long>& primes = {2, 3, 5,
                                                                                         7});

struct MatchProblem {
    MultiPoly lhs;
    MultiPoly rhs;
    /// c2 pairings of the two sides; unequal values make the problem infeasible.
    std::pair<Integer, Integer> shared_c2{0, 0};
    /// Every parameter must be strictly greater than this.
    Integer lower_bound = 0;
    /// Inclusive upper bound per parameter.
    std::map<std::string, Integer> box;

    /// lhs variables followed by rhs variables, each sorted by name.
    std::vector<std::string> parameters() const;
    /// Throws ArgumentError on shared parameter names or a missing box bound.
    void validate() const;
};

struct MatchSolution {
    std::vector<std::pair<std::string, Integer>> assignment;
    Integer common_value;

    std::map<std::string, Integer> bindings() const;
    /// "(1, 1, 1, 2, 16)"
    std::string tuple() const;

    friend bool operator==(const MatchSolution&, const MatchSolution&) = default;
};

/// All assignments in (lower_bound, box] with lhs == rhs, sorted
/// lexicographically in parameters() order. `workers` = 0 picks the
/// hardware concurrency; the result does not depend on it.
std::vector<MatchSolution> enumerate_matches(const MatchProblem& problem, unsigned workers = 0);

/// Problem equating cube(template1) with the chosen expansion of cube(template2).
MatchProblem matching_problem(const ThreefoldModel& x_phi, const ThreefoldModel& x_t,
                              SumBranch branch, const Integer& lower_bound,
                              std::map<std::string, Integer> box);

struct FamilyWitness {
    std::map<std::string, MultiPoly> substitutions;
    MultiPoly equation;
};

/// x = 12C^2 - 6, y = z = 2C, a = 6C^2 + 1, b = 24C^2 - 10.
FamilyWitness paper_family(const MultiPoly& equation);

struct PositivityCheck {
    std::string parameter;
    /// substituted value minus the free variable
    MultiPoly margin;
    bool positive = false;
    std::string argument;
};

struct FamilyCheck {
    bool identically_zero = false;
    MultiPoly composed;
    std::string free_variable;
    /// One entry per substituted parameter when there is a single free variable.
    std::vector<PositivityCheck> positivity;
    bool all_positive() const;
};

/// Throws ArgumentError if an equation variable has no substitution.
FamilyCheck verify_family(const FamilyWitness& witness);

struct ConnectivityCertificate {
    std::string first_model;
    std::string second_model;
    ChernPair first;
    ChernPair second;
    HilbertPolynomial hilbert;
    bool integer_valued;
    MatchSolution solution;
    std::string citation;
};

/// Throws ContractViolation unless the pairs coincide.
ConnectivityCertificate certify(const ChernPair& first, const ChernPair& second,
                                const MatchSolution& solution);

/// Evaluates both templates at the solution (cubes from `branch`) and
/// certifies the resulting pairs.
ConnectivityCertificate build_certificate(const MatchSolution& solution,
                                          const ThreefoldModel& m1, std::string_view template1,
                                          const ThreefoldModel& m2, std::string_view template2,
                                          SumBranch branch = SumBranch::paper);

}  // namespace cy3

#endif
