#ifndef CY3_MODELS_HPP
#define CY3_MODELS_HPP

#include "cy3/chern.hpp"
#include "cy3/forms.hpp"
#include "cy3/matrix.hpp"

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace cy3 {

/// Named surfaces whose (K^2, e) feed the surface rule.
namespace surfaces {
SurfaceInvariants projective_plane();             // (9, 3)
SurfaceInvariants hirzebruch_f1();                // (8, 4)
SurfaceInvariants abelian();                      // (0, 0)
SurfaceInvariants rational_elliptic();            // relatively minimal, (0, 12)
SurfaceInvariants rational_elliptic_blown_up_3(); // (-3, 15)
std::vector<SurfaceInvariants> catalog();
}  // namespace surfaces

/// Divisor with parametric coefficients, ample once every parameter exceeds
/// an unquantified constant.
struct AmpleTemplate {
    std::string name;
    DivisorExpr expr;
    /// Exactly the variables occurring in expr, sorted.
    std::vector<std::string> params;
    std::string positivity;

    static AmpleTemplate make(std::string name, DivisorExpr expr);
};

struct ThreefoldModel {
    std::string name;
    Basis basis;
    TrilinearForm cup;
    LinearForm c2;
    /// Surface provenance for basis labels or extra classes.
    std::map<std::string, SurfaceInvariants> surfaces;
    std::vector<std::string> params;
    std::map<std::string, AmpleTemplate> templates;
    /// Classes tracked only through their ChernPair.
    std::map<std::string, ChernPair> extra_classes;

    ThreefoldModel(std::string name, Basis basis);

    /// Throws ValidationError when a surface entry disagrees with the cup
    /// product / c2 (or extra-class pair), or templates and params disagree.
    void validate() const;

    const AmpleTemplate& require_template(std::string_view name) const;
    SymbolicChernPair chern_pair(const DivisorExpr& d) const;
};

ThreefoldModel model_x_phi();
ThreefoldModel model_x_t();

std::string exceptional_label(int i, int j, int k);

/// True iff all 27 exceptional labels E000..E222 are in the basis.
bool has_exceptional_grid(const Basis& basis);

using ExceptionalIndex = std::array<int, 3>;

/// Disjoint index sets Lambda, Lambda' in {0,1,2}^3 with cardinalities divisible by 3.
class ExceptionalCombo {
  public:
    /// Throws ValidationError on overlap, out-of-range indices or bad cardinalities.
    ExceptionalCombo(std::set<ExceptionalIndex> lambda, std::set<ExceptionalIndex> lambda_prime);

    const std::set<ExceptionalIndex>& lambda() const { return lambda_; }
    const std::set<ExceptionalIndex>& lambda_prime() const { return lambda_prime_; }

  private:
    std::set<ExceptionalIndex> lambda_;
    std::set<ExceptionalIndex> lambda_prime_;
};

/// (1/3)(sum over Lambda of E + 2 * sum over Lambda' of E), as numerator / 3.
ScaledDivisor t_class(const Basis& basis, const ExceptionalCombo& combo);

/// Closed form of T.c2 when every exceptional class pairs to -6.
Integer t_class_c2_formula(std::size_t lambda_size, std::size_t lambda_prime_size);

struct GeneratorRow {
    std::string family;
    std::string detail;
    Integer value;
    Integer expected;
    bool divisible;
};

struct GeneratorTable {
    std::vector<GeneratorRow> rows;
    bool all_divisible = true;
    bool all_match_expected = true;
};

/// c2 values of the generator families D_ijl, E_ijk and T_{Lambda,Lambda'}
/// (one T row per admissible cardinality pair). Requires the exceptional
/// grid and a "D" class with surface provenance; throws ArgumentError otherwise.
GeneratorTable generator_c2_table(const ThreefoldModel& model);

struct LabeledMatrix {
    std::vector<std::string> labels;
    IntMatrix matrix;
};

/// Intersection matrix of {0}xE, Ex{0}, the diagonal and the graph of the
/// order-3 automorphism on E x E.
LabeledMatrix ns_e2_gram();

struct ModelInvariants {
    enum class Cube { divisible, not_divisible, unknown };

    std::string model;
    bool c2_divisible_by_6 = true;
    std::vector<std::string> c2_witnesses;
    Cube cube_mod3 = Cube::unknown;
    std::vector<std::string> cube_witnesses;
    std::string cube_reason;
};

/// Divisibility of the c2 form by 6 on the declared generators (basis, extra
/// classes, T family when present) and of the cubic form by 3.
ModelInvariants topological_invariants(const ThreefoldModel& model);

std::string to_string(ModelInvariants::Cube cube);

struct DistinguishVerdict {
    bool distinguished = false;
    /// "distinguished", "not distinguished" or "inconclusive".
    std::string verdict;
    ModelInvariants first;
    ModelInvariants second;
    std::vector<std::string> witnesses;

    std::string summary() const;
};

DistinguishVerdict distinguish(const ThreefoldModel& m1, const ThreefoldModel& m2);

}  // namespace cy3

#endif
