#include "cy3/models.hpp"

#include "cy3/errors.hpp"

#include <algorithm>

namespace cy3 {

namespace surfaces {

SurfaceInvariants projective_plane() { return {"P2", 9, 3}; }
SurfaceInvariants hirzebruch_f1() { return {"F1", 8, 4}; }
SurfaceInvariants abelian() { return {"abelian", 0, 0}; }
SurfaceInvariants rational_elliptic() { return {"rational elliptic", 0, 12}; }
SurfaceInvariants rational_elliptic_blown_up_3() {
    return {"rational elliptic blown up at 3 points", -3, 15};
}

std::vector<SurfaceInvariants> catalog() {
    return {projective_plane(), hirzebruch_f1(), abelian(), rational_elliptic(),
            rational_elliptic_blown_up_3()};
}

}  // namespace surfaces

namespace {

const char* const kPositivityNote = "ample for all params > C, C unquantified";

}  // namespace

AmpleTemplate AmpleTemplate::make(std::string name, DivisorExpr expr) {
    auto params = expr.parameters();
    return {std::move(name), std::move(expr), std::move(params), kPositivityNote};
}

ThreefoldModel::ThreefoldModel(std::string model_name, Basis model_basis)
    : name(std::move(model_name)), basis(model_basis), cup(model_basis), c2(model_basis) {}

void ThreefoldModel::validate() const {
    if (!(cup.basis() == basis) || !(c2.basis() == basis)) {
        throw ValidationError(name + ": forms are not defined over the model basis");
    }
    for (const auto& [label, surface] : surfaces) {
        const ChernPair expected = chern_pair_of_surface(surface);
        ChernPair actual;
        if (basis.contains(label)) {
            actual = {cup(label, label, label), c2(label)};
        } else if (auto it = extra_classes.find(label); it != extra_classes.end()) {
            actual = it->second;
        } else {
            throw ValidationError(name + ": surface entry '" + label +
                                  "' names neither a basis label nor an extra class");
        }
        if (actual != expected) {
            throw ValidationError(name + ": class " + label + " has (D^3, D.c2) = " +
                                  actual.to_string() + " but its surface invariants (K^2, e) = (" +
                                  to_string(surface.k_squared) + ", " + to_string(surface.euler) +
                                  ") require " + expected.to_string());
        }
    }
    std::set<std::string> used;
    for (const auto& [key, tmpl] : templates) {
        if (!(tmpl.expr.basis() == basis)) {
            throw ValidationError(name + ": template " + key + " uses a foreign basis");
        }
        if (tmpl.params != tmpl.expr.parameters()) {
            throw ValidationError(name + ": template " + key +
                                  " declares parameters that differ from its coefficients");
        }
        used.insert(tmpl.params.begin(), tmpl.params.end());
    }
    const std::set<std::string> declared(params.begin(), params.end());
    if (declared.size() != params.size()) {
        throw ValidationError(name + ": duplicate entries in params");
    }
    if (declared != used) {
        throw ValidationError(name + ": params must be exactly the template parameters");
    }
}

const AmpleTemplate& ThreefoldModel::require_template(std::string_view key) const {
    auto it = templates.find(std::string(key));
    if (it == templates.end()) {
        throw ArgumentError(name + " has no template named '" + std::string(key) + "'");
    }
    return it->second;
}

SymbolicChernPair ThreefoldModel::chern_pair(const DivisorExpr& d) const {
    return {cube(cup, d), pair(c2, d)};
}

std::string exceptional_label(int i, int j, int k) {
    return "E" + std::to_string(i) + std::to_string(j) + std::to_string(k);
}

bool has_exceptional_grid(const Basis& basis) {
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) {
                if (!basis.contains(exceptional_label(i, j, k))) {
                    return false;
                }
            }
        }
    }
    return true;
}

ThreefoldModel model_x_phi() {
    std::vector<std::string> labels;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) {
                labels.push_back(exceptional_label(i, j, k));
            }
        }
    }
    labels.insert(labels.end(), {"L1", "L2", "L3"});
    ThreefoldModel m("X_phi", Basis(labels));

    DivisorExpr h(m.basis);
    for (std::size_t e = 0; e < 27; ++e) {
        const std::string& label = labels[e];
        // exceptional planes are pairwise disjoint and miss every L_i
        m.cup.insert(label, label, label, 9);
        m.c2.set(label, -6);
        m.surfaces.emplace(label, surfaces::projective_plane());
        h.add(label, MultiPoly(-1));
    }
    m.cup.insert("L1", "L2", "L3", 9);
    for (const char* l : {"L1", "L2", "L3"}) {
        m.surfaces.emplace(l, surfaces::abelian());
    }
    m.extra_classes.emplace("D", ChernPair{-3, 18});
    m.surfaces.emplace("D", surfaces::rational_elliptic_blown_up_3());

    h.add("L1", MultiPoly::variable("x"));
    h.add("L2", MultiPoly::variable("y"));
    h.add("L3", MultiPoly::variable("z"));
    m.templates.emplace("H_phi", AmpleTemplate::make("H_phi", std::move(h)));
    m.params = {"x", "y", "z"};
    m.validate();
    return m;
}

ThreefoldModel model_x_t() {
    const std::vector<std::string> ms = {"M0", "M1", "M2"};
    const std::vector<std::string> ss = {"S0", "S1", "S2"};
    std::vector<std::string> labels = ms;
    labels.insert(labels.end(), ss.begin(), ss.end());
    labels.insert(labels.end(), {"A1", "A2"});
    ThreefoldModel m("X_T", Basis(labels));

    for (const auto& s : ss) {
        m.cup.insert(s, s, s, -3);
        m.cup.insert(s, "A1", "A2", 3);
        m.c2.set(s, 18);
        m.surfaces.emplace(s, surfaces::rational_elliptic_blown_up_3());
    }
    for (const auto& mi : ms) {
        // M_i^3 = 0
        m.cup.insert(mi, mi, "A2", -3);
        m.c2.set(mi, 12);
        m.surfaces.emplace(mi, surfaces::rational_elliptic());
        for (const auto& s : ss) {
            m.cup.insert(mi, mi, s, -1);
            m.cup.insert(mi, s, s, -1);
            m.cup.insert(mi, s, "A2", 1);
        }
    }
    for (const char* a : {"A1", "A2"}) {
        m.surfaces.emplace(a, surfaces::abelian());
    }
    m.extra_classes.emplace("F", ChernPair{8, -4});
    m.surfaces.emplace("F", surfaces::hirzebruch_f1());

    DivisorExpr h(m.basis);
    for (const auto& mi : ms) {
        h.add(mi, MultiPoly(3));
    }
    for (const auto& s : ss) {
        h.add(s, MultiPoly(1));
    }
    h.add("A1", MultiPoly::variable("a"));
    h.add("A2", MultiPoly::variable("b"));
    m.templates.emplace("H_T", AmpleTemplate::make("H_T", std::move(h)));
    m.params = {"a", "b"};
    m.validate();
    return m;
}

ExceptionalCombo::ExceptionalCombo(std::set<ExceptionalIndex> lambda,
                                   std::set<ExceptionalIndex> lambda_prime)
    : lambda_(std::move(lambda)), lambda_prime_(std::move(lambda_prime)) {
    for (const auto* set : {&lambda_, &lambda_prime_}) {
        for (const auto& idx : *set) {
            for (int v : idx) {
                if (v < 0 || v > 2) {
                    throw ValidationError("exceptional index out of {0,1,2}");
                }
            }
        }
    }
    for (const auto& idx : lambda_) {
        if (lambda_prime_.count(idx) != 0) {
            throw ValidationError("Lambda and Lambda' overlap at " +
                                  exceptional_label(idx[0], idx[1], idx[2]));
        }
    }
    if (lambda_.size() % 3 != 0) {
        throw ValidationError("|Lambda| = " + std::to_string(lambda_.size()) +
                              " is not divisible by 3");
    }
    if (lambda_prime_.size() % 3 != 0) {
        throw ValidationError("|Lambda'| = " + std::to_string(lambda_prime_.size()) +
                              " is not divisible by 3");
    }
}

ScaledDivisor t_class(const Basis& basis, const ExceptionalCombo& combo) {
    DivisorExpr numerator(basis);
    for (const auto& [i, j, k] : combo.lambda()) {
        numerator.add(exceptional_label(i, j, k), MultiPoly(1));
    }
    for (const auto& [i, j, k] : combo.lambda_prime()) {
        numerator.add(exceptional_label(i, j, k), MultiPoly(2));
    }
    return {"T(|L|=" + std::to_string(combo.lambda().size()) +
                ",|L'|=" + std::to_string(combo.lambda_prime().size()) + ")",
            std::move(numerator), 3};
}

Integer t_class_c2_formula(std::size_t lambda_size, std::size_t lambda_prime_size) {
    return Integer(-2) * Integer(static_cast<unsigned long>(lambda_size)) -
           Integer(4) * Integer(static_cast<unsigned long>(lambda_prime_size));
}

namespace {

std::vector<ExceptionalIndex> grid_indices() {
    std::vector<ExceptionalIndex> all;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) {
                all.push_back({i, j, k});
            }
        }
    }
    return all;
}

// Lambda takes the first n grid points, Lambda' the following n'.
std::vector<ExceptionalCombo> t_family_representatives() {
    const auto all = grid_indices();
    std::vector<ExceptionalCombo> combos;
    for (std::size_t n = 0; n <= 27; n += 3) {
        for (std::size_t np = 0; n + np <= 27; np += 3) {
            combos.emplace_back(std::set<ExceptionalIndex>(all.begin(), all.begin() + n),
                                std::set<ExceptionalIndex>(all.begin() + n, all.begin() + n + np));
        }
    }
    return combos;
}

}  // namespace

GeneratorTable generator_c2_table(const ThreefoldModel& model) {
    if (!has_exceptional_grid(model.basis)) {
        throw ArgumentError(model.name + " lacks the 27 exceptional classes E000..E222");
    }
    auto d_surface = model.surfaces.find("D");
    if (d_surface == model.surfaces.end()) {
        throw ArgumentError(model.name + " has no surface provenance for the class D");
    }
    GeneratorTable table;
    auto add_row = [&table](std::string family, std::string detail, Integer value,
                            Integer expected) {
        const bool ok = divides(6, value);
        table.all_divisible = table.all_divisible && ok;
        table.all_match_expected = table.all_match_expected && value == expected;
        table.rows.push_back({std::move(family), std::move(detail), std::move(value),
                              std::move(expected), ok});
    };

    const ChernPair d_pair = chern_pair_of_surface(d_surface->second);
    add_row("D_ijl", "surface (K^2, e) = (" + to_string(d_surface->second.k_squared) + ", " +
                         to_string(d_surface->second.euler) + ")",
            d_pair.dc2, 18);

    // every E_ijk must agree; report the first disagreement if any
    Integer e_value = model.c2(exceptional_label(0, 0, 0));
    std::string e_detail = "all 27 classes";
    for (const auto& [i, j, k] : grid_indices()) {
        const Integer v = model.c2(exceptional_label(i, j, k));
        if (v != e_value || !divides(6, v)) {
            e_value = v;
            e_detail = exceptional_label(i, j, k);
            break;
        }
    }
    add_row("E_ijk", e_detail, e_value, -6);

    for (const auto& combo : t_family_representatives()) {
        const ScaledDivisor t = t_class(model.basis, combo);
        const auto report = linear_divisibility(model.c2, {t}, 6);
        add_row("T", "|Lambda| = " + std::to_string(combo.lambda().size()) +
                         ", |Lambda'| = " + std::to_string(combo.lambda_prime().size()),
                report.witnesses.front().value,
                t_class_c2_formula(combo.lambda().size(), combo.lambda_prime().size()));
    }
    return table;
}

LabeledMatrix ns_e2_gram() {
    return {{"{0}xE", "Ex{0}", "Delta", "Gamma"},
            IntMatrix{{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 3}, {1, 1, 3, 0}}};
}

std::string to_string(ModelInvariants::Cube cube) {
    switch (cube) {
        case ModelInvariants::Cube::divisible:
            return "divisible";
        case ModelInvariants::Cube::not_divisible:
            return "not divisible";
        case ModelInvariants::Cube::unknown:
            return "unknown";
    }
    return "unknown";
}

ModelInvariants topological_invariants(const ThreefoldModel& model) {
    ModelInvariants inv;
    inv.model = model.name;

    std::vector<ScaledDivisor> generators;
    for (const auto& label : model.basis.labels()) {
        generators.push_back({label, DivisorExpr::label(model.basis, label), 1});
    }
    if (has_exceptional_grid(model.basis)) {
        for (const auto& combo : t_family_representatives()) {
            generators.push_back(t_class(model.basis, combo));
        }
    }
    const auto report = linear_divisibility(model.c2, generators, 6);
    for (const auto& w : report.witnesses) {
        if (!w.divisible) {
            inv.c2_witnesses.push_back(w.generator + ".c2 = " + to_string(w.value));
        }
    }
    for (const auto& [label, p] : model.extra_classes) {
        if (!divides(6, p.dc2)) {
            inv.c2_witnesses.push_back(label + ".c2 = " + to_string(p.dc2));
        }
    }
    inv.c2_divisible_by_6 = inv.c2_witnesses.empty();

    for (const auto& label : model.basis.labels()) {
        const Integer v = model.cup(label, label, label);
        if (!divides(3, v)) {
            inv.cube_witnesses.push_back(label + "^3 = " + to_string(v));
        }
    }
    for (const auto& [label, p] : model.extra_classes) {
        if (!divides(3, p.d3)) {
            inv.cube_witnesses.push_back(label + "^3 = " + to_string(p.d3));
        }
    }
    if (inv.cube_witnesses.empty() && !cubic_divisibility_fermat(model.cup, 3)) {
        inv.cube_witnesses.push_back("cubic form on the basis span: " +
                                     fermat_reduce(generic_cubic(model.cup), 3).to_string() +
                                     " != 0 mod 3");
    }
    if (!inv.cube_witnesses.empty()) {
        inv.cube_mod3 = ModelInvariants::Cube::not_divisible;
        inv.cube_reason = "explicit class with D^3 != 0 mod 3";
    } else if (inv.c2_divisible_by_6) {
        inv.cube_mod3 = ModelInvariants::Cube::divisible;
        inv.cube_reason = "6 | D.c2 on all generators and chi(O(D)) in Z imply 3 | D^3";
    } else {
        inv.cube_mod3 = ModelInvariants::Cube::unknown;
        inv.cube_reason = "no witness and the Riemann-Roch implication does not apply";
    }
    return inv;
}

DistinguishVerdict distinguish(const ThreefoldModel& m1, const ThreefoldModel& m2) {
    DistinguishVerdict v;
    v.first = topological_invariants(m1);
    v.second = topological_invariants(m2);
    const bool c2_differs = v.first.c2_divisible_by_6 != v.second.c2_divisible_by_6;
    const bool cube_known = v.first.cube_mod3 != ModelInvariants::Cube::unknown &&
                            v.second.cube_mod3 != ModelInvariants::Cube::unknown;
    const bool cube_differs = cube_known && v.first.cube_mod3 != v.second.cube_mod3;
    v.distinguished = c2_differs || cube_differs;
    if (v.distinguished) {
        v.verdict = "distinguished";
    } else if (!cube_known) {
        v.verdict = "inconclusive";
    } else {
        v.verdict = "not distinguished";
    }
    if (c2_differs) {
        const auto& failing = v.first.c2_divisible_by_6 ? v.second : v.first;
        for (const auto& w : failing.c2_witnesses) {
            v.witnesses.push_back(w + " (mod 6 fails)");
        }
    }
    if (cube_differs) {
        const auto& failing =
            v.first.cube_mod3 == ModelInvariants::Cube::not_divisible ? v.first : v.second;
        for (const auto& w : failing.cube_witnesses) {
            v.witnesses.push_back(w + " (mod 3 fails)");
        }
    }
    return v;
}

std::string DistinguishVerdict::summary() const {
    std::string out = verdict;
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
        out += (i == 0 ? ": " : ", ") + witnesses[i];
    }
    return out;
}

}  // namespace cy3
