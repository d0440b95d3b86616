#include "cy3/forms.hpp"

#include "cy3/errors.hpp"

#include <algorithm>

namespace cy3 {

namespace {

void require_same_basis(const Basis& a, const Basis& b, const char* op) {
    if (!(a == b)) {
        throw StructuralError(std::string(op) + ": operands are defined over different bases");
    }
}

}  // namespace

Basis::Basis(std::vector<std::string> labels) {
    auto index = std::make_shared<std::map<std::string, std::size_t, std::less<>>>();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].empty()) {
            throw ArgumentError("empty basis label");
        }
        if (!index->emplace(labels[i], i).second) {
            throw ArgumentError("duplicate basis label '" + labels[i] + "'");
        }
    }
    labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
    index_ = std::move(index);
}

std::optional<std::size_t> Basis::index_of(std::string_view label) const {
    auto it = index_->find(label);
    if (it == index_->end()) {
        return std::nullopt;
    }
    return it->second;
}

std::size_t Basis::require(std::string_view label) const {
    auto index = index_of(label);
    if (!index) {
        throw ArgumentError("unknown basis label '" + std::string(label) + "'");
    }
    return *index;
}

DivisorExpr DivisorExpr::label(const Basis& basis, std::string_view label) {
    DivisorExpr d(basis);
    d.add(label, MultiPoly(1));
    return d;
}

MultiPoly DivisorExpr::coefficient(std::string_view label) const {
    auto it = coeffs_.find(basis_.require(label));
    return it == coeffs_.end() ? MultiPoly() : it->second;
}

std::vector<std::string> DivisorExpr::parameters() const {
    std::vector<std::string> names;
    for (const auto& [index, c] : coeffs_) {
        for (auto& v : c.variables()) {
            names.push_back(std::move(v));
        }
    }
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

void DivisorExpr::add_at(std::size_t index, const MultiPoly& coefficient) {
    MultiPoly& slot = coeffs_[index];
    slot += coefficient;
    if (slot.is_zero()) {
        coeffs_.erase(index);
    }
}

DivisorExpr& DivisorExpr::add(std::string_view label, const MultiPoly& coefficient) {
    add_at(basis_.require(label), coefficient);
    return *this;
}

DivisorExpr& DivisorExpr::operator+=(const DivisorExpr& other) {
    require_same_basis(basis_, other.basis_, "divisor addition");
    for (const auto& [index, c] : other.coeffs_) {
        add_at(index, c);
    }
    return *this;
}

DivisorExpr& DivisorExpr::operator-=(const DivisorExpr& other) {
    require_same_basis(basis_, other.basis_, "divisor subtraction");
    for (const auto& [index, c] : other.coeffs_) {
        add_at(index, -c);
    }
    return *this;
}

DivisorExpr operator*(const MultiPoly& scalar, const DivisorExpr& d) {
    DivisorExpr out(d.basis_);
    for (const auto& [index, c] : d.coeffs_) {
        out.add_at(index, scalar * c);
    }
    return out;
}

DivisorExpr DivisorExpr::substitute(const std::map<std::string, MultiPoly>& bindings) const {
    DivisorExpr out(basis_);
    for (const auto& [index, c] : coeffs_) {
        out.add_at(index, c.substitute(bindings));
    }
    return out;
}

std::string DivisorExpr::to_string() const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [index, c] : coeffs_) {
        const std::string& label = basis_.labels()[index];
        std::string coeff;
        bool negative = false;
        if (c.terms().size() == 1) {
            negative = c.terms().begin()->second < 0;
            const MultiPoly magnitude = negative ? -c : c;
            coeff = magnitude == MultiPoly(1) ? "" : magnitude.to_string() + "*";
        } else {
            coeff = "(" + c.to_string() + ")*";
        }
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        out += coeff + label;
    }
    return out;
}

std::pair<DivisorExpr, DivisorExpr> split_constant_part(const DivisorExpr& d) {
    DivisorExpr constant(d.basis());
    DivisorExpr parametric(d.basis());
    for (const auto& [index, c] : d.coefficients()) {
        for (const auto& [m, value] : c.terms()) {
            auto& target = m.is_one() ? constant : parametric;
            target.add(d.basis().labels()[index], MultiPoly(m, value));
        }
    }
    return {constant, parametric};
}

DivisorExpr parse_divisor(const Basis& basis, std::string_view text) {
    const MultiPoly p = parse_poly(text);
    DivisorExpr out(basis);
    for (const auto& [m, c] : p.terms()) {
        std::optional<std::string> label;
        std::vector<Monomial::Factor> rest;
        for (const auto& [var, exp] : m.factors()) {
            if (basis.contains(var)) {
                if (label || exp != 1) {
                    throw LoadError("divisor '" + std::string(text) +
                                    "' is not linear in the basis classes");
                }
                label = var;
            } else {
                rest.emplace_back(var, exp);
            }
        }
        if (!label) {
            throw LoadError("divisor '" + std::string(text) + "' has a term (" + m.to_string() +
                            ") without a basis class");
        }
        out.add(*label, MultiPoly(Monomial::from_factors(std::move(rest)), c));
    }
    return out;
}

void TrilinearForm::insert(std::string_view a, std::string_view b, std::string_view c,
                           const Integer& value) {
    Key key{basis_.require(a), basis_.require(b), basis_.require(c)};
    std::sort(key.begin(), key.end());
    auto [it, inserted] = entries_.try_emplace(key, value);
    if (!inserted && it->second != value) {
        throw ArgumentError("contradictory values " + cy3::to_string(it->second) + " and " +
                            cy3::to_string(value) + " for triple (" + std::string(a) + ", " +
                            std::string(b) + ", " + std::string(c) + ")");
    }
    if (value == 0) {
        entries_.erase(key);
    }
}

Integer TrilinearForm::at(Key key) const {
    std::sort(key.begin(), key.end());
    auto it = entries_.find(key);
    return it == entries_.end() ? Integer(0) : it->second;
}

Integer TrilinearForm::operator()(std::string_view a, std::string_view b,
                                  std::string_view c) const {
    return at({basis_.require(a), basis_.require(b), basis_.require(c)});
}

void LinearForm::set(std::string_view label, const Integer& value) {
    const std::size_t index = basis_.require(label);
    if (value == 0) {
        entries_.erase(index);
    } else {
        entries_[index] = value;
    }
}

Integer LinearForm::operator()(std::string_view label) const { return at(basis_.require(label)); }

Integer LinearForm::at(std::size_t index) const {
    auto it = entries_.find(index);
    return it == entries_.end() ? Integer(0) : it->second;
}

MultiPoly triple_product(const TrilinearForm& f, const DivisorExpr& d1, const DivisorExpr& d2,
                         const DivisorExpr& d3) {
    require_same_basis(f.basis(), d1.basis(), "triple_product");
    require_same_basis(f.basis(), d2.basis(), "triple_product");
    require_same_basis(f.basis(), d3.basis(), "triple_product");
    const auto& c1 = d1.coefficients();
    const auto& c2 = d2.coefficients();
    const auto& c3 = d3.coefficients();
    MultiPoly total;
    // sum over ordered triples = sum over stored entries of their distinct permutations
    for (const auto& [key, value] : f.entries()) {
        TrilinearForm::Key perm = key;
        do {
            auto a = c1.find(perm[0]);
            if (a == c1.end()) {
                continue;
            }
            auto b = c2.find(perm[1]);
            if (b == c2.end()) {
                continue;
            }
            auto c = c3.find(perm[2]);
            if (c == c3.end()) {
                continue;
            }
            total += MultiPoly(value) * a->second * b->second * c->second;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return total;
}

MultiPoly cube(const TrilinearForm& f, const DivisorExpr& d) { return triple_product(f, d, d, d); }

CubeSplit cube_split(const TrilinearForm& f, const DivisorExpr& p, const DivisorExpr& l) {
    CubeSplit s;
    s.p3 = triple_product(f, p, p, p);
    s.p2l = triple_product(f, p, p, l);
    s.pl2 = triple_product(f, p, l, l);
    s.l3 = triple_product(f, l, l, l);
    s.paper_sum = s.p3 + s.p2l + s.pl2 + s.l3;
    s.standard_sum = s.p3 + MultiPoly(3) * s.p2l + MultiPoly(3) * s.pl2 + s.l3;
    return s;
}

MultiPoly pair(const LinearForm& lf, const DivisorExpr& d) {
    require_same_basis(lf.basis(), d.basis(), "pair");
    MultiPoly total;
    for (const auto& [index, c] : d.coefficients()) {
        total += MultiPoly(lf.at(index)) * c;
    }
    return total;
}

DivisibilityReport linear_divisibility(const LinearForm& lf,
                                       const std::vector<ScaledDivisor>& generators,
                                       const Integer& modulus) {
    if (modulus == 0) {
        throw ArgumentError("linear_divisibility: modulus must be nonzero");
    }
    DivisibilityReport report;
    report.modulus = modulus;
    for (const auto& g : generators) {
        if (g.denominator == 0) {
            throw ArgumentError("generator " + g.name + " has zero denominator");
        }
        const MultiPoly numerator = pair(lf, g.numerator);
        if (!numerator.is_constant()) {
            throw ArgumentError("generator " + g.name + " pairs to the non-numeric value " +
                                numerator.to_string());
        }
        const Rational value = make_rational(numerator.constant_value(), g.denominator);
        if (!is_integral(value)) {
            throw IntegralityError("generator " + g.name + " pairs to the non-integer value " +
                                   to_string(value));
        }
        const Integer v = value.get_num();
        const bool ok = divides(modulus, v);
        report.divisible = report.divisible && ok;
        report.witnesses.push_back({g.name, v, ok});
    }
    return report;
}

MultiPoly generic_cubic(const TrilinearForm& f) {
    DivisorExpr generic(f.basis());
    for (const auto& label : f.basis().labels()) {
        generic.add(label, MultiPoly::variable(label));
    }
    return cube(f, generic);
}

bool cubic_divisibility_fermat(const TrilinearForm& f, const Integer& prime) {
    if (!is_prime(prime)) {
        throw ArgumentError("cubic_divisibility_fermat: modulus " + to_string(prime) +
                            " is not prime");
    }
    return fermat_reduce(generic_cubic(f), prime).is_zero();
}

}  // namespace cy3
