#include "cy3/poly.hpp"

#include "cy3/errors.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace cy3 {

Monomial Monomial::variable(std::string name, unsigned exponent) {
    return from_factors({{std::move(name), exponent}});
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
    for (auto& [name, exp] : factors) {
        if (exp == 0) {
            continue;
        }
        if (!m.factors_.empty() && m.factors_.back().first == name) {
            m.factors_.back().second += exp;
        } else {
            m.factors_.emplace_back(std::move(name), exp);
        }
        m.degree_ += exp;
    }
    return m;
}

unsigned Monomial::exponent(std::string_view name) const {
    for (const auto& [var, exp] : factors_) {
        if (var == name) {
            return exp;
        }
    }
    return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    out.degree_ = degree_ + other.degree_;
    return out;
}

std::string Monomial::to_string() const {
    if (factors_.empty()) {
        return "1";
    }
    std::string out;
    for (const auto& [var, exp] : factors_) {
        if (!out.empty()) {
            out += '*';
        }
        out += var;
        if (exp > 1) {
            out += '^';
            out += std::to_string(exp);
        }
    }
    return out;
}

bool GrlexDescending::operator()(const Monomial& lhs, const Monomial& rhs) const {
    if (lhs.degree() != rhs.degree()) {
        return lhs.degree() > rhs.degree();
    }
    const auto& a = lhs.factors();
    const auto& b = rhs.factors();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            if (a[i].second != b[j].second) {
                return a[i].second > b[j].second;
            }
            ++i;
            ++j;
        } else {
            // the alphabetically smaller variable is present on one side only
            return a[i].first < b[j].first;
        }
    }
    return i < a.size() && j == b.size();
}

MultiPoly::MultiPoly(const Integer& constant) {
    if (constant != 0) {
        terms_.emplace(Monomial(), constant);
    }
}

MultiPoly::MultiPoly(const Monomial& monomial, const Integer& coefficient) {
    if (coefficient != 0) {
        terms_.emplace(monomial, coefficient);
    }
}

MultiPoly MultiPoly::variable(std::string name) {
    return MultiPoly(Monomial::variable(std::move(name)), Integer(1));
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Integer MultiPoly::constant_value() const {
    if (!is_constant()) {
        throw ArgumentError("polynomial " + to_string() + " is not a constant");
    }
    return terms_.empty() ? Integer(0) : terms_.begin()->second;
}

Integer MultiPoly::coefficient(const Monomial& monomial) const {
    auto it = terms_.find(monomial);
    return it == terms_.end() ? Integer(0) : it->second;
}

std::vector<std::string> MultiPoly::variables() const {
    std::set<std::string> names;
    for (const auto& [m, c] : terms_) {
        for (const auto& [var, exp] : m.factors()) {
            names.insert(var);
        }
    }
    return {names.begin(), names.end()};
}

unsigned MultiPoly::degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

unsigned MultiPoly::degree_in(std::string_view name) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
        d = std::max(d, m.exponent(name));
    }
    return d;
}

Integer MultiPoly::content() const {
    Integer g = 0;
    for (const auto& [m, c] : terms_) {
        g = gcd(g, c);
    }
    return g;
}

void MultiPoly::add_term(const Monomial& monomial, const Integer& coefficient) {
    if (coefficient == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [m, c] : out.terms_) {
        c = -c;
    }
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    for (const auto& [m, c] : other.terms_) {
        add_term(m, c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    for (const auto& [m, c] : other.terms_) {
        add_term(m, -c);
    }
    return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
    MultiPoly out;
    for (const auto& [ma, ca] : lhs.terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
    *this = *this * other;
    return *this;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
    MultiPoly result(1);
    MultiPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1u) {
            result *= base;
        }
        exponent >>= 1u;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const Integer& divisor) const {
    if (divisor == 0) {
        throw ArgumentError("division by zero");
    }
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        if (!divides(divisor, c)) {
            return std::nullopt;
        }
        Integer q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
        out.terms_.emplace(m, q);
    }
    return out;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& bindings) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        MultiPoly term(c);
        std::vector<Monomial::Factor> kept;
        for (const auto& [var, exp] : m.factors()) {
            auto it = bindings.find(var);
            if (it == bindings.end()) {
                kept.emplace_back(var, exp);
            } else {
                term *= it->second.pow(exp);
            }
        }
        if (!kept.empty()) {
            term *= MultiPoly(Monomial::from_factors(std::move(kept)), Integer(1));
        }
        out += term;
    }
    return out;
}

Integer MultiPoly::evaluate(const std::map<std::string, Integer>& values) const {
    Integer total = 0;
    for (const auto& [m, c] : terms_) {
        Integer term = c;
        for (const auto& [var, exp] : m.factors()) {
            auto it = values.find(var);
            if (it == values.end()) {
                throw ArgumentError("no value bound for variable '" + var + "'");
            }
            Integer power;
            mpz_pow_ui(power.get_mpz_t(), it->second.get_mpz_t(), exp);
            term *= power;
        }
        total += term;
    }
    return total;
}

std::vector<Integer> MultiPoly::univariate_coefficients(std::string_view name) const {
    std::vector<Integer> coeffs(degree_in(name) + 1, Integer(0));
    for (const auto& [m, c] : terms_) {
        if (m.degree() != m.exponent(name)) {
            throw ArgumentError("polynomial " + to_string() + " is not univariate in " +
                                std::string(name));
        }
        coeffs[m.exponent(name)] = c;
    }
    return coeffs;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        if (first) {
            if (negative) {
                out += '-';
            }
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Integer magnitude = abs(c);
        if (m.is_one()) {
            out += cy3::to_string(magnitude);
        } else if (magnitude == 1) {
            out += m.to_string();
        } else {
            out += cy3::to_string(magnitude) + "*" + m.to_string();
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

MultiPoly fermat_reduce(const MultiPoly& p, const Integer& prime) {
    if (!is_prime(prime)) {
        throw ArgumentError("fermat_reduce: modulus " + to_string(prime) + " is not prime");
    }
    const bool small = prime <= std::numeric_limits<unsigned>::max();
    const unsigned q = small ? static_cast<unsigned>(prime.get_ui()) : 0;
    MultiPoly out;
    for (const auto& [m, c] : p.terms()) {
        Integer residue = mod_floor(c, prime);
        if (residue == 0) {
            continue;
        }
        std::vector<Monomial::Factor> factors = m.factors();
        if (small) {
            for (auto& [var, exp] : factors) {
                if (exp >= q) {
                    exp = (exp - 1) % (q - 1) + 1;
                }
            }
        }
        out += MultiPoly(Monomial::from_factors(std::move(factors)), residue);
    }
    // merged terms may have pushed a coefficient past the modulus
    MultiPoly reduced;
    for (const auto& [m, c] : out.terms()) {
        reduced += MultiPoly(m, mod_floor(c, prime));
    }
    return reduced;
}

PolyEvaluator::PolyEvaluator(const MultiPoly& p, std::vector<std::string> order)
    : order_(std::move(order)) {
    for (const auto& [m, c] : p.terms()) {
        Term term{c, {}};
        for (const auto& [var, exp] : m.factors()) {
            auto it = std::find(order_.begin(), order_.end(), var);
            if (it == order_.end()) {
                throw ArgumentError("variable '" + var + "' missing from evaluation order");
            }
            term.powers.emplace_back(static_cast<std::size_t>(it - order_.begin()), exp);
        }
        terms_.push_back(std::move(term));
    }
}

Integer PolyEvaluator::operator()(std::span<const Integer> values) const {
    if (values.size() != order_.size()) {
        throw ArgumentError("evaluator expects " + std::to_string(order_.size()) + " values");
    }
    Integer total = 0;
    Integer power;
    for (const auto& term : terms_) {
        Integer value = term.coefficient;
        for (const auto& [index, exp] : term.powers) {
            mpz_pow_ui(power.get_mpz_t(), values[index].get_mpz_t(), exp);
            value *= power;
        }
        total += value;
    }
    return total;
}

}  // namespace cy3
