#ifndef CY3_POLY_HPP
#define CY3_POLY_HPP

#include "cy3/exact.hpp"

#include <concepts>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cy3 {

/// Power product of named variables. Factors are kept sorted by name with
/// positive exponents, so the unit monomial is the empty product.
class Monomial {
  public:
    using Factor = std::pair<std::string, unsigned>;

    Monomial() = default;
    static Monomial variable(std::string name, unsigned exponent = 1);
    /// Accepts factors in any order; repeated names are merged, zero exponents dropped.
    static Monomial from_factors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return factors_; }
    unsigned degree() const { return degree_; }
    unsigned exponent(std::string_view name) const;
    bool is_one() const { return factors_.empty(); }

    Monomial operator*(const Monomial& other) const;
    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// "x^2*y", or "1" for the unit monomial.
    std::string to_string() const;

  private:
    std::vector<Factor> factors_;
    unsigned degree_ = 0;
};

/// Strict weak order placing monomials in descending graded-lex order
/// (higher total degree first; ties broken by exponent of the
/// alphabetically smallest variable).
struct GrlexDescending {
    bool operator()(const Monomial& lhs, const Monomial& rhs) const;
};

/// Sparse multivariate polynomial with integer coefficients.
///
/// The variable universe is implicit: it is the set of names occurring in
/// stored terms, so operands over different universes combine by name union.
/// Zero coefficients are never stored, which makes structural equality
/// coincide with polynomial equality.
class MultiPoly {
  public:
    using TermMap = std::map<Monomial, Integer, GrlexDescending>;

    MultiPoly() = default;
    MultiPoly(const Integer& constant);  // NOLINT(google-explicit-constructor)
    template <std::integral T>
    MultiPoly(T constant) : MultiPoly(Integer(static_cast<long>(constant))) {}  // NOLINT
    MultiPoly(const Monomial& monomial, const Integer& coefficient);

    static MultiPoly variable(std::string name);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial; throws ArgumentError otherwise.
    Integer constant_value() const;
    Integer coefficient(const Monomial& monomial) const;
    /// Sorted names of the variables that occur.
    std::vector<std::string> variables() const;
    unsigned degree() const;
    unsigned degree_in(std::string_view name) const;
    /// gcd of all coefficients (0 for the zero polynomial).
    Integer content() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const MultiPoly& other);
    friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
    friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
    friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    MultiPoly pow(unsigned exponent) const;

    /// Coefficient-wise exact division; nullopt when some coefficient is not divisible.
    std::optional<MultiPoly> divide_exact(const Integer& divisor) const;

    /// Replaces bound variables by polynomials; unbound variables stay symbolic.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings) const;

    /// Full evaluation; throws ArgumentError naming the first unbound variable.
    Integer evaluate(const std::map<std::string, Integer>& values) const;

    /// Coefficients c_0..c_d of a polynomial in at most the single variable `name`.
    std::vector<Integer> univariate_coefficients(std::string_view name) const;

    /// Canonical text: descending graded-lex terms, explicit * and ^.
    std::string to_string() const;

  private:
    void add_term(const Monomial& monomial, const Integer& coefficient);

    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Parses the polynomial text syntax: integer literals, identifiers
/// [A-Za-z][A-Za-z0-9_]*, + - * ^ and parentheses. Exponents must be
/// non-negative integer literals. Throws LoadError with the offending position.
MultiPoly parse_poly(std::string_view text);

/// Reduces coefficients into {0..prime-1} and exponents with x^prime = x
/// until every per-variable degree is below prime. The result is zero iff
/// the polynomial vanishes at every point of the prime field's affine space.
/// Throws ArgumentError when `prime` is not prime.
MultiPoly fermat_reduce(const MultiPoly& p, const Integer& prime);

/// Polynomial compiled against a fixed variable order for repeated evaluation.
class PolyEvaluator {
  public:
    /// Throws ArgumentError if p mentions a variable missing from `order`.
    PolyEvaluator(const MultiPoly& p, std::vector<std::string> order);

    Integer operator()(std::span<const Integer> values) const;

  private:
    struct Term {
        Integer coefficient;
        std::vector<std::pair<std::size_t, unsigned>> powers;
    };
    std::vector<std::string> order_;
    std::vector<Term> terms_;
};

}  // namespace cy3

#endif
