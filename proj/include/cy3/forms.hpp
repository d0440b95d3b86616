#ifndef CY3_FORMS_HPP
#define CY3_FORMS_HPP

#include "cy3/exact.hpp"
#include "cy3/poly.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cy3 {

/// Ordered set of divisor-class labels. Copies share the label table;
/// two bases are compatible iff their label lists are identical.
class Basis {
  public:
    Basis() : Basis(std::vector<std::string>{}) {}
    /// Throws ArgumentError on duplicate or empty labels.
    explicit Basis(std::vector<std::string> labels);

    const std::vector<std::string>& labels() const { return *labels_; }
    std::size_t size() const { return labels_->size(); }
    std::optional<std::size_t> index_of(std::string_view label) const;
    /// Like index_of but throws ArgumentError for unknown labels.
    std::size_t require(std::string_view label) const;
    bool contains(std::string_view label) const { return index_of(label).has_value(); }

    friend bool operator==(const Basis& a, const Basis& b) {
        return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
    }

  private:
    std::shared_ptr<const std::vector<std::string>> labels_;
    std::shared_ptr<const std::map<std::string, std::size_t, std::less<>>> index_;
};

/// Formal linear combination of basis classes with polynomial coefficients.
class DivisorExpr {
  public:
    explicit DivisorExpr(Basis basis) : basis_(std::move(basis)) {}

    static DivisorExpr label(const Basis& basis, std::string_view label);

    const Basis& basis() const { return basis_; }
    /// Nonzero coefficients keyed by basis index.
    const std::map<std::size_t, MultiPoly>& coefficients() const { return coeffs_; }
    MultiPoly coefficient(std::string_view label) const;
    bool is_zero() const { return coeffs_.empty(); }
    /// Variables occurring in any coefficient, sorted.
    std::vector<std::string> parameters() const;

    DivisorExpr& add(std::string_view label, const MultiPoly& coefficient);

    DivisorExpr& operator+=(const DivisorExpr& other);
    DivisorExpr& operator-=(const DivisorExpr& other);
    friend DivisorExpr operator+(DivisorExpr a, const DivisorExpr& b) { return a += b; }
    friend DivisorExpr operator-(DivisorExpr a, const DivisorExpr& b) { return a -= b; }
    friend DivisorExpr operator*(const MultiPoly& scalar, const DivisorExpr& d);
    friend bool operator==(const DivisorExpr&, const DivisorExpr&) = default;

    DivisorExpr substitute(const std::map<std::string, MultiPoly>& bindings) const;

    /// "-E000 - E001 + x*L1", coefficients parenthesised when they are sums.
    std::string to_string() const;

  private:
    void add_at(std::size_t index, const MultiPoly& coefficient);

    Basis basis_;
    std::map<std::size_t, MultiPoly> coeffs_;
};

/// Splits d into (part with constant coefficients, part with parametric coefficients).
std::pair<DivisorExpr, DivisorExpr> split_constant_part(const DivisorExpr& d);

/// Parses a linear expression in basis labels, e.g. "3*M0 + x*L1 - (y+1)*L2".
/// Every term must contain exactly one basis label to the first power.
DivisorExpr parse_divisor(const Basis& basis, std::string_view text);

/// A divisor with rational coefficients, stored as numerator / denominator.
struct ScaledDivisor {
    std::string name;
    DivisorExpr numerator;
    Integer denominator = 1;
};

/// Symmetric integer-valued trilinear form. Entries are keyed by sorted
/// index triples; absent entries are zero.
class TrilinearForm {
  public:
    using Key = std::array<std::size_t, 3>;

    explicit TrilinearForm(Basis basis) : basis_(std::move(basis)) {}

    const Basis& basis() const { return basis_; }
    const std::map<Key, Integer>& entries() const { return entries_; }

    /// Sets the value of every permutation of (a, b, c). A second insertion
    /// of the same triple with a different value throws ArgumentError.
    void insert(std::string_view a, std::string_view b, std::string_view c, const Integer& value);
    Integer operator()(std::string_view a, std::string_view b, std::string_view c) const;
    Integer at(Key key) const;

    friend bool operator==(const TrilinearForm&, const TrilinearForm&) = default;

  private:
    Basis basis_;
    std::map<Key, Integer> entries_;
};

/// Integer-valued linear form on the basis; absent entries are zero.
class LinearForm {
  public:
    explicit LinearForm(Basis basis) : basis_(std::move(basis)) {}

    const Basis& basis() const { return basis_; }
    void set(std::string_view label, const Integer& value);
    Integer operator()(std::string_view label) const;
    Integer at(std::size_t index) const;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;

  private:
    Basis basis_;
    std::map<std::size_t, Integer> entries_;
};

MultiPoly triple_product(const TrilinearForm& f, const DivisorExpr& d1, const DivisorExpr& d2,
                         const DivisorExpr& d3);

MultiPoly cube(const TrilinearForm& f, const DivisorExpr& d);

/// Raw products of (p + l)^3. paper_sum adds them without binomial weights;
/// standard_sum is the genuine trilinear cube of p + l.
struct CubeSplit {
    MultiPoly p3;
    MultiPoly p2l;
    MultiPoly pl2;
    MultiPoly l3;
    MultiPoly paper_sum;
    MultiPoly standard_sum;

    bool sums_agree() const { return paper_sum == standard_sum; }
};

CubeSplit cube_split(const TrilinearForm& f, const DivisorExpr& p, const DivisorExpr& l);

MultiPoly pair(const LinearForm& lf, const DivisorExpr& d);

struct DivisibilityWitness {
    std::string generator;
    Integer value;
    bool divisible;
};

struct DivisibilityReport {
    bool divisible = true;
    Integer modulus;
    std::vector<DivisibilityWitness> witnesses;
};

/// Checks lf(g) = 0 mod m on every generator. Each generator must pair to an
/// integer; a proper fraction throws IntegralityError naming the generator.
DivisibilityReport linear_divisibility(const LinearForm& lf,
                                       const std::vector<ScaledDivisor>& generators,
                                       const Integer& modulus);

/// f(sum x_l * l) as a cubic polynomial in one variable per basis label
/// (the label itself is used as the variable name).
MultiPoly generic_cubic(const TrilinearForm& f);

/// True iff D^3 = 0 mod prime for every integer combination D of the basis.
/// Throws ArgumentError when `prime` is not prime.
bool cubic_divisibility_fermat(const TrilinearForm& f, const Integer& prime);

}  // namespace cy3

#endif
