#ifndef CY3_CHERN_HPP
#define CY3_CHERN_HPP

#include "cy3/exact.hpp"
#include "cy3/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace cy3 {

/// Invariants of a smooth surface: K^2 and the topological Euler number.
struct SurfaceInvariants {
    std::string name;
    Integer k_squared;
    Integer euler;

    friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

/// (D^3, D.c2) of a divisor class on a Calabi-Yau threefold.
struct ChernPair {
    Integer d3;
    Integer dc2;

    friend bool operator==(const ChernPair&, const ChernPair&) = default;
    std::string to_string() const;
};

/// ChernPair whose entries may still depend on template parameters.
struct SymbolicChernPair {
    MultiPoly d3;
    MultiPoly dc2;

    /// Throws ArgumentError if some parameter is left unbound.
    ChernPair evaluate(const std::map<std::string, Integer>& values) const;
};

/// For a smooth divisor D with surface invariants (K^2, e):
/// D^3 = K^2 and D.c2 = e - K^2.
ChernPair chern_pair_of_surface(const SurfaceInvariants& s);

/// chi(O(nD)) = (D^3/6) n^3 + (D.c2/12) n.
class HilbertPolynomial {
  public:
    explicit HilbertPolynomial(ChernPair source);

    const ChernPair& source() const { return source_; }
    const Rational& cubic_coefficient() const { return cubic_; }
    const Rational& linear_coefficient() const { return linear_; }

    Rational operator()(const Integer& n) const;
    bool is_zero() const { return cubic_ == 0 && linear_ == 0; }

    /// "(351*n^3 + 27*n)/2", or an integer polynomial when no denominator remains.
    std::string to_string() const;

    friend bool operator==(const HilbertPolynomial& a, const HilbertPolynomial& b) {
        return a.cubic_ == b.cubic_ && a.linear_ == b.linear_;
    }

  private:
    ChernPair source_;
    Rational cubic_;
    Rational linear_;
};

HilbertPolynomial hilbert_polynomial(const ChernPair& p);

/// P(n) in Z for every integer n; checked at n = 1, 2, 3.
bool is_integer_valued(const HilbertPolynomial& hp);

/// Invariants of kD. Throws ArgumentError for k <= 0.
ChernPair scale_divisor(const ChernPair& p, const Integer& k);

bool same_hilbert_scheme(const ChernPair& a, const ChernPair& b);

/// Outcome of deriving 3 | D^3 from 6 | D.c2 through integrality of chi.
struct RrVerdict {
    enum class Status { holds, fails, not_applicable };
    Status status = Status::not_applicable;
    std::vector<std::string> trace;

    bool holds() const { return status == Status::holds; }
};

/// Throws PreconditionError when the pair's Hilbert polynomial is not integer-valued.
RrVerdict rr_cubic_divisibility(const ChernPair& p);

std::string to_string(RrVerdict::Status status);

}  // namespace cy3

#endif
