#include "cy3/chern.hpp"

#include "cy3/errors.hpp"

namespace cy3 {

std::string ChernPair::to_string() const {
    return "(" + cy3::to_string(d3) + ", " + cy3::to_string(dc2) + ")";
}

ChernPair SymbolicChernPair::evaluate(const std::map<std::string, Integer>& values) const {
    return {d3.evaluate(values), dc2.evaluate(values)};
}

ChernPair chern_pair_of_surface(const SurfaceInvariants& s) {
    return {s.k_squared, s.euler - s.k_squared};
}

HilbertPolynomial::HilbertPolynomial(ChernPair source)
    : source_(std::move(source)),
      cubic_(make_rational(source_.d3, 6)),
      linear_(make_rational(source_.dc2, 12)) {}

Rational HilbertPolynomial::operator()(const Integer& n) const {
    Rational x(n);
    return cubic_ * x * x * x + linear_ * x;
}

std::string HilbertPolynomial::to_string() const {
    Integer den;
    mpz_lcm(den.get_mpz_t(), cubic_.get_den_mpz_t(), linear_.get_den_mpz_t());
    const Rational scale(den);
    const Rational c3 = cubic_ * scale;
    const Rational c1 = linear_ * scale;
    const MultiPoly n = MultiPoly::variable("n");
    const MultiPoly numerator = MultiPoly(c3.get_num()) * n.pow(3) + MultiPoly(c1.get_num()) * n;
    if (den == 1) {
        return numerator.to_string();
    }
    const std::string body = numerator.terms().size() > 1 ? "(" + numerator.to_string() + ")"
                                                          : numerator.to_string();
    return body + "/" + cy3::to_string(den);
}

HilbertPolynomial hilbert_polynomial(const ChernPair& p) { return HilbertPolynomial(p); }

bool is_integer_valued(const HilbertPolynomial& hp) {
    for (int n = 1; n <= 3; ++n) {
        if (!is_integral(hp(Integer(n)))) {
            return false;
        }
    }
    return true;
}

ChernPair scale_divisor(const ChernPair& p, const Integer& k) {
    if (k <= 0) {
        throw ArgumentError("scale_divisor: multiplier must be positive, got " + to_string(k));
    }
    return {k * k * k * p.d3, k * p.dc2};
}

bool same_hilbert_scheme(const ChernPair& a, const ChernPair& b) {
    return a.d3 == b.d3 && a.dc2 == b.dc2;
}

RrVerdict rr_cubic_divisibility(const ChernPair& p) {
    const HilbertPolynomial hp(p);
    if (!is_integer_valued(hp)) {
        throw PreconditionError("rr_cubic_divisibility: chi(O(nD)) is not integer-valued for " +
                                p.to_string());
    }
    RrVerdict verdict;
    const Integer twelve_multiple = 2 * p.d3 + p.dc2;
    verdict.trace.push_back("chi(O(D)) = D^3/6 + D.c2/12 = " + to_string(hp(Integer(1))) +
                            " is an integer  =>  2*D^3 + D.c2 = " + to_string(twelve_multiple) +
                            " = 0 mod 12");
    if (!divides(6, p.dc2)) {
        verdict.status = RrVerdict::Status::not_applicable;
        verdict.trace.push_back("D.c2 = " + to_string(p.dc2) + " = " +
                                to_string(mod_floor(p.dc2, 6)) +
                                " mod 6  =>  implication not applicable");
        return verdict;
    }
    const Integer half = -p.dc2 / 2;
    verdict.trace.push_back("D.c2 = " + to_string(p.dc2) + " = 0 mod 6  =>  D^3 = -D.c2/2 = " +
                            to_string(mod_floor(half, 6)) + " mod 6");
    const bool holds = divides(3, p.d3);
    verdict.status = holds ? RrVerdict::Status::holds : RrVerdict::Status::fails;
    verdict.trace.push_back("-D.c2/2 = " + to_string(half) + " = 0 mod 3  =>  D^3 = " +
                            to_string(p.d3) + (holds ? " = 0 mod 3" : " != 0 mod 3"));
    return verdict;
}

std::string to_string(RrVerdict::Status status) {
    switch (status) {
        case RrVerdict::Status::holds:
            return "holds";
        case RrVerdict::Status::fails:
            return "fails";
        case RrVerdict::Status::not_applicable:
            return "not applicable";
    }
    return "unknown";
}

}  // namespace cy3
