#include "cy3/exact.hpp"

#include "cy3/errors.hpp"

#include <cctype>

namespace cy3 {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw ArgumentError("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer parse_integer(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        digits.remove_prefix(1);
    }
    if (digits.empty()) {
        throw LoadError("expected an integer literal, got '" + std::string(text) + "'");
    }
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw LoadError("expected an integer literal, got '" + std::string(text) + "'");
        }
    }
    Integer value(std::string(digits), 10);
    return text.front() == '-' ? Integer(-value) : value;
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) { return value.get_str(10); }

Integer mod_floor(const Integer& value, const Integer& modulus) {
    if (modulus == 0) {
        throw ArgumentError("modulus must be nonzero");
    }
    Integer m = abs(modulus);
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), m.get_mpz_t());
    return r;
}

bool divides(const Integer& divisor, const Integer& value) {
    if (divisor == 0) {
        return value == 0;
    }
    return mpz_divisible_p(value.get_mpz_t(), divisor.get_mpz_t()) != 0;
}

bool is_prime(const Integer& value) {
    if (value < 2) {
        return false;
    }
    if (value < (1 << 20)) {
        const unsigned long n = value.get_ui();
        for (unsigned long d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                return false;
            }
        }
        return true;
    }
    return mpz_probab_prime_p(value.get_mpz_t(), 40) != 0;
}

bool is_integral(const Rational& value) { return value.get_den() == 1; }

}  // namespace cy3
