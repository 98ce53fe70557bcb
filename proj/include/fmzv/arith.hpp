#ifndef FMZV_ARITH_HPP
#define FMZV_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fmzv {

// mpq_class values are kept canonical by every routine in this library.
using Rational = mpq_class;
using Integer = mpz_class;

struct Valuation {
    bool infinite = false;
    long value = 0;

    static Valuation infinity() { return {true, 0}; }
    static Valuation of(long v) { return {false, v}; }

    bool operator==(const Valuation& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    bool operator!=(const Valuation& o) const { return !(*this == o); }
    bool operator<(const Valuation& o) const {
        if (infinite) return false;
        if (o.infinite) return true;
        return value < o.value;
    }
    bool operator<=(const Valuation& o) const { return !(o < *this); }
};

std::string to_string(const Valuation& v);

bool is_prime(long p);

// Throws std::invalid_argument for non-prime p.
Valuation nu_p(long p, const Rational& q);

// Convention B_1 = -1/2.
Rational bernoulli(unsigned k);

// (-1)^{n+1} B_{2n} 24^n / (2 (2n)!), n >= 1.
Rational b_coeff(unsigned n);

Integer binomial(long n, long k);
Integer factorial(unsigned n);

// "p/q" in lowest terms, "n" when q = 1.
std::string to_string(const Rational& q);

// Accepts "n", "-n", "p/q"; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

inline Rational make_rational(long p, long q = 1) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

}  // namespace fmzv

#endif
