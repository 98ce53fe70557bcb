#include "fmzv/arith.hpp"

#include <mutex>
#include <vector>

namespace fmzv {

std::string to_string(const Valuation& v) {
    return v.infinite ? std::string("Infinity") : std::to_string(v.value);
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

static long remove_factor(const Integer& n, long p) {
    Integer rest;
    Integer prime(p);
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

Valuation nu_p(long p, const Rational& q) {
    if (!is_prime(p)) throw std::invalid_argument("nu_p: " + std::to_string(p) + " is not prime");
    if (sgn(q) == 0) return Valuation::infinity();
    return Valuation::of(remove_factor(q.get_num(), p) - remove_factor(q.get_den(), p));
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational bernoulli(unsigned k) {
    static std::mutex mu;
    static std::vector<Rational> cache{Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= k) {
        const unsigned m = static_cast<unsigned>(cache.size());
        Rational s = 0;
        for (unsigned j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * cache[j];
        Rational b = -s / Rational(m + 1);
        b.canonicalize();
        cache.push_back(b);
    }
    return cache[k];
}

Rational b_coeff(unsigned n) {
    if (n == 0) throw std::invalid_argument("b_coeff: n must be positive");
    Integer pow24;
    mpz_ui_pow_ui(pow24.get_mpz_t(), 24, n);
    Rational r = bernoulli(2 * n) * Rational(pow24) / Rational(Integer(2) * factorial(2 * n));
    if (n % 2 == 0) r = -r;
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    auto valid_int = [](const std::string& s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw std::invalid_argument("malformed rational '" + text + "'");
    if (num[0] == '+') num = num.substr(1);
    Integer n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace fmzv
