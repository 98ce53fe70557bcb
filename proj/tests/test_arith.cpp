#include "support.hpp"

#include "fmzv/arith.hpp"

#include <cmath>

using namespace fmzv;
using support::q;

namespace {

// Akiyama-Tanigawa; yields B_1 = +1/2.
Rational bernoulli_oracle(unsigned n) {
    std::vector<Rational> a(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        a[m] = Rational(1, m + 1);
        for (unsigned j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
    }
    return a[0];
}

}  // namespace

TEST_CASE("bernoulli numbers match known values") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == q("-1/2"));
    CHECK(bernoulli(2) == q("1/6"));
    CHECK(bernoulli(4) == q("-1/30"));
    CHECK(bernoulli(12) == q("-691/2730"));
    CHECK(bernoulli(7) == 0);
}

TEST_CASE("bernoulli agrees with the Akiyama-Tanigawa recurrence") {
    for (unsigned n = 2; n <= 30; ++n) CHECK(bernoulli(n) == bernoulli_oracle(n));
}

TEST_CASE("b_coeff is zeta(2n)/zeta(2)^n") {
    CHECK(b_coeff(1) == 1);
    CHECK(b_coeff(2) == q("2/5"));
    CHECK(b_coeff(3) == q("8/35"));
    const double pi = std::acos(-1.0);
    const double zeta2 = pi * pi / 6;
    for (unsigned n = 2; n <= 8; ++n) {
        double z = 0;
        for (int k = 200000; k >= 1; --k) z += std::pow(static_cast<double>(k), -2.0 * n);
        CHECK(std::abs(b_coeff(n).get_d() - z / std::pow(zeta2, n)) < 1e-9);
    }
}

TEST_CASE("nu_p") {
    CHECK(nu_p(2, q("4865/512")) == Valuation::of(-9));
    CHECK(nu_p(2, q("-435419/64")) == Valuation::of(-6));
    CHECK(nu_p(3, q("18")) == Valuation::of(2));
    CHECK(nu_p(5, Rational(0)) == Valuation::infinity());
    CHECK(Valuation::of(100) < Valuation::infinity());
    CHECK(to_string(Valuation::infinity()) == "Infinity");
    CHECK_THROWS_AS(nu_p(4, q("3")), std::invalid_argument);
    CHECK_THROWS_AS(nu_p(1, q("3")), std::invalid_argument);
}

TEST_CASE("nu_p is additive on products") {
    support::Rng rng(11);
    for (int i = 0; i < support::kCases; ++i) {
        Rational a = support::random_rational(rng), b = support::random_rational(rng);
        if (a == 0 || b == 0) continue;
        for (long p : {2L, 3L, 5L}) {
            const Rational ab = a * b;
            CHECK(nu_p(p, ab).value == nu_p(p, a).value + nu_p(p, b).value);
        }
    }
}

TEST_CASE("binomial and factorial") {
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
}

TEST_CASE("rational text round trip") {
    support::Rng rng(12);
    for (int i = 0; i < support::kCases; ++i) {
        const Rational a = support::random_rational(rng);
        CHECK(parse_rational(to_string(a)) == a);
    }
    CHECK(to_string(q("6/4")) == "3/2");
    CHECK(to_string(q("-4/2")) == "-2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}
