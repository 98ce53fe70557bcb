#include "support.hpp"

#include "fmzv/goncharov.hpp"
#include "fmzv/level_matrix.hpp"

using namespace fmzv;
using support::q;

namespace {

QMatrix rows_of(std::size_t n, std::vector<const char*> entries) {
    std::vector<Rational> v;
    for (const char* e : entries) v.push_back(q(e));
    return QMatrix(n, n, v);
}

Rational c_oracle(int a, int b, int r) {
    // 2 (-1)^r (C(2r, 2b+2) - (1 - 2^{-2r}) C(2r, 2a+1)), evaluated with plain integers.
    auto choose = [](long n, long k) -> long {
        if (k < 0 || k > n) return 0;
        long c = 1;
        for (long i = 1; i <= k; ++i) c = c * (n - k + i) / i;
        return c;
    };
    const long four = 1L << (2 * r);
    Rational inner = Rational(choose(2 * r, 2 * b + 2)) - Rational(four - 1, four) * Rational(choose(2 * r, 2 * a + 1));
    inner.canonicalize();
    return (r % 2 ? -2 : 2) * inner;
}

}  // namespace

TEST_CASE("reference level-one and level-two matrices") {
    const QMatrix m9 = rows_of(4, {"3", "-15/2", "189/16", "-223/16", "0", "-15/2", "299/8", "-889/16",
                                   "0", "2", "-291/16", "455/16", "-2", "12", "-30", "641/16"});
    CHECK(build_matrix(9, 1) == m9);
    CHECK(det_exact(m9) == q("4865/512"));
    const QMatrix m10 = build_matrix(10, 2);
    CHECK(m10 == rows_of(6, {"3", "0", "0", "-12", "0", "28", "0", "3", "0", "-11/2", "0", "0",
                             "-2", "0", "3", "12", "-15/2", "-291/16", "0", "0", "0", "9/2", "-10", "0",
                             "0", "-2", "0", "0", "9/2", "75/8", "0", "0", "-2", "0", "12", "-291/16"}));
    CHECK(det_exact(m10) == q("-435419/64"));
    CHECK(two_adic_certificate(m9));
    CHECK(two_adic_certificate(m10));
}

TEST_CASE("reference partial phi values") {
    const std::map<Word23, Rational> a = {{{2, 2, 2}, q("3")}, {{2, 2}, q("-15/2")}, {{2}, q("189/16")}, {{}, q("-223/16")}};
    CHECK(partial_phi({3, 2, 2, 2}, 9, 1) == a);
    const std::map<Word23, Rational> b = {
        {{3, 2, 2}, q("-2")}, {{2, 2, 3}, q("3")}, {{3, 2}, q("12")}, {{2, 3}, q("-15/2")}, {{3}, q("-291/16")}};
    CHECK(partial_phi({3, 2, 2, 3}, 10, 2) == b);
}

TEST_CASE("basis and codomain orders") {
    std::vector<std::string> basis, codomain;
    for (const auto& u : enumerate_basis(10, 2).elements) basis.push_back(format_word23(u));
    for (const auto& u : enumerate_codomain(10, 2)) codomain.push_back(format_word23(u));
    CHECK(basis == std::vector<std::string>{"(3,3,2,2)", "(3,2,3,2)", "(3,2,2,3)", "(2,3,3,2)", "(2,3,2,3)", "(2,2,3,3)"});
    CHECK(codomain == std::vector<std::string>{"(3,2,2)", "(2,3,2)", "(2,2,3)", "(3,2)", "(2,3)", "(3)"});
    std::vector<std::string> c9;
    for (const auto& u : enumerate_codomain(9, 1)) c9.push_back(format_word23(u));
    CHECK(c9 == std::vector<std::string>{"(2,2,2)", "(2,2)", "(2)", "()"});
}

TEST_CASE("basis counts are binomials") {
    for (int n = 0; n <= 24; ++n)
        for (int ell = 0; 3 * ell <= n; ++ell) {
            const auto b = enumerate_basis(n, ell);
            if ((n - 3 * ell) % 2) {
                CHECK(b.elements.empty());
                continue;
            }
            const long m = (n - 3 * ell) / 2;
            CHECK(Integer(static_cast<unsigned long>(b.elements.size())) == binomial(m + ell, ell));
            for (const auto& u : b.elements) {
                CHECK(weight23(u) == n);
                CHECK(level23(u) == ell);
                CHECK(level(bzd(u)) == ell);
            }
        }
}

TEST_CASE("level lowering containment") {
    for (int n = 3; n <= 13; ++n)
        for (int ell = 0; 3 * ell <= n; ++ell)
            for (const auto& u : enumerate_basis(n, ell).elements)
                for (int r = 1; 2 * r + 1 < n; ++r)
                    for (const auto& [k, c] : partial_2r1(bzd(u), r).terms()) {
                        const auto v = unbzd(k.second);
                        REQUIRE(v.has_value());
                        CHECK(level23(*v) <= ell);
                        if (ell == 0) CHECK(c == 0);
                    }
    for (int n = 3; n <= 13; ++n)
        for (int ell = 1; 3 * ell <= n; ++ell)
            for (const auto& u : enumerate_basis(n, ell).elements)
                for (const auto& [v, c] : partial_phi(u, n, ell)) CHECK(level23(v) == ell - 1);
}

TEST_CASE("Zagier coefficients") {
    CHECK(c_coeff(0, 0, 1) == 1);
    CHECK(c_coeff(0, 1, 1) == 3);
    CHECK(c_coeff(0, 1, 2) == q("-11/2"));
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b) {
            for (int r = 1; r <= a + b + 1; ++r) CHECK(c_coeff(a, b, r) == c_oracle(a, b, r));
            CHECK(c_ab(a, b) == c_coeff(a, b, a + b + 1));
        }
}

TEST_CASE("phi on the allowed shapes") {
    CHECK(phi_of_factor(NCPoly::word(Alphabet::X, bzd({3}))) == c_ab(0, 0));
    CHECK(phi_of_factor(NCPoly::word(Alphabet::X, bzd({2, 3, 2, 2}))) == c_ab(1, 2));
    CHECK(phi_of_factor(support::x("x0")) == 2);
    CHECK(phi_of_factor(support::x("x0x1x0")) == -2);
    CHECK(phi_of_factor(support::x("x0x1x0x1x0")) == 2);
    CHECK_THROWS_AS(phi_of_factor(support::x("x1x0x0")), std::invalid_argument);
}

TEST_CASE("every matrix through N = 16 is 2-adically invertible") {
    for (int n = 3; n <= 16; ++n)
        for (int ell = 1; 3 * ell <= n; ++ell) {
            const QMatrix m = build_matrix(n, ell);
            if (m.rows() == 0) continue;
            CAPTURE(n);
            CAPTURE(ell);
            CHECK(m.square());
            CHECK(two_adic_certificate(m));
            CHECK(det_exact(m) != 0);
        }
    CHECK(build_matrix(3, 1) == QMatrix(1, 1, {1}));
}

TEST_CASE("coefficient lemmas") {
    CHECK(verify_c_lemma(10));
    CHECK(verify_binomial_identity(8));
}

TEST_CASE("word23 text") {
    CHECK(parse_word23("(3,2,2,2)") == Word23{3, 2, 2, 2});
    CHECK(parse_word23("3222") == Word23{3, 2, 2, 2});
    CHECK(parse_word23("()").empty());
    CHECK(format_word23({}) == "()");
    CHECK_THROWS_AS(parse_word23("(3,4)"), std::invalid_argument);
    CHECK_FALSE(unbzd(make_word({1, 0})).has_value());
    CHECK_THROWS_AS(level(make_word({1, 0})), std::invalid_argument);
}
