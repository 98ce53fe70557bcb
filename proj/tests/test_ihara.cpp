#include "support.hpp"

#include "fmzv/ihara.hpp"

using namespace fmzv;
using support::Rng;
using support::x;

namespace {

NCPoly tr(const NCPoly& a, const NCPoly& b) { return postlie_tr(a, b); }

}  // namespace

TEST_CASE("post-Lie and Grossman-Larson goldens") {
    CHECK(postlie_tr(x("x0x0"), x("x1")) == x("x0x0x1 - 2*x0x1x0 + x1x0x0"));
    CHECK(grossman_larson(x("x0x0"), x("x0x1")) == x("x0x1x0x0"));
    CHECK(gl_closed_form(x("x0x0"), make_word({0, 1})) == x("x0x1x0x0"));
    CHECK(gl_antipode(x("x0x1"), 2) == x("-x0x1 + 2*x1x0"));
    CHECK(gl_antipode(x("x0"), 1) == x("-x0"));
    CHECK(gl_antipode(x("x1"), 1) == x("-x1"));
    CHECK(gl_antipode(x("1"), 0) == x("1"));
}

TEST_CASE("special derivation on letters") {
    const NCPoly f = x("x0x1");
    CHECK(special_derivation(f, x("x0")).is_zero());
    CHECK(special_derivation(f, x("x1")) == commutator(x("x1"), f));
}

TEST_CASE("post-Lie axioms on Lie elements") {
    Rng rng(41);
    for (int i = 0; i < support::kCases; ++i) {
        const NCPoly a = support::random_lie(rng, support::uniform(rng, 1, 3));
        const NCPoly b = support::random_lie(rng, support::uniform(rng, 1, 3));
        const NCPoly c = support::random_lie(rng, support::uniform(rng, 1, 2));
        CHECK(tr(a, b) == special_derivation(a, b));
        CHECK(tr(a, commutator(b, c)) == commutator(tr(a, b), c) + commutator(b, tr(a, c)));
        auto assoc = [](const NCPoly& p, const NCPoly& q, const NCPoly& r) { return tr(p, tr(q, r)) - tr(tr(p, q), r); };
        CHECK(tr(commutator(a, b), c) == assoc(a, b, c) - assoc(b, a, c));
        CHECK(ihara_bracket(a, b) == tr(a, b) - tr(b, a) + commutator(a, b));
    }
}

TEST_CASE("Ihara bracket is antisymmetric and satisfies Jacobi") {
    Rng rng(42);
    for (int i = 0; i < support::kCases; ++i) {
        const NCPoly a = support::random_lie(rng, support::uniform(rng, 1, 3));
        const NCPoly b = support::random_lie(rng, support::uniform(rng, 1, 3));
        const NCPoly c = support::random_lie(rng, support::uniform(rng, 1, 2));
        CHECK(ihara_bracket(a, b) == -ihara_bracket(b, a));
        const NCPoly jac = ihara_bracket(a, ihara_bracket(b, c)) + ihara_bracket(b, ihara_bracket(c, a)) + ihara_bracket(c, ihara_bracket(a, b));
        CHECK(jac.is_zero());
        CHECK(is_lie_element(ihara_bracket(a, b)));
    }
}

TEST_CASE("Grossman-Larson product is associative") {
    Rng rng(43);
    for (int i = 0; i < support::kCases; ++i) {
        const NCPoly a = support::random_poly(rng, Alphabet::X, support::uniform(rng, 0, 2), 2);
        const NCPoly b = support::random_poly(rng, Alphabet::X, support::uniform(rng, 0, 2), 2);
        const NCPoly c = support::random_poly(rng, Alphabet::X, support::uniform(rng, 0, 2), 2);
        CHECK(grossman_larson(grossman_larson(a, b), c) == grossman_larson(a, grossman_larson(b, c)));
    }
}

TEST_CASE("Grossman-Larson commutator of Lie elements is the Ihara bracket") {
    Rng rng(44);
    for (int i = 0; i < support::kCases; ++i) {
        const NCPoly a = support::random_lie(rng, support::uniform(rng, 1, 3));
        const NCPoly b = support::random_lie(rng, support::uniform(rng, 1, 3));
        CHECK(grossman_larson(a, b) - grossman_larson(b, a) == ihara_bracket(a, b));
    }
}

TEST_CASE("recursive and closed-form Grossman-Larson agree through total weight 6") {
    for (int n = 0; n <= 6; ++n)
        for (int a = 0; a <= n; ++a)
            for (const auto& aw : words_of_weight(Alphabet::X, a))
                for (const auto& w : words_of_weight(Alphabet::X, n - a)) {
                    const NCPoly pa = NCPoly::word(Alphabet::X, aw);
                    CHECK(grossman_larson(pa, NCPoly::word(Alphabet::X, w)) == gl_closed_form(pa, w));
                }
}

TEST_CASE("truncated Grossman-Larson drops high weights only") {
    Rng rng(45);
    for (int i = 0; i < support::kCases; ++i) {
        const NCPoly a = support::random_poly(rng, Alphabet::X, support::uniform(rng, 1, 3), 2);
        const NCPoly b = support::random_poly(rng, Alphabet::X, support::uniform(rng, 1, 3), 2);
        const int m = support::uniform(rng, 1, 6);
        CHECK(grossman_larson(a, b, m) == grossman_larson(a, b).truncated(m));
    }
}

TEST_CASE("GL antipode is an anti-homomorphism and negates Lie elements") {
    Rng rng(46);
    for (int i = 0; i < support::kCases; ++i) {
        const NCPoly f = support::random_lie(rng, support::uniform(rng, 1, 3));
        CHECK(gl_antipode(f, 3) == -f);
        const NCPoly a = support::random_poly(rng, Alphabet::X, support::uniform(rng, 1, 2), 2);
        const NCPoly b = support::random_poly(rng, Alphabet::X, support::uniform(rng, 1, 2), 2);
        CHECK(gl_antipode(grossman_larson(a, b), 4) == grossman_larson(gl_antipode(b, 4), gl_antipode(a, 4)));
    }
}

TEST_CASE("Lie elements and Lyndon brackets") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& l : lyndon_words(Alphabet::X, n)) CHECK(is_lie_element(lyndon_bracket(l)));
    CHECK(lyndon_bracket(make_word({0, 1})) == x("x0x1 - x1x0"));
    CHECK_FALSE(is_lie_element(x("x0x1")));
    CHECK_FALSE(is_lie_element(x("1")));
    CHECK_THROWS_AS(LieElement(x("x0x0")), std::invalid_argument);
    CHECK_NOTHROW(LieElement(x("x0")));
}

TEST_CASE("exp and log of truncated series") {
    Rng rng(47);
    for (int i = 0; i < support::kCases; ++i) {
        const NCPoly f = support::random_lie(rng, support::uniform(rng, 1, 3));
        const int n = support::uniform(rng, 3, 6);
        const TruncatedSeries g = exp_trunc(f, n);
        CHECK(is_grouplike(g));
        CHECK(log_trunc(g) == f.truncated(n));
    }
    CHECK_FALSE(is_grouplike(exp_trunc(x("x0x1"), 4)));
    CHECK_THROWS_AS(exp_trunc(x("1 + x0"), 3), std::invalid_argument);
    CHECK_THROWS_AS(log_trunc(TruncatedSeries{x("2"), 3}), std::invalid_argument);
}

TEST_CASE("kappa fixes x0 and conjugates x1") {
    const TruncatedSeries g = exp_trunc(x("x0 - x1") , 4);
    CHECK(kappa_apply(g, make_word({0})) == x("x0"));
    const NCPoly k1 = kappa_apply(g, make_word({1}));
    CHECK(k1.truncated(1) == x("x1"));
    CHECK_THROWS_AS(kappa_apply(TruncatedSeries{x("1 + x0x1"), 2}, make_word({1})), std::invalid_argument);
}
