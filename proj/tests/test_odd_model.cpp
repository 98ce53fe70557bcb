#include "support.hpp"

#include "fmzv/odd_model.hpp"

using namespace fmzv;
using support::Rng;
using support::s;

namespace {

Tensor2 shuffle_right(const Tensor2& t, const NCPoly& v) {
    Tensor2 out(Alphabet::S);
    for (const auto& [k, c] : t.terms()) out += tensor(NCPoly::word(Alphabet::S, k.first, c), uf_shuffle(NCPoly::word(Alphabet::S, k.second), v));
    return out;
}

NCPoly random_uf(Rng& rng, int n) {
    const auto basis = uf_basis(n);
    NCPoly p(Alphabet::S);
    if (basis.empty()) return p;
    for (int i = 0; i < 2; ++i)
        p.add(basis[static_cast<std::size_t>(support::uniform(rng, 0, static_cast<int>(basis.size()) - 1))], support::random_rational(rng));
    return p;
}

}  // namespace

TEST_CASE("basis enumeration") {
    CHECK(uf_basis(2) == std::vector<Word>{uf_word("", 1)});
    CHECK(uf_basis(3) == std::vector<Word>{make_word({3})});
    CHECK(uf_basis(8) == std::vector<Word>{make_word({3, 5}), make_word({5, 3}), uf_word(make_word({3, 3}), 1), uf_word("", 4)});
    CHECK(uf_basis(1).empty());
}

TEST_CASE("dimensions follow 1/(1-x^2-x^3)") {
    std::vector<long long> a = {1, 0, 1};
    for (int n = 3; n <= 14; ++n) a.push_back(a[n - 2] + a[n - 3]);
    for (int n = 0; n <= 14; ++n) {
        CHECK(static_cast<long long>(uf_basis(n).size()) == a[n]);
        CHECK(uf_dim(n) == a[n]);
    }
}

TEST_CASE("coaction examples") {
    CHECK(dec_coaction(s("s2 s2")) == tensor(s("1"), s("s2 s2")));
    CHECK(dec_coaction(s("s3 s2")) == tensor(s("s3"), s("s2")) + tensor(s("1"), s("s3 s2")));
    CHECK(dec_coaction(s("s3 s5 s7")) == tensor(s("s3 s5 s7"), s("1")) + tensor(s("s3 s5"), s("s7")) + tensor(s("s3"), s("s5 s7")) + tensor(s("1"), s("s3 s5 s7")));
    CHECK(uf_derivation_D(s("s3 s5 s7"), 1) == tensor(s("s3"), s("s5 s7")));
    CHECK(uf_derivation_D(s("s3 s5 s7"), 7) == tensor(s("s3 s5 s7"), s("1")));
    CHECK(uf_derivation_D(s("s3 s2"), 1) == tensor(s("s3"), s("s2")));
    for (int n = 1; n <= 6; ++n)
        for (int r = 0; r <= 6; ++r) CHECK(uf_derivation_D(uf_letter(2 * n), r).is_zero());
    CHECK_THROWS_AS(dec_coaction(s("s2 s3")), std::invalid_argument);
    CHECK(uf_letter(4) == support::q("2/5") * s("s2 s2"));
}

TEST_CASE("kernel of the lower derivations is spanned by s_N") {
    for (int n = 2; n <= 12; ++n) {
        const auto k = uf_kernel(n);
        REQUIRE(k.size() == 1);
        NCPoly expected = uf_letter(n);
        expected *= 1 / expected.canonical_terms().front().second;
        CHECK(k.front() == expected);
    }
}

TEST_CASE("D is a derivation for the shuffle product on U^f") {
    Rng rng(71);
    for (int i = 0; i < support::kCases; ++i) {
        const int a = support::uniform(rng, 2, 5), b = support::uniform(rng, 2, 10 - a);
        const NCPoly u = random_uf(rng, a), v = random_uf(rng, b);
        const int r = support::uniform(rng, 1, 4);
        CHECK(uf_derivation_D(uf_shuffle(u, v), r) == shuffle_right(uf_derivation_D(u, r), v) + shuffle_right(uf_derivation_D(v, r), u));
    }
}

TEST_CASE("U^f word encoding") {
    CHECK(split_uf_word(uf_word(make_word({3, 5}), 2)) == std::make_pair(make_word({3, 5}), 2));
    CHECK_FALSE(is_uf_word(make_word({2, 3})));
    CHECK_THROWS_AS(uf_word(make_word({2}), 0), std::invalid_argument);
    CHECK_THROWS_AS(uf_kernel(1), std::invalid_argument);
}
