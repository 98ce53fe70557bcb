#ifndef FMZV_TESTS_SUPPORT_HPP
#define FMZV_TESTS_SUPPORT_HPP

#include <doctest.h>

#include "fmzv/io.hpp"
#include "fmzv/words.hpp"

#include <random>
#include <vector>

namespace doctest {
template <>
struct StringMaker<fmzv::NCPoly> {
    static String convert(const fmzv::NCPoly& p) { return fmzv::format_poly(p).c_str(); }
};
template <>
struct StringMaker<fmzv::Tensor2> {
    static String convert(const fmzv::Tensor2& t) { return fmzv::format_tensor(t).c_str(); }
};
}  // namespace doctest

namespace support {

using fmzv::Alphabet;
using fmzv::NCPoly;
using fmzv::Rational;
using fmzv::Word;

inline constexpr int kCases = 200;

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Rational random_rational(Rng& rng) {
    Rational q(uniform(rng, -9, 9), uniform(rng, 1, 4));
    q.canonicalize();
    return q;
}

inline Word random_word(Rng& rng, Alphabet a, int weight) {
    const auto& ws = fmzv::words_of_weight(a, weight);
    return ws[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(ws.size()) - 1))];
}

inline NCPoly random_poly(Rng& rng, Alphabet a, int weight, int terms) {
    NCPoly p(a);
    for (int i = 0; i < terms; ++i) p.add(random_word(rng, a, weight), random_rational(rng));
    return p;
}

inline NCPoly x(const char* text) { return fmzv::parse_poly(Alphabet::X, text); }
inline NCPoly y(const char* text) { return fmzv::parse_poly(Alphabet::Y, text); }
inline NCPoly s(const char* text) { return fmzv::parse_poly(Alphabet::S, text); }
inline Rational q(const char* text) { return fmzv::parse_rational(text); }

// Random Lie element of the given weight over X.
NCPoly random_lie(Rng& rng, int weight);

}  // namespace support

#endif
