#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "fmzv/ihara.hpp"

namespace support {

NCPoly random_lie(Rng& rng, int weight) {
    const auto lw = fmzv::lyndon_words(Alphabet::X, weight);
    NCPoly p(Alphabet::X);
    for (const auto& l : lw) {
        NCPoly t = fmzv::lyndon_bracket(l);
        t *= random_rational(rng);
        p += t;
    }
    return p;
}

}  // namespace support
