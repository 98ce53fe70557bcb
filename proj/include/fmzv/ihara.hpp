#ifndef FMZV_IHARA_HPP
#define FMZV_IHARA_HPP

#include "fmzv/words.hpp"

namespace fmzv {

// All operations in this header act on polynomials over X.

// d_f(x0) = 0, d_f(x1) = [x1, f], extended as a derivation of concatenation.
NCPoly special_derivation(const NCPoly& f, const NCPoly& g);

// Post-Lie product extended to the enveloping algebra by the rules
// 1|>B = B, x|>1 = 0, xA|>y = x|>(A|>y) - (x|>A)|>y, A|>BC = (A1|>B)(A2|>C).
NCPoly postlie_tr(const NCPoly& a, const NCPoly& b);

// {f, g} = d_f(g) - d_g(f) + [f, g].
NCPoly ihara_bracket(const NCPoly& f, const NCPoly& g);

// A * B = A1 (A2 |> B) with Sweedler components of the dual shuffle coproduct.
NCPoly grossman_larson(const NCPoly& a, const NCPoly& b);
// Terms of total weight above max_weight are never formed.
NCPoly grossman_larson(const NCPoly& a, const NCPoly& b, int max_weight);

// Insertion formula A1 x0^k1 S(A2) x1 A3 x0^k2 ... x0^k{d+1}.
NCPoly gl_closed_form(const NCPoly& a, const Word& w);

// Antipode of the Grossman-Larson Hopf algebra, solved word by word from S * id = unit o counit.
NCPoly gl_antipode(const NCPoly& a, int max_weight);

// True iff p has zero constant term and is primitive for the dual shuffle coproduct.
bool is_lie_element(const NCPoly& p);

class LieElement {
public:
    // Throws std::invalid_argument when p is not primitive.
    explicit LieElement(NCPoly p);
    const NCPoly& value() const { return value_; }

private:
    NCPoly value_;
};

// Standard bracketing of a Lyndon word over X.
NCPoly lyndon_bracket(const Word& lyndon);

struct TruncatedSeries {
    NCPoly value;
    int truncation_weight = 0;
};

// Requires zero constant term.
TruncatedSeries exp_trunc(const NCPoly& f, int n);
// Requires constant term 1.
NCPoly log_trunc(const TruncatedSeries& g);
// Delta(G) = G (x) G up to the truncation weight.
bool is_grouplike(const TruncatedSeries& g);

// x0 -> x0, x1 -> G^{-1} x1 G with G^{-1} = antipode_conc(G); throws when G is not grouplike.
NCPoly kappa_apply(const TruncatedSeries& g, const Word& w);
NCPoly kappa_apply(const TruncatedSeries& g, const NCPoly& p);

}  // namespace fmzv

#endif
