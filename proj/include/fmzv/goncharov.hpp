#ifndef FMZV_GONCHAROV_HPP
#define FMZV_GONCHAROV_HPP

#include "fmzv/ihara.hpp"
#include "fmzv/words.hpp"

#include <utility>
#include <vector>

namespace fmzv {

// I(a; f; b): f for (x1, x0), antipode_conc(f) for (x0, x1), (f | 1) for a = b.
NCPoly iformal(Letter a, const NCPoly& f, Letter b);

// Subword formula with virtual bounds e_0 = x1, e_{n+1} = x0.
Tensor2 gon_coproduct(const Word& w);
Tensor2 gon_coproduct(const NCPoly& p);
// Only the terms whose left factor has the given weight.
Tensor2 gon_coproduct_left_weight(const Word& w, int left_weight);
// gon_coproduct(w) - 1 (x) w.
Tensor2 gon_prime(const Word& w);

// Contiguous strict subwords of length 2r+1; left factors are not reduced.
Tensor2 partial_2r1(const Word& w, int r);
Tensor2 partial_2r1(const NCPoly& p, int r);

// (pi_indec (x) id) of the weight-(2r+1) left part of gon_prime; left factors on Lyndon words.
Tensor2 derivation_D(const NCPoly& p, int r);
// (pi_indec (x) id) o partial_2r1.
Tensor2 derivation_D_from_partial(const NCPoly& p, int r);

// (r, D_{2r+1}(p)) for 3 <= 2r+1 < n.
std::vector<std::pair<int, Tensor2>> d_less_n(const NCPoly& p, int n);

// (G * H | w) == (G (x) H | gon_coproduct(w)).
bool duality_check(const TruncatedSeries& g, const TruncatedSeries& h, const Word& w);
// Same check for every word of weight <= max_weight, sharing one product.
bool duality_check_all(const TruncatedSeries& g, const TruncatedSeries& h, int max_weight);

}  // namespace fmzv

#endif
