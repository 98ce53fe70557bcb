#ifndef FMZV_ODD_MODEL_HPP
#define FMZV_ODD_MODEL_HPP

#include "fmzv/words.hpp"

#include <utility>
#include <vector>

namespace fmzv {

// An element (u, k) of U^f, u an odd word, is stored as the S-word u s2^k.
// Elements are NCPoly over Alphabet::S whose words all have this shape.
bool is_uf_word(const Word& w);
Word uf_word(const Word& odd, int k);
std::pair<Word, int> split_uf_word(const Word& w);

// s_w: the letter itself for odd w, b_n s2^n for w = 2n.
NCPoly uf_letter(int w);

// Ordered by s2 power, then canonical order of the odd word.
std::vector<Word> uf_basis(int n);
long long uf_dim(int n);

NCPoly uf_shuffle(const NCPoly& a, const NCPoly& b);

// Left factor is an odd word, right factor an element of U^f.
Tensor2 dec_coaction(const NCPoly& e);
// Left factor projected to indecomposables of weight 2r+1.
Tensor2 uf_derivation_D(const NCPoly& e, int r);
// Canonical basis of ker D_{<n} in weight n.
std::vector<NCPoly> uf_kernel(int n);

}  // namespace fmzv

#endif
