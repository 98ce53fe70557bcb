#ifndef FMZV_LEVEL_MATRIX_HPP
#define FMZV_LEVEL_MATRIX_HPP

#include "fmzv/qmatrix.hpp"
#include "fmzv/words.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fmzv {

// Entries are 2 or 3.
using Word23 = std::vector<int>;

int weight23(const Word23& u);
int level23(const Word23& u);
std::string format_word23(const Word23& u);
// Accepts "(3,2,2,2)", "3,2,2,2", "3222" and "()".
Word23 parse_word23(const std::string& text);

// 2 -> x0x1, 3 -> x0x0x1.
Word bzd(const Word23& u);
std::optional<Word23> unbzd(const Word& w);
// Number of 3-blocks; throws std::invalid_argument outside the image of bzd.
int level(const Word& w);

// Order of bzd words under x0 < x1, i.e. 3 precedes 2 letterwise.
bool word23_less(const Word23& u, const Word23& v);

struct LevelBasis {
    int n = 0;
    int ell = 0;
    std::vector<Word23> elements;
};

LevelBasis enumerate_basis(int n, int ell);
// Level ell-1 words of weight < n-1 and matching parity, ordered so that psi is increasing.
std::vector<Word23> enumerate_codomain(int n, int ell);
// 2^{r-1} 3 v with 2r = n - 1 - weight(v).
Word23 psi(const Word23& v, int n);

// 2 (-1)^r (C(2r, 2b+2) - (1 - 2^{-2r}) C(2r, 2a+1)).
Rational c_coeff(int a, int b, int r);
// c_{a,b} = c^{a+b+1}_{a,b}.
Rational c_ab(int a, int b);

// (x0x1)^a x0x0x1 (x0x1)^b -> c_{a,b}; (x0x1)^n x0 -> 2 (-1)^n; other shapes throw.
Rational phi_of_factor(const NCPoly& p);

std::map<Word23, Rational> partial_phi(const Word23& w, int n, int ell);
QMatrix build_matrix(int n, int ell);

bool verify_c_lemma(int max);
bool verify_binomial_identity(int max);

}  // namespace fmzv

#endif
