#ifndef FMZV_DOUBLE_SHUFFLE_HPP
#define FMZV_DOUBLE_SHUFFLE_HPP

#include "fmzv/level_matrix.hpp"
#include "fmzv/qmatrix.hpp"
#include "fmzv/words.hpp"

#include <map>
#include <utility>
#include <vector>

namespace fmzv {

// (k1, ..., kd) -> x0^{k1-1} x1 ... x0^{kd-1} x1.
Word index_to_word(const std::vector<int>& parts);

// X -> Y; words ending in x0 map to 0.
NCPoly pi_Y(const NCPoly& p);
// Y -> X, y_k -> x0^{k-1} x1.
NCPoly iota(const NCPoly& p);

NCPoly psi_star(const NCPoly& psi);
bool check_dm_conditions(const NCPoly& psi);
bool check_depth1_even_vanishing(const NCPoly& psi, int w);

// The weight-3 and weight-5 dm elements in bracket form.
NCPoly dm_xi3();
NCPoly dm_xi5();

// Canonical basis: reduced row echelon form in the canonical word order.
std::vector<NCPoly> dm_basis(int w);
// Same space from the linear system on all words of weight w.
std::vector<NCPoly> dm_basis_word_system(int w);

// Polynomial in T with coefficients in the convergent subalgebra, keyed by the power of T.
using TPoly = std::map<int, NCPoly>;
// Keyed by (power of T, power of U).
using TUPoly = std::map<std::pair<int, int>, NCPoly>;

// Preimage under Y0[T] -> Y, T -> y1.
TPoly reg_stuffle_inverse(const Word& y);
NCPoly reg_stuffle_forward(const TPoly& p);
// Preimage under h0[T, U] -> X, T -> x1, U -> x0.
TUPoly reg_shuffle_inverse(const Word& x);
NCPoly reg_shuffle_forward(const TUPoly& p);
// The T = U = 0 part; an algebra morphism onto h0 killing x0 and x1.
NCPoly reg0(const NCPoly& p);

// Weight-n piece of the extended double shuffle ideal, reduced modulo the ideal (x0, x1):
// the quotient is h0_n / span{reg0(g) sh z}.
struct EDSWeightSpace {
    int n = 0;
    bool full_word_basis = false;
    std::vector<Word> columns;
    std::map<Word, std::size_t> index;
    RowEchelon relations{0};
    int quotient_dim = 0;
    // Non-pivot columns.
    std::vector<Word> section;

    NCPoly reduce(const NCPoly& p) const;
};

const EDSWeightSpace& eds_weight_space(int n);
// Relations over all words of weight n, generators x0, x1 included.
EDSWeightSpace eds_weight_space_full(int n);

// Canonical representative; throws on inhomogeneous input.
NCPoly zf_reduce(const NCPoly& p, int n);
int zf_dim(int n);

bool verify_euler();
// zf(2n) = b_n zf(2)^n.
bool verify_even_zeta(int n);
// zf({2}^n) = 6^n / (2n+1)! zf(2)^n.
bool verify_zeta_222(int n);
bool verify_level_one_identity(int n);
bool verify_formal_zagier(int a, int b);

}  // namespace fmzv

#endif
