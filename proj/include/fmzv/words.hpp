#ifndef FMZV_WORDS_HPP
#define FMZV_WORDS_HPP

#include "fmzv/arith.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fmzv {

// X = {x0, x1}; Y = {y1, y2, ...}; S = {s2, s3, s5, s7, ...}.
enum class Alphabet { X, Y, S };

// Letter codes: X uses 0 and 1; Y and S use the letter weight.
using Letter = unsigned char;
// A word is a packed string of letter codes.
using Word = std::string;

constexpr Letter kX0 = 0;
constexpr Letter kX1 = 1;

std::string alphabet_name(Alphabet a);
Alphabet parse_alphabet(const std::string& name);

bool valid_letter(Alphabet a, int code);
int letter_weight(Alphabet a, Letter c);
int weight(Alphabet a, const Word& w);
// Number of x1 letters.
int depth(const Word& w);
std::vector<Letter> letters_of_weight(Alphabet a, int k);

Word make_word(std::initializer_list<int> codes);
inline Word concat(const Word& u, const Word& v) { return u + v; }
Word reversed(const Word& w);

// Canonical order: weight, then length, then lexicographic on letter codes.
bool canonical_less(Alphabet a, const Word& u, const Word& v);

class NCPoly {
public:
    using Terms = std::map<Word, Rational>;

    NCPoly() = default;
    explicit NCPoly(Alphabet a) : alphabet_(a) {}
    static NCPoly word(Alphabet a, const Word& w, const Rational& c = 1);
    static NCPoly one(Alphabet a) { return word(a, Word()); }

    Alphabet alphabet() const { return alphabet_; }
    const Terms& terms() const& { return terms_; }
    // Rvalue overload keeps range-for over temporaries safe.
    Terms terms() && { return std::move(terms_); }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add(const Word& w, const Rational& c);
    Rational coeff(const Word& w) const;
    Rational constant_term() const { return coeff(Word()); }

    NCPoly component(int w) const;
    NCPoly truncated(int max_weight) const;
    // -1 for the zero polynomial.
    int max_weight() const;
    int min_weight() const;
    bool homogeneous() const;

    std::vector<std::pair<Word, Rational>> canonical_terms() const;

    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly& operator*=(const Rational& c);
    bool operator==(const NCPoly& o) const { return alphabet_ == o.alphabet_ && terms_ == o.terms_; }
    bool operator!=(const NCPoly& o) const { return !(*this == o); }

private:
    Alphabet alphabet_ = Alphabet::X;
    Terms terms_;
};

NCPoly operator+(NCPoly a, const NCPoly& b);
NCPoly operator-(NCPoly a, const NCPoly& b);
NCPoly operator-(NCPoly a);
NCPoly operator*(const Rational& c, NCPoly a);
// Concatenation product.
NCPoly operator*(const NCPoly& a, const NCPoly& b);
NCPoly commutator(const NCPoly& a, const NCPoly& b);

class Tensor2 {
public:
    using Key = std::pair<Word, Word>;
    using Terms = std::map<Key, Rational>;

    Tensor2() = default;
    Tensor2(Alphabet left, Alphabet right) : left_(left), right_(right) {}
    explicit Tensor2(Alphabet a) : left_(a), right_(a) {}

    Alphabet left_alphabet() const { return left_; }
    Alphabet right_alphabet() const { return right_; }
    const Terms& terms() const& { return terms_; }
    Terms terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(const Word& l, const Word& r, const Rational& c);
    Rational coeff(const Word& l, const Word& r) const;

    // Sorted by right factor canonically, then left factor canonically.
    std::vector<std::pair<Key, Rational>> canonical_terms() const;

    Tensor2& operator+=(const Tensor2& o);
    Tensor2& operator-=(const Tensor2& o);
    Tensor2& operator*=(const Rational& c);
    bool operator==(const Tensor2& o) const {
        return left_ == o.left_ && right_ == o.right_ && terms_ == o.terms_;
    }
    bool operator!=(const Tensor2& o) const { return !(*this == o); }

private:
    Alphabet left_ = Alphabet::X;
    Alphabet right_ = Alphabet::X;
    Terms terms_;
};

Tensor2 operator+(Tensor2 a, const Tensor2& b);
Tensor2 operator-(Tensor2 a, const Tensor2& b);
Tensor2 tensor(const NCPoly& a, const NCPoly& b);
// Terms with weight(left) + weight(right) <= max_weight.
Tensor2 tensor_truncated(const NCPoly& a, const NCPoly& b, int max_weight);
// (a (x) b) shuffled componentwise with (c (x) d).
Tensor2 tensor_shuffle(const Tensor2& s, const Tensor2& t);
// sum c * (left | p)(right | q).
Rational pair_tensor(const Tensor2& t, const NCPoly& p, const NCPoly& q);

// Letter product for quasi-shuffles; must be commutative, associative and weight additive.
class Diamond {
public:
    using Merge = std::function<std::optional<Letter>(Letter, Letter)>;

    explicit Diamond(Merge merge, bool zero = false) : merge_(std::move(merge)), zero_(zero) {}
    static Diamond zero();
    // y_i <> y_j = y_{i+j}.
    static Diamond stuffle();

    bool is_zero() const { return zero_; }
    std::optional<Letter> merge(Letter a, Letter b) const { return zero_ ? std::nullopt : merge_(a, b); }
    std::vector<std::pair<Letter, Letter>> split(Alphabet a, Letter c) const;

private:
    Merge merge_;
    bool zero_;
};

NCPoly shuffle(const NCPoly& u, const NCPoly& v);
NCPoly shuffle(Alphabet a, const Word& u, const Word& v);
NCPoly quasi_shuffle(const NCPoly& u, const NCPoly& v, const Diamond& d);
NCPoly stuffle(const NCPoly& u, const NCPoly& v);
// n-fold shuffle power; p^0 = 1.
NCPoly shuffle_power(const NCPoly& p, int n);

Tensor2 deconcat(Alphabet a, const Word& w);
Tensor2 deconcat(const NCPoly& p);
// sum over u, v of (w | u * v) u (x) v.
Tensor2 dual_coproduct(Alphabet a, const Word& w, const Diamond& d);
Tensor2 dual_coproduct(const NCPoly& p, const Diamond& d);

// w -> (-1)^{length} reverse(w).
NCPoly antipode_conc(const NCPoly& p);

// Compositions of n in lexicographic order.
std::vector<std::vector<int>> compositions(int n);
// I[w]; empty when some merge is undefined.
std::optional<Word> apply_composition(const std::vector<int>& parts, const Word& w, const Diamond& d);
NCPoly hoffman_exp(const NCPoly& p, const Diamond& d);
NCPoly hoffman_log(const NCPoly& p, const Diamond& d);

// Letter order by code, so x0 < x1. Throws std::invalid_argument on the empty word.
bool is_lyndon(const Word& w);
// Chen-Fox-Lyndon factors l1 >= l2 >= ... >= lk.
std::vector<Word> lyndon_factorization(const Word& w);
std::vector<Word> lyndon_words(Alphabet a, int weight);

// All words of total weight N in lexicographic order.
const std::vector<Word>& words_of_weight(Alphabet a, int n);

// Indecomposable part of the weight-n component, on Lyndon words.
NCPoly pi_indec(const NCPoly& p, int n);
// Same value by row-reducing the span of all u sh v in weight n.
NCPoly pi_indec_rowreduce(const NCPoly& p, int n);

inline Rational pairing(const NCPoly& p, const Word& w) { return p.coeff(w); }
Rational pairing(const NCPoly& p, const NCPoly& q);

}  // namespace fmzv

#endif
