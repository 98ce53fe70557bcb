#include "fmzv/odd_model.hpp"

#include "fmzv/qmatrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace fmzv {

namespace {

constexpr char kS2 = 2;

void require_uf(const NCPoly& e, const char* what) {
    if (e.is_zero()) return;
    if (e.alphabet() != Alphabet::S) throw std::invalid_argument(std::string(what) + ": element must be over S");
    for (const auto& [w, c] : e.terms())
        if (!is_uf_word(w)) throw std::invalid_argument(std::string(what) + ": s2 letters must trail the odd word");
}

}  // namespace

bool is_uf_word(const Word& w) {
    std::size_t i = 0;
    while (i < w.size() && w[i] != kS2) ++i;
    return std::all_of(w.begin() + static_cast<std::ptrdiff_t>(i), w.end(), [](char l) { return l == kS2; });
}

Word uf_word(const Word& odd, int k) {
    if (odd.find(kS2) != Word::npos) throw std::invalid_argument("uf_word: odd part contains s2");
    return odd + Word(static_cast<std::size_t>(k), kS2);
}

std::pair<Word, int> split_uf_word(const Word& w) {
    const std::size_t pos = std::min(w.find(kS2), w.size());
    if (!is_uf_word(w)) throw std::invalid_argument("split_uf_word: s2 letters must trail the odd word");
    return {w.substr(0, pos), static_cast<int>(w.size() - pos)};
}

NCPoly uf_letter(int w) {
    if (w < 2) throw std::invalid_argument("uf_letter: weight must be at least 2");
    if (w % 2) return NCPoly::word(Alphabet::S, Word(1, static_cast<char>(w)));
    return NCPoly::word(Alphabet::S, Word(static_cast<std::size_t>(w / 2), kS2), b_coeff(static_cast<unsigned>(w / 2)));
}

std::vector<Word> uf_basis(int n) {
    if (n < 0) throw std::invalid_argument("uf_basis: negative weight");
    std::vector<Word> out;
    for (int k = 0; 2 * k <= n; ++k)
        for (const auto& u : words_of_weight(Alphabet::S, n - 2 * k))
            if (u.find(kS2) == Word::npos) out.push_back(uf_word(u, k));
    return out;
}

long long uf_dim(int n) {
    if (n < 0) return 0;
    // Coefficients of 1/(1 - x^2 - x^3).
    std::vector<long long> a(static_cast<std::size_t>(n) + 1, 0);
    a[0] = 1;
    for (int i = 1; i <= n; ++i) a[i] = (i >= 2 ? a[i - 2] : 0) + (i >= 3 ? a[i - 3] : 0);
    return a[n];
}

NCPoly uf_shuffle(const NCPoly& a, const NCPoly& b) {
    require_uf(a, "uf_shuffle");
    require_uf(b, "uf_shuffle");
    NCPoly out(Alphabet::S);
    for (const auto& [wa, ca] : a.terms()) {
        const auto [ua, ka] = split_uf_word(wa);
        for (const auto& [wb, cb] : b.terms()) {
            const auto [ub, kb] = split_uf_word(wb);
            for (const auto& [z, c] : shuffle(Alphabet::S, ua, ub).terms()) out.add(uf_word(z, ka + kb), c * ca * cb);
        }
    }
    return out;
}

Tensor2 dec_coaction(const NCPoly& e) {
    require_uf(e, "dec_coaction");
    Tensor2 out(Alphabet::S);
    for (const auto& [w, c] : e.terms()) {
        const auto [u, k] = split_uf_word(w);
        for (std::size_t i = 0; i <= u.size(); ++i) {
            NCPoly left = NCPoly::word(Alphabet::S, u.substr(0, i), c);
            out += tensor(left, NCPoly::word(Alphabet::S, uf_word(u.substr(i), k)));
        }
    }
    return out;
}

Tensor2 uf_derivation_D(const NCPoly& e, int r) {
    require_uf(e, "uf_derivation_D");
    if (r < 0) throw std::invalid_argument("uf_derivation_D: r must be non-negative");
    const int w = 2 * r + 1;
    Tensor2 out(Alphabet::S);
    std::map<Word, NCPoly> by_right;
    for (const auto& [lr, c] : dec_coaction(e).terms()) {
        if (lr.first.empty() || weight(Alphabet::S, lr.first) != w) continue;
        by_right.try_emplace(lr.second, Alphabet::S).first->second.add(lr.first, c);
    }
    for (const auto& [right, left] : by_right) {
        const NCPoly p = pi_indec(left, w);
        if (!p.is_zero()) out += tensor(p, NCPoly::word(Alphabet::S, right));
    }
    return out;
}

std::vector<NCPoly> uf_kernel(int n) {
    if (n < 2) throw std::invalid_argument("uf_kernel: weight must be at least 2");
    const auto basis = uf_basis(n);
    std::map<std::tuple<int, Word, Word>, std::size_t> rows;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> columns(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (int r = 1; 2 * r + 1 < n; ++r)
            for (const auto& [lr, c] : uf_derivation_D(NCPoly::word(Alphabet::S, basis[j]), r).terms()) {
                const auto key = std::make_tuple(r, lr.first, lr.second);
                const std::size_t i = rows.try_emplace(key, rows.size()).first->second;
                columns[j].emplace_back(i, c);
            }
    QMatrix m(rows.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (const auto& [i, c] : columns[j]) m(i, j) = c;
    RowEchelon ech(basis.size());
    for (auto& k : rank_and_kernel(m).kernel) ech.insert(std::move(k));
    std::vector<NCPoly> out;
    for (const auto& row : ech.sorted_rows()) {
        NCPoly p(Alphabet::S);
        for (std::size_t j = 0; j < basis.size(); ++j) p.add(basis[j], row[j]);
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace fmzv
