#include "fmzv/goncharov.hpp"

#include <stdexcept>

namespace fmzv {

namespace {

void require_x(const NCPoly& p, const char* what) {
    if (!p.is_zero() && p.alphabet() != Alphabet::X)
        throw std::invalid_argument(std::string(what) + ": polynomial must be over X");
}

struct Factor {
    Word word;
    bool negative;
};

struct GonState {
    const Word* w;
    int left_weight;  // -1 for all terms
    std::vector<Factor> factors;
    Word chosen;
    int body_total = 0;
    Tensor2 out{Alphabet::X};
};

Letter bound(const Word& w, std::size_t p) {
    if (p == 0) return kX1;
    if (p == w.size() + 1) return kX0;
    return static_cast<Letter>(w[p - 1]);
}

// Returns false when the factor vanishes.
bool make_factor(Letter a, const Word& body, Letter b, Factor& out) {
    if (a == b) {
        if (!body.empty()) return false;
        out = {Word(), false};
        return true;
    }
    if (a == kX1) out = {body, false};
    else out = {reversed(body), body.size() % 2 == 1};
    return true;
}

void gon_rec(GonState& st, std::size_t prev) {
    const Word& w = *st.w;
    const std::size_t n = w.size();
    for (std::size_t q = prev + 1; q <= n + 1; ++q) {
        const Word body = w.substr(prev, q - prev - 1);
        const int total = st.body_total + static_cast<int>(body.size());
        if (st.left_weight >= 0 && total > st.left_weight) break;
        Factor f;
        if (!make_factor(bound(w, prev), body, bound(w, q), f)) continue;
        st.factors.push_back(f);
        st.body_total = total;
        if (q == n + 1) {
            if (st.left_weight < 0 || total == st.left_weight) {
                NCPoly left = NCPoly::one(Alphabet::X);
                bool negative = false;
                for (const auto& fac : st.factors) {
                    if (!fac.word.empty()) left = shuffle(left, NCPoly::word(Alphabet::X, fac.word));
                    negative ^= fac.negative;
                }
                for (const auto& [lw, c] : left.terms()) st.out.add(lw, st.chosen, negative ? Rational(-c) : c);
            }
        } else {
            st.chosen.push_back(w[q - 1]);
            gon_rec(st, q);
            st.chosen.pop_back();
        }
        st.body_total -= static_cast<int>(body.size());
        st.factors.pop_back();
    }
}

Tensor2 gon_impl(const Word& w, int left_weight) {
    GonState st;
    st.w = &w;
    st.left_weight = left_weight;
    gon_rec(st, 0);
    return st.out;
}

Tensor2 project_left(const Tensor2& t, int n) {
    std::map<Word, NCPoly> by_right;
    for (const auto& [k, c] : t.terms()) {
        auto it = by_right.try_emplace(k.second, Alphabet::X).first;
        it->second.add(k.first, c);
    }
    Tensor2 out(Alphabet::X);
    for (const auto& [right, left] : by_right) {
        const NCPoly reduced = pi_indec(left, n);
        for (const auto& [lw, c] : reduced.terms()) out.add(lw, right, c);
    }
    return out;
}

}  // namespace

NCPoly iformal(Letter a, const NCPoly& f, Letter b) {
    require_x(f, "iformal");
    if (a == b) return NCPoly::word(Alphabet::X, Word(), f.constant_term());
    if (a == kX1) return f;
    return antipode_conc(f);
}

Tensor2 gon_coproduct(const Word& w) { return gon_impl(w, -1); }

Tensor2 gon_coproduct(const NCPoly& p) {
    require_x(p, "gon_coproduct");
    Tensor2 out(Alphabet::X);
    for (const auto& [w, c] : p.terms()) {
        Tensor2 t = gon_coproduct(w);
        t *= c;
        out += t;
    }
    return out;
}

Tensor2 gon_coproduct_left_weight(const Word& w, int left_weight) { return gon_impl(w, left_weight); }

Tensor2 gon_prime(const Word& w) {
    Tensor2 t = gon_coproduct(w);
    t.add(Word(), w, -1);
    return t;
}

Tensor2 partial_2r1(const Word& w, int r) {
    Tensor2 out(Alphabet::X);
    if (r < 1) throw std::invalid_argument("partial_2r1: r must be positive");
    const std::size_t len = static_cast<std::size_t>(2 * r + 1);
    const std::size_t n = w.size();
    if (len > n) return out;
    for (std::size_t j = 0; j + len <= n; ++j) {
        Factor f;
        if (!make_factor(bound(w, j), w.substr(j, len), bound(w, j + len + 1), f)) continue;
        out.add(f.word, w.substr(0, j) + w.substr(j + len), f.negative ? -1 : 1);
    }
    return out;
}

Tensor2 partial_2r1(const NCPoly& p, int r) {
    require_x(p, "partial_2r1");
    Tensor2 out(Alphabet::X);
    for (const auto& [w, c] : p.terms()) {
        Tensor2 t = partial_2r1(w, r);
        t *= c;
        out += t;
    }
    return out;
}

Tensor2 derivation_D(const NCPoly& p, int r) {
    require_x(p, "derivation_D");
    if (r < 1) throw std::invalid_argument("derivation_D: r must be positive");
    Tensor2 raw(Alphabet::X);
    for (const auto& [w, c] : p.terms()) {
        Tensor2 t = gon_coproduct_left_weight(w, 2 * r + 1);
        t *= c;
        raw += t;
    }
    return project_left(raw, 2 * r + 1);
}

Tensor2 derivation_D_from_partial(const NCPoly& p, int r) {
    return project_left(partial_2r1(p, r), 2 * r + 1);
}

std::vector<std::pair<int, Tensor2>> d_less_n(const NCPoly& p, int n) {
    std::vector<std::pair<int, Tensor2>> out;
    for (int r = 1; 2 * r + 1 < n; ++r) out.emplace_back(r, derivation_D(p, r));
    return out;
}

bool duality_check(const TruncatedSeries& g, const TruncatedSeries& h, const Word& w) {
    const int n = static_cast<int>(w.size());
    const NCPoly gv = g.value.truncated(n), hv = h.value.truncated(n);
    const NCPoly prod = grossman_larson(gv, hv, n);
    return prod.coeff(w) == pair_tensor(gon_coproduct(w), gv, hv);
}

bool duality_check_all(const TruncatedSeries& g, const TruncatedSeries& h, int max_weight) {
    const NCPoly gv = g.value.truncated(max_weight), hv = h.value.truncated(max_weight);
    const NCPoly prod = grossman_larson(gv, hv, max_weight);
    for (int n = 0; n <= max_weight; ++n)
        for (const auto& w : words_of_weight(Alphabet::X, n))
            if (prod.coeff(w) != pair_tensor(gon_coproduct(w), gv, hv)) return false;
    return true;
}

}  // namespace fmzv
