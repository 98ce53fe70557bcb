#include "fmzv/ihara.hpp"

#include <mutex>
#include <stdexcept>

namespace fmzv {

namespace {

void require_x(const NCPoly& p, const char* what) {
    if (!p.is_zero() && p.alphabet() != Alphabet::X)
        throw std::invalid_argument(std::string(what) + ": polynomial must be over X");
}

NCPoly letter(Letter c) { return NCPoly::word(Alphabet::X, Word(1, static_cast<char>(c))); }

// d_f on a single word.
void derive_word(const NCPoly& bracket_x1_f, const Word& w, const Rational& c, NCPoly& out) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (static_cast<Letter>(w[i]) != kX1) continue;
        const Word pre = w.substr(0, i), post = w.substr(i + 1);
        for (const auto& [m, cm] : bracket_x1_f.terms()) out.add(pre + m + post, c * cm);
    }
}

std::recursive_mutex tr_mu;
std::map<std::pair<Word, Word>, NCPoly> tr_cache;
std::map<std::pair<Word, Word>, NCPoly> gl_cache;
std::map<Word, NCPoly> antipode_cache;

// Product of Lie polynomials fs acting on the letter y, expanded by the Ext2 recursion.
NCPoly tr_sequence(const std::vector<NCPoly>& fs, Letter y) {
    if (fs.empty()) return letter(y);
    if (fs.size() == 1) return special_derivation(fs[0], letter(y));
    const std::vector<NCPoly> rest(fs.begin() + 1, fs.end());
    NCPoly out = special_derivation(fs[0], tr_sequence(rest, y));
    for (std::size_t i = 0; i < rest.size(); ++i) {
        NCPoly moved = special_derivation(fs[0], rest[i]);
        if (moved.is_zero()) continue;
        std::vector<NCPoly> seq = rest;
        seq[i] = std::move(moved);
        out -= tr_sequence(seq, y);
    }
    return out;
}

const NCPoly& tr_word(const Word& a, const Word& b) {
    auto key = std::make_pair(a, b);
    auto it = tr_cache.find(key);
    if (it != tr_cache.end()) return it->second;
    NCPoly out(Alphabet::X);
    if (b.empty()) {
        if (a.empty()) out.add(Word(), 1);
    } else if (a.empty()) {
        out.add(b, 1);
    } else if (b.size() == 1) {
        std::vector<NCPoly> fs;
        for (char c : a) fs.push_back(letter(static_cast<Letter>(c)));
        out = tr_sequence(fs, static_cast<Letter>(b[0]));
    } else {
        const Word b1 = b.substr(0, 1), rest = b.substr(1);
        const Tensor2 split = dual_coproduct(Alphabet::X, a, Diamond::zero());
        for (const auto& [k, c] : split.terms()) {
            const NCPoly left = tr_word(k.first, b1);
            if (left.is_zero()) continue;
            NCPoly term = left * tr_word(k.second, rest);
            term *= c;
            out += term;
        }
    }
    return tr_cache.emplace(std::move(key), std::move(out)).first->second;
}

const NCPoly& gl_word(const Word& a, const Word& b) {
    auto key = std::make_pair(a, b);
    auto it = gl_cache.find(key);
    if (it != gl_cache.end()) return it->second;
    NCPoly out(Alphabet::X);
    const Tensor2 split = dual_coproduct(Alphabet::X, a, Diamond::zero());
    for (const auto& [k, c] : split.terms()) {
        NCPoly term = NCPoly::word(Alphabet::X, k.first) * tr_word(k.second, b);
        term *= c;
        out += term;
    }
    return gl_cache.emplace(std::move(key), std::move(out)).first->second;
}

const NCPoly& antipode_word(const Word& a) {
    auto it = antipode_cache.find(a);
    if (it != antipode_cache.end()) return it->second;
    NCPoly out(Alphabet::X);
    if (a.empty()) {
        out.add(Word(), 1);
    } else {
        const Tensor2 split = dual_coproduct(Alphabet::X, a, Diamond::zero());
        for (const auto& [k, c] : split.terms()) {
            if (k.second.empty()) continue;
            NCPoly term = grossman_larson(antipode_word(k.first), NCPoly::word(Alphabet::X, k.second));
            term *= -c;
            out += term;
        }
    }
    return antipode_cache.emplace(a, std::move(out)).first->second;
}

}  // namespace

NCPoly special_derivation(const NCPoly& f, const NCPoly& g) {
    require_x(f, "special_derivation");
    require_x(g, "special_derivation");
    NCPoly out(Alphabet::X);
    if (f.is_zero() || g.is_zero()) return out;
    const NCPoly br = commutator(letter(kX1), f);
    for (const auto& [w, c] : g.terms()) derive_word(br, w, c, out);
    return out;
}

NCPoly postlie_tr(const NCPoly& a, const NCPoly& b) {
    require_x(a, "postlie_tr");
    require_x(b, "postlie_tr");
    std::lock_guard<std::recursive_mutex> lock(tr_mu);
    NCPoly out(Alphabet::X);
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms()) {
            NCPoly t = tr_word(u, v);
            t *= cu * cv;
            out += t;
        }
    return out;
}

NCPoly ihara_bracket(const NCPoly& f, const NCPoly& g) {
    return special_derivation(f, g) - special_derivation(g, f) + commutator(f, g);
}

NCPoly grossman_larson(const NCPoly& a, const NCPoly& b) { return grossman_larson(a, b, -1); }

NCPoly grossman_larson(const NCPoly& a, const NCPoly& b, int max_weight) {
    require_x(a, "grossman_larson");
    require_x(b, "grossman_larson");
    std::lock_guard<std::recursive_mutex> lock(tr_mu);
    NCPoly out(Alphabet::X);
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms()) {
            if (max_weight >= 0 && static_cast<int>(u.size() + v.size()) > max_weight) continue;
            NCPoly t = gl_word(u, v);
            t *= cu * cv;
            out += t;
        }
    return out;
}

namespace {

struct ClosedFormState {
    const Word* a;
    std::vector<int> zeros;  // k_1 .. k_{d+1}
    std::vector<Word> slots;
    std::map<Word, long long> counts;
    std::map<Word, long long> neg_counts;
};

void closed_form_rec(ClosedFormState& st, std::size_t i) {
    if (i == st.a->size()) {
        const std::size_t d = st.zeros.size() - 1;
        Word out;
        std::size_t odd = 0;
        for (std::size_t j = 0; j <= d; ++j) {
            out += st.slots[2 * j];
            out.append(static_cast<std::size_t>(st.zeros[j]), static_cast<char>(kX0));
            if (j < d) {
                out += reversed(st.slots[2 * j + 1]);
                odd += st.slots[2 * j + 1].size();
                out.push_back(static_cast<char>(kX1));
            }
        }
        ++(odd % 2 ? st.neg_counts : st.counts)[out];
        return;
    }
    for (auto& slot : st.slots) {
        slot.push_back((*st.a)[i]);
        closed_form_rec(st, i + 1);
        slot.pop_back();
    }
}

}  // namespace

NCPoly gl_closed_form(const NCPoly& a, const Word& w) {
    require_x(a, "gl_closed_form");
    std::vector<int> zeros{0};
    for (char c : w) {
        if (static_cast<Letter>(c) == kX0) ++zeros.back();
        else zeros.push_back(0);
    }
    NCPoly out(Alphabet::X);
    for (const auto& [u, cu] : a.terms()) {
        ClosedFormState st;
        st.a = &u;
        st.zeros = zeros;
        st.slots.assign(2 * (zeros.size() - 1) + 1, Word());
        closed_form_rec(st, 0);
        for (const auto& [z, n] : st.counts) out.add(z, cu * static_cast<long>(n));
        for (const auto& [z, n] : st.neg_counts) out.add(z, -cu * static_cast<long>(n));
    }
    return out;
}

NCPoly gl_antipode(const NCPoly& a, int max_weight) {
    require_x(a, "gl_antipode");
    std::lock_guard<std::recursive_mutex> lock(tr_mu);
    NCPoly out(Alphabet::X);
    for (const auto& [u, cu] : a.terms()) {
        if (static_cast<int>(u.size()) > max_weight) continue;
        NCPoly t = antipode_word(u);
        t *= cu;
        out += t;
    }
    return out;
}

bool is_lie_element(const NCPoly& p) {
    require_x(p, "is_lie_element");
    if (sgn(p.constant_term()) != 0) return false;
    Tensor2 expected = tensor(p, NCPoly::one(Alphabet::X)) + tensor(NCPoly::one(Alphabet::X), p);
    return dual_coproduct(p, Diamond::zero()) == expected;
}

LieElement::LieElement(NCPoly p) : value_(std::move(p)) {
    if (!is_lie_element(value_)) throw std::invalid_argument("LieElement: polynomial is not primitive");
}

NCPoly lyndon_bracket(const Word& w) {
    if (!is_lyndon(w)) throw std::invalid_argument("lyndon_bracket: word is not Lyndon");
    if (w.size() == 1) return NCPoly::word(Alphabet::X, w);
    for (std::size_t i = 1; i < w.size(); ++i) {
        const Word v = w.substr(i);
        if (is_lyndon(v)) return commutator(lyndon_bracket(w.substr(0, i)), lyndon_bracket(v));
    }
    throw std::logic_error("lyndon_bracket: no Lyndon suffix");
}

TruncatedSeries exp_trunc(const NCPoly& f, int n) {
    require_x(f, "exp_trunc");
    if (sgn(f.constant_term()) != 0) throw std::invalid_argument("exp_trunc: constant term must vanish");
    NCPoly sum = NCPoly::one(Alphabet::X);
    NCPoly power = NCPoly::one(Alphabet::X);
    for (int k = 1; k <= n; ++k) {
        power = (power * f).truncated(n);
        if (power.is_zero()) break;
        NCPoly t = power;
        t *= Rational(Integer(1), factorial(static_cast<unsigned>(k)));
        sum += t;
    }
    return {sum, n};
}

NCPoly log_trunc(const TruncatedSeries& g) {
    require_x(g.value, "log_trunc");
    if (g.value.constant_term() != 1) throw std::invalid_argument("log_trunc: constant term must be 1");
    const int n = g.truncation_weight;
    const NCPoly x = g.value.truncated(n) - NCPoly::one(Alphabet::X);
    NCPoly sum(Alphabet::X);
    NCPoly power = NCPoly::one(Alphabet::X);
    for (int k = 1; k <= n; ++k) {
        power = (power * x).truncated(n);
        if (power.is_zero()) break;
        NCPoly t = power;
        t *= Rational(k % 2 ? 1 : -1, k);
        sum += t;
    }
    return sum;
}

bool is_grouplike(const TruncatedSeries& g) {
    if (g.value.constant_term() != 1) return false;
    const NCPoly v = g.value.truncated(g.truncation_weight);
    return dual_coproduct(v, Diamond::zero()) == tensor_truncated(v, v, g.truncation_weight);
}

NCPoly kappa_apply(const TruncatedSeries& g, const Word& w) {
    return kappa_apply(g, NCPoly::word(Alphabet::X, w));
}

NCPoly kappa_apply(const TruncatedSeries& g, const NCPoly& p) {
    require_x(p, "kappa_apply");
    if (!is_grouplike(g)) throw std::invalid_argument("kappa_apply: series is not grouplike");
    const int n = g.truncation_weight;
    const NCPoly gv = g.value.truncated(n);
    const NCPoly image_x1 = (antipode_conc(gv) * letter(kX1) * gv).truncated(n);
    const NCPoly image_x0 = letter(kX0);
    NCPoly out(Alphabet::X);
    for (const auto& [w, c] : p.terms()) {
        NCPoly acc = NCPoly::word(Alphabet::X, Word(), c);
        for (char l : w) {
            acc = (acc * (static_cast<Letter>(l) == kX1 ? image_x1 : image_x0)).truncated(n);
            if (acc.is_zero()) break;
        }
        out += acc;
    }
    return out;
}

}  // namespace fmzv
