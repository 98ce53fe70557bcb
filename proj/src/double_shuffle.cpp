#include "fmzv/double_shuffle.hpp"

#include "fmzv/ihara.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace fmzv {

namespace {

NCPoly x_word(const Word& w, const Rational& c = 1) { return NCPoly::word(Alphabet::X, w, c); }

Word x0_power(int n) { return Word(static_cast<std::size_t>(n), static_cast<char>(kX0)); }

bool in_h0(const Word& w) { return w.empty() || (w.front() == kX0 && w.back() == kX1); }
bool in_h1(const Word& w) { return w.empty() || w.back() == kX1; }

void require_alphabet(const NCPoly& p, Alphabet a, const char* what) {
    if (!p.is_zero() && p.alphabet() != a)
        throw std::invalid_argument(std::string(what) + ": polynomial must be over " + alphabet_name(a));
}

}  // namespace

Word index_to_word(const std::vector<int>& parts) {
    Word w;
    for (int k : parts) {
        if (k < 1) throw std::invalid_argument("index_to_word: parts must be positive");
        w += x0_power(k - 1);
        w.push_back(static_cast<char>(kX1));
    }
    return w;
}

NCPoly pi_Y(const NCPoly& p) {
    require_alphabet(p, Alphabet::X, "pi_Y");
    NCPoly out(Alphabet::Y);
    for (const auto& [w, c] : p.terms()) {
        if (!in_h1(w)) continue;
        Word y;
        int run = 0;
        for (char l : w) {
            ++run;
            if (static_cast<Letter>(l) == kX1) {
                y.push_back(static_cast<char>(run));
                run = 0;
            }
        }
        out.add(y, c);
    }
    return out;
}

NCPoly iota(const NCPoly& p) {
    require_alphabet(p, Alphabet::Y, "iota");
    NCPoly out(Alphabet::X);
    for (const auto& [y, c] : p.terms()) {
        std::vector<int> parts;
        for (char l : y) parts.push_back(static_cast<Letter>(l));
        out.add(index_to_word(parts), c);
    }
    return out;
}

NCPoly psi_star(const NCPoly& psi) {
    NCPoly pi = pi_Y(psi);
    NCPoly out = pi;
    const int top = psi.max_weight();
    for (int n = 2; n <= top; ++n) {
        const Rational c = pi.coeff(Word(1, static_cast<char>(n)));
        if (sgn(c) == 0) continue;
        out.add(Word(static_cast<std::size_t>(n), static_cast<char>(1)), c * Rational(n % 2 ? 1 : -1, n));
    }
    return out;
}

bool check_dm_conditions(const NCPoly& psi) {
    require_alphabet(psi, Alphabet::X, "check_dm_conditions");
    if (sgn(psi.coeff(make_word({0}))) != 0 || sgn(psi.coeff(make_word({1}))) != 0) return false;
    if (!is_lie_element(psi)) return false;
    const NCPoly s = psi_star(psi);
    const Tensor2 expected = tensor(s, NCPoly::one(Alphabet::Y)) + tensor(NCPoly::one(Alphabet::Y), s);
    if (dual_coproduct(s, Diamond::stuffle()) != expected) return false;
    return sgn(psi.coeff(make_word({0, 1}))) == 0;
}

bool check_depth1_even_vanishing(const NCPoly& psi, int w) {
    for (int k = 2; k <= w; k += 2)
        if (sgn(psi.coeff(index_to_word({k}))) != 0) return false;
    return true;
}

NCPoly dm_xi3() {
    const NCPoly x0 = x_word(make_word({0})), x1 = x_word(make_word({1}));
    const NCPoly a = commutator(x0, x1);
    return commutator(x0, a) + commutator(a, x1);
}

NCPoly dm_xi5() {
    const NCPoly x0 = x_word(make_word({0})), x1 = x_word(make_word({1}));
    const NCPoly a = commutator(x0, x1);
    const NCPoly b = commutator(x0, a);
    const NCPoly c = commutator(x0, b);
    NCPoly out = commutator(x0, c);
    out += Rational(2) * commutator(c, x1);
    out += Rational(1, 2) * commutator(b, a);
    out += Rational(2) * commutator(x1, commutator(x1, b));
    out -= Rational(3, 2) * commutator(a, commutator(a, x1));
    out += commutator(commutator(commutator(a, x1), x1), x1);
    return out;
}

namespace {

// Functionals on weight-w X-polynomials whose common kernel is stuffle primitivity of psi_star.
std::vector<NCPoly> stuffle_primitive_functionals(int w) {
    std::vector<NCPoly> out;
    for (int a = 1; 2 * a <= w; ++a)
        for (const auto& u : words_of_weight(Alphabet::Y, a))
            for (const auto& v : words_of_weight(Alphabet::Y, w - a)) {
                if (2 * a == w && v < u) continue;
                const NCPoly prod = stuffle(NCPoly::word(Alphabet::Y, u), NCPoly::word(Alphabet::Y, v));
                NCPoly f(Alphabet::X);
                for (const auto& [z, m] : prod.terms()) {
                    f += iota(NCPoly::word(Alphabet::Y, z, m));
                    const int n = static_cast<int>(z.size());
                    if (n >= 2 && std::all_of(z.begin(), z.end(), [](char l) { return l == 1; }))
                        f.add(index_to_word({n}), m * Rational(n % 2 ? 1 : -1, n));
                }
                if (!f.is_zero()) out.push_back(std::move(f));
            }
    return out;
}

std::vector<NCPoly> low_weight_functionals(int w) {
    std::vector<NCPoly> out;
    if (w == 1) {
        out.push_back(x_word(make_word({0})));
        out.push_back(x_word(make_word({1})));
    }
    if (w == 2) out.push_back(x_word(make_word({0, 1})));
    return out;
}

std::vector<NCPoly> canonical_span(const std::vector<NCPoly>& polys, int w) {
    std::vector<Word> cols = words_of_weight(Alphabet::X, w);
    std::map<Word, std::size_t> idx;
    for (std::size_t i = 0; i < cols.size(); ++i) idx[cols[i]] = i;
    RowEchelon ech(cols.size());
    for (const auto& p : polys) {
        QVector v(cols.size());
        for (const auto& [z, c] : p.terms()) v[idx.at(z)] = c;
        ech.insert(std::move(v));
    }
    std::vector<NCPoly> out;
    for (const auto& row : ech.sorted_rows()) {
        NCPoly p(Alphabet::X);
        for (std::size_t i = 0; i < row.size(); ++i) p.add(cols[i], row[i]);
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

std::vector<NCPoly> dm_basis(int w) {
    if (w < 1) throw std::invalid_argument("dm_basis: weight must be positive");
    std::vector<NCPoly> lie;
    for (const auto& l : lyndon_words(Alphabet::X, w)) lie.push_back(lyndon_bracket(l));
    auto functionals = stuffle_primitive_functionals(w);
    for (auto& f : low_weight_functionals(w)) functionals.push_back(std::move(f));
    QMatrix eq(functionals.size(), lie.size());
    for (std::size_t i = 0; i < functionals.size(); ++i)
        for (std::size_t j = 0; j < lie.size(); ++j) eq(i, j) = pairing(functionals[i], lie[j]);
    std::vector<NCPoly> sols;
    for (const auto& k : rank_and_kernel(eq).kernel) {
        NCPoly p(Alphabet::X);
        for (std::size_t j = 0; j < lie.size(); ++j) {
            NCPoly t = lie[j];
            t *= k[j];
            p += t;
        }
        sols.push_back(std::move(p));
    }
    return canonical_span(sols, w);
}

std::vector<NCPoly> dm_basis_word_system(int w) {
    if (w < 1) throw std::invalid_argument("dm_basis_word_system: weight must be positive");
    const auto& cols = words_of_weight(Alphabet::X, w);
    std::map<Word, std::size_t> idx;
    for (std::size_t i = 0; i < cols.size(); ++i) idx[cols[i]] = i;
    std::vector<NCPoly> functionals = stuffle_primitive_functionals(w);
    for (auto& f : low_weight_functionals(w)) functionals.push_back(std::move(f));
    for (int a = 1; 2 * a <= w; ++a)
        for (const auto& u : words_of_weight(Alphabet::X, a))
            for (const auto& v : words_of_weight(Alphabet::X, w - a)) {
                if (2 * a == w && v < u) continue;
                functionals.push_back(shuffle(Alphabet::X, u, v));
            }
    QMatrix eq(functionals.size(), cols.size());
    for (std::size_t i = 0; i < functionals.size(); ++i)
        for (const auto& [z, c] : functionals[i].terms()) eq(i, idx.at(z)) = c;
    std::vector<NCPoly> sols;
    for (const auto& k : rank_and_kernel(eq).kernel) {
        NCPoly p(Alphabet::X);
        for (std::size_t j = 0; j < cols.size(); ++j) p.add(cols[j], k[j]);
        sols.push_back(std::move(p));
    }
    return canonical_span(sols, w);
}

// Regularization

namespace {

std::mutex reg_mu;
std::map<Word, TPoly> stuffle_reg_cache;
std::map<Word, TUPoly> shuffle_reg_cache;

void add_scaled(TPoly& acc, const TPoly& p, const Rational& c, int shift) {
    for (const auto& [k, v] : p) {
        NCPoly t = v;
        t *= c;
        auto it = acc.try_emplace(k + shift, Alphabet::Y).first;
        it->second += t;
        if (it->second.is_zero()) acc.erase(it);
    }
}

void add_scaled(TUPoly& acc, const TUPoly& p, const Rational& c, int shift_t, int shift_u) {
    for (const auto& [k, v] : p) {
        NCPoly t = v;
        t *= c;
        auto it = acc.try_emplace({k.first + shift_t, k.second + shift_u}, Alphabet::X).first;
        it->second += t;
        if (it->second.is_zero()) acc.erase(it);
    }
}

const TPoly& stuffle_reg(const Word& w) {
    auto it = stuffle_reg_cache.find(w);
    if (it != stuffle_reg_cache.end()) return it->second;
    TPoly out;
    std::size_t a = 0;
    while (a < w.size() && w[a] == 1) ++a;
    if (a == 0) {
        out.emplace(0, NCPoly::word(Alphabet::Y, w));
    } else {
        const Word shorter = w.substr(1);
        NCPoly rest = stuffle(NCPoly::word(Alphabet::Y, make_word({1})), NCPoly::word(Alphabet::Y, shorter));
        rest.add(w, -static_cast<long>(a));
        const Rational inv(1, static_cast<long>(a));
        add_scaled(out, stuffle_reg(shorter), inv, 1);
        for (const auto& [z, c] : rest.terms()) add_scaled(out, stuffle_reg(z), -c * inv, 0);
    }
    return stuffle_reg_cache.emplace(w, std::move(out)).first->second;
}

const TUPoly& shuffle_reg(const Word& w) {
    auto it = shuffle_reg_cache.find(w);
    if (it != shuffle_reg_cache.end()) return it->second;
    TUPoly out;
    if (in_h0(w)) {
        out.emplace(std::make_pair(0, 0), x_word(w));
    } else if (w.front() == kX1) {
        std::size_t a = 0;
        while (a < w.size() && w[a] == kX1) ++a;
        const Word shorter = w.substr(1);
        NCPoly rest = shuffle(Alphabet::X, make_word({1}), shorter);
        rest.add(w, -static_cast<long>(a));
        const Rational inv(1, static_cast<long>(a));
        add_scaled(out, shuffle_reg(shorter), inv, 1, 0);
        for (const auto& [z, c] : rest.terms()) add_scaled(out, shuffle_reg(z), -c * inv, 0, 0);
    } else {
        std::size_t b = 0;
        while (b < w.size() && w[w.size() - 1 - b] == kX0) ++b;
        const Word shorter = w.substr(0, w.size() - 1);
        NCPoly rest = shuffle(Alphabet::X, make_word({0}), shorter);
        rest.add(w, -static_cast<long>(b));
        const Rational inv(1, static_cast<long>(b));
        add_scaled(out, shuffle_reg(shorter), inv, 0, 1);
        for (const auto& [z, c] : rest.terms()) add_scaled(out, shuffle_reg(z), -c * inv, 0, 0);
    }
    return shuffle_reg_cache.emplace(w, std::move(out)).first->second;
}

}  // namespace

TPoly reg_stuffle_inverse(const Word& y) {
    std::lock_guard<std::mutex> lock(reg_mu);
    return stuffle_reg(y);
}

NCPoly reg_stuffle_forward(const TPoly& p) {
    NCPoly out(Alphabet::Y);
    for (const auto& [k, c] : p) {
        NCPoly power = NCPoly::one(Alphabet::Y);
        for (int i = 0; i < k; ++i) power = stuffle(power, NCPoly::word(Alphabet::Y, make_word({1})));
        out += stuffle(c, power);
    }
    return out;
}

TUPoly reg_shuffle_inverse(const Word& x) {
    std::lock_guard<std::mutex> lock(reg_mu);
    return shuffle_reg(x);
}

NCPoly reg_shuffle_forward(const TUPoly& p) {
    NCPoly out(Alphabet::X);
    for (const auto& [k, c] : p) {
        NCPoly t = shuffle(c, shuffle(shuffle_power(x_word(make_word({1})), k.first), shuffle_power(x_word(make_word({0})), k.second)));
        out += t;
    }
    return out;
}

NCPoly reg0(const NCPoly& p) {
    require_alphabet(p, Alphabet::X, "reg0");
    std::lock_guard<std::mutex> lock(reg_mu);
    NCPoly out(Alphabet::X);
    for (const auto& [w, c] : p.terms()) {
        const TUPoly& r = shuffle_reg(w);
        auto it = r.find({0, 0});
        if (it == r.end()) continue;
        NCPoly t = it->second;
        t *= c;
        out += t;
    }
    return out;
}

// EDS quotient

namespace {

// u sh v - iota(iota^{-1} u * iota^{-1} v) for u in h0, v in h1, both nonempty, weight(u) + weight(v) = k.
std::vector<NCPoly> eds_generators(int k) {
    std::vector<NCPoly> out;
    for (int a = 2; a < k; ++a)
        for (const auto& u : words_of_weight(Alphabet::X, a)) {
            if (!in_h0(u)) continue;
            for (const auto& v : words_of_weight(Alphabet::X, k - a)) {
                if (!in_h1(v)) continue;
                NCPoly g = shuffle(Alphabet::X, u, v);
                g -= iota(stuffle(pi_Y(x_word(u)), pi_Y(x_word(v))));
                if (!g.is_zero()) out.push_back(std::move(g));
            }
        }
    return out;
}

void setup_columns(EDSWeightSpace& s, std::vector<Word> cols) {
    // Descending lex order keeps lex-small words such as x0^{n-1}x1 free.
    std::sort(cols.begin(), cols.end(), [](const Word& u, const Word& v) { return v < u; });
    s.columns = std::move(cols);
    for (std::size_t i = 0; i < s.columns.size(); ++i) s.index[s.columns[i]] = i;
    s.relations = RowEchelon(s.columns.size());
}

void insert_poly(EDSWeightSpace& s, const NCPoly& p) {
    if (p.is_zero()) return;
    QVector v(s.columns.size());
    for (const auto& [w, c] : p.terms()) v[s.index.at(w)] = c;
    s.relations.insert(std::move(v));
}

void finish(EDSWeightSpace& s) {
    s.quotient_dim = static_cast<int>(s.columns.size() - s.relations.rank());
    for (std::size_t i = 0; i < s.columns.size(); ++i)
        if (!s.relations.is_pivot(i)) s.section.push_back(s.columns[i]);
}

EDSWeightSpace build_reduced(int n) {
    EDSWeightSpace s;
    s.n = n;
    std::vector<Word> cols;
    for (const auto& w : words_of_weight(Alphabet::X, n))
        if (in_h0(w)) cols.push_back(w);
    setup_columns(s, std::move(cols));
    for (int k = 3; k <= n; ++k) {
        std::vector<Word> partners;
        for (const auto& z : words_of_weight(Alphabet::X, n - k))
            if (in_h0(z)) partners.push_back(z);
        if (partners.empty()) continue;
        for (const auto& g : eds_generators(k)) {
            const NCPoly r = reg0(g);
            if (r.is_zero()) continue;
            for (const auto& z : partners) insert_poly(s, shuffle(r, x_word(z)));
        }
    }
    finish(s);
    return s;
}

}  // namespace

EDSWeightSpace eds_weight_space_full(int n) {
    if (n < 0) throw std::invalid_argument("eds_weight_space_full: negative weight");
    EDSWeightSpace s;
    s.n = n;
    s.full_word_basis = true;
    setup_columns(s, words_of_weight(Alphabet::X, n));
    if (n >= 1)
        for (const auto& z : words_of_weight(Alphabet::X, n - 1)) {
            insert_poly(s, shuffle(Alphabet::X, make_word({0}), z));
            insert_poly(s, shuffle(Alphabet::X, make_word({1}), z));
        }
    for (int k = 3; k <= n; ++k)
        for (const auto& g : eds_generators(k))
            for (const auto& z : words_of_weight(Alphabet::X, n - k)) insert_poly(s, shuffle(g, x_word(z)));
    finish(s);
    return s;
}

NCPoly EDSWeightSpace::reduce(const NCPoly& p) const {
    const NCPoly q = full_word_basis ? p : reg0(p);
    QVector v(columns.size());
    for (const auto& [w, c] : q.terms()) {
        if (weight(Alphabet::X, w) != n) throw std::invalid_argument("EDSWeightSpace::reduce: weight mismatch");
        v[index.at(w)] += c;
    }
    v = relations.reduce(std::move(v));
    NCPoly out(Alphabet::X);
    for (std::size_t i = 0; i < v.size(); ++i) out.add(columns[i], v[i]);
    return out;
}

const EDSWeightSpace& eds_weight_space(int n) {
    static std::mutex mu;
    static std::map<int, EDSWeightSpace> cache;
    if (n < 0) throw std::invalid_argument("eds_weight_space: negative weight");
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    return cache.emplace(n, build_reduced(n)).first->second;
}

NCPoly zf_reduce(const NCPoly& p, int n) {
    require_alphabet(p, Alphabet::X, "zf_reduce");
    for (const auto& [w, c] : p.terms())
        if (weight(Alphabet::X, w) != n) throw std::invalid_argument("zf_reduce: input is not homogeneous of weight " + std::to_string(n));
    return eds_weight_space(n).reduce(p);
}

int zf_dim(int n) { return eds_weight_space(n).quotient_dim; }

// Identities

namespace {

bool vanishes(const NCPoly& p, int n) { return zf_reduce(p, n).is_zero(); }

NCPoly zeta2_power(int n) { return shuffle_power(x_word(make_word({0, 1})), n); }

NCPoly twos(int n) {
    Word w;
    for (int i = 0; i < n; ++i) w += make_word({0, 1});
    return x_word(w);
}

// zf(2r+1) zf({2}^m) as x0^{2r} x1 sh (x0x1)^m.
NCPoly odd_times_twos(int r, int m) { return shuffle(x_word(index_to_word({2 * r + 1})), twos(m)); }

NCPoly two_three_two(int a, int b) {
    Word23 u(static_cast<std::size_t>(a), 2);
    u.push_back(3);
    u.insert(u.end(), static_cast<std::size_t>(b), 2);
    return x_word(bzd(u));
}

}  // namespace

bool verify_euler() { return vanishes(x_word(make_word({0, 1, 1})) - x_word(make_word({0, 0, 1})), 3); }

bool verify_even_zeta(int n) {
    NCPoly rhs = zeta2_power(n);
    rhs *= b_coeff(static_cast<unsigned>(n));
    return vanishes(x_word(index_to_word({2 * n})) - rhs, 2 * n);
}

bool verify_zeta_222(int n) {
    Integer six_n;
    mpz_ui_pow_ui(six_n.get_mpz_t(), 6, static_cast<unsigned long>(n));
    Rational c(six_n, factorial(static_cast<unsigned>(2 * n + 1)));
    c.canonicalize();
    NCPoly rhs = zeta2_power(n);
    rhs *= c;
    return vanishes(twos(n) - rhs, 2 * n);
}

bool verify_level_one_identity(int n) {
    const int w = 2 * n + 1;
    NCPoly lhs = twos(n) * x_word(make_word({0}));
    NCPoly mid(Alphabet::X);
    for (int i = 0; i < n; ++i) mid -= 2 * two_three_two(i, n - 1 - i);
    NCPoly rhs(Alphabet::X);
    for (int i = 1; i <= n; ++i) rhs += Rational(i % 2 ? -2 : 2) * odd_times_twos(i, n - i);
    return vanishes(lhs - mid, w) && vanishes(mid - rhs, w);
}

bool verify_formal_zagier(int a, int b) {
    const int w = 2 * a + 2 * b + 3;
    NCPoly diff = two_three_two(a, b);
    for (int r = 1; r <= a + b + 1; ++r) diff -= c_coeff(a, b, r) * odd_times_twos(r, a + b + 1 - r);
    return vanishes(diff, w);
}

}  // namespace fmzv
