#include "fmzv/words.hpp"

#include "fmzv/qmatrix.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace fmzv {

std::string alphabet_name(Alphabet a) {
    switch (a) {
        case Alphabet::X: return "X";
        case Alphabet::Y: return "Y";
        case Alphabet::S: return "S";
    }
    return "?";
}

Alphabet parse_alphabet(const std::string& name) {
    if (name == "X" || name == "x") return Alphabet::X;
    if (name == "Y" || name == "y") return Alphabet::Y;
    if (name == "S" || name == "s") return Alphabet::S;
    throw std::invalid_argument("unknown alphabet '" + name + "'");
}

bool valid_letter(Alphabet a, int code) {
    switch (a) {
        case Alphabet::X: return code == 0 || code == 1;
        case Alphabet::Y: return code >= 1 && code <= 255;
        case Alphabet::S: return code == 2 || (code >= 3 && code <= 255 && code % 2 == 1);
    }
    return false;
}

int letter_weight(Alphabet a, Letter c) { return a == Alphabet::X ? 1 : static_cast<int>(c); }

int weight(Alphabet a, const Word& w) {
    if (a == Alphabet::X) return static_cast<int>(w.size());
    int s = 0;
    for (char c : w) s += static_cast<Letter>(c);
    return s;
}

int depth(const Word& w) { return static_cast<int>(std::count(w.begin(), w.end(), static_cast<char>(kX1))); }

std::vector<Letter> letters_of_weight(Alphabet a, int k) {
    std::vector<Letter> out;
    if (a == Alphabet::X) {
        if (k == 1) out = {kX0, kX1};
    } else if (valid_letter(a, k)) {
        out.push_back(static_cast<Letter>(k));
    }
    return out;
}

Word make_word(std::initializer_list<int> codes) {
    Word w;
    for (int c : codes) w.push_back(static_cast<char>(c));
    return w;
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

bool canonical_less(Alphabet a, const Word& u, const Word& v) {
    const int wu = weight(a, u), wv = weight(a, v);
    if (wu != wv) return wu < wv;
    if (u.size() != v.size()) return u.size() < v.size();
    return u < v;
}

// NCPoly

NCPoly NCPoly::word(Alphabet a, const Word& w, const Rational& c) {
    NCPoly p(a);
    p.add(w, c);
    return p;
}

void NCPoly::add(const Word& w, const Rational& c) {
    if (sgn(c) == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

Rational NCPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

NCPoly NCPoly::component(int w) const {
    NCPoly out(alphabet_);
    for (const auto& [word, c] : terms_)
        if (weight(alphabet_, word) == w) out.terms_.emplace(word, c);
    return out;
}

NCPoly NCPoly::truncated(int max_weight) const {
    NCPoly out(alphabet_);
    for (const auto& [word, c] : terms_)
        if (weight(alphabet_, word) <= max_weight) out.terms_.emplace(word, c);
    return out;
}

int NCPoly::max_weight() const {
    int m = -1;
    for (const auto& t : terms_) m = std::max(m, weight(alphabet_, t.first));
    return m;
}

int NCPoly::min_weight() const {
    int m = -1;
    for (const auto& t : terms_) {
        const int w = weight(alphabet_, t.first);
        if (m < 0 || w < m) m = w;
    }
    return m;
}

bool NCPoly::homogeneous() const { return max_weight() == min_weight(); }

std::vector<std::pair<Word, Rational>> NCPoly::canonical_terms() const {
    std::vector<std::pair<Word, Rational>> out(terms_.begin(), terms_.end());
    const Alphabet a = alphabet_;
    std::sort(out.begin(), out.end(), [a](const auto& l, const auto& r) { return canonical_less(a, l.first, r.first); });
    return out;
}

static void check_same(Alphabet a, Alphabet b) {
    if (a != b) throw std::invalid_argument("alphabet mismatch: " + alphabet_name(a) + " vs " + alphabet_name(b));
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) alphabet_ = o.alphabet_;
    check_same(alphabet_, o.alphabet_);
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) alphabet_ = o.alphabet_;
    check_same(alphabet_, o.alphabet_);
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

NCPoly& NCPoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
NCPoly operator-(NCPoly a) { return a *= Rational(-1); }
NCPoly operator*(const Rational& c, NCPoly a) { return a *= c; }

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    if (!a.is_zero() && !b.is_zero()) check_same(a.alphabet(), b.alphabet());
    NCPoly out(a.is_zero() ? b.alphabet() : a.alphabet());
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms()) out.add(u + v, cu * cv);
    return out;
}

NCPoly commutator(const NCPoly& a, const NCPoly& b) { return a * b - b * a; }

// Tensor2

void Tensor2::add(const Word& l, const Word& r, const Rational& c) {
    if (sgn(c) == 0) return;
    auto key = std::make_pair(l, r);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
        return;
    }
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

Rational Tensor2::coeff(const Word& l, const Word& r) const {
    auto it = terms_.find(std::make_pair(l, r));
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::pair<Tensor2::Key, Rational>> Tensor2::canonical_terms() const {
    std::vector<std::pair<Key, Rational>> out(terms_.begin(), terms_.end());
    const Alphabet la = left_, ra = right_;
    std::sort(out.begin(), out.end(), [la, ra](const auto& x, const auto& y) {
        const auto& [xl, xr] = x.first;
        const auto& [yl, yr] = y.first;
        if (xr != yr) return canonical_less(ra, xr, yr);
        return canonical_less(la, xl, yl);
    });
    return out;
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
    if (is_zero()) {
        left_ = o.left_;
        right_ = o.right_;
    }
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
    if (is_zero()) {
        left_ = o.left_;
        right_ = o.right_;
    }
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
    return *this;
}

Tensor2& Tensor2::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }

Tensor2 tensor(const NCPoly& a, const NCPoly& b) {
    Tensor2 out(a.alphabet(), b.alphabet());
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms()) out.add(u, v, cu * cv);
    return out;
}

Tensor2 tensor_truncated(const NCPoly& a, const NCPoly& b, int max_weight) {
    Tensor2 out(a.alphabet(), b.alphabet());
    for (const auto& [u, cu] : a.terms()) {
        const int wu = weight(a.alphabet(), u);
        for (const auto& [v, cv] : b.terms())
            if (wu + weight(b.alphabet(), v) <= max_weight) out.add(u, v, cu * cv);
    }
    return out;
}

Tensor2 tensor_shuffle(const Tensor2& s, const Tensor2& t) {
    Tensor2 out(s.left_alphabet(), s.right_alphabet());
    for (const auto& [k1, c1] : s.terms())
        for (const auto& [k2, c2] : t.terms()) {
            const NCPoly l = shuffle(s.left_alphabet(), k1.first, k2.first);
            const NCPoly r = shuffle(s.right_alphabet(), k1.second, k2.second);
            for (const auto& [lw, lc] : l.terms())
                for (const auto& [rw, rc] : r.terms()) out.add(lw, rw, c1 * c2 * lc * rc);
        }
    return out;
}

Rational pair_tensor(const Tensor2& t, const NCPoly& p, const NCPoly& q) {
    Rational s = 0;
    for (const auto& [k, c] : t.terms()) {
        const Rational a = p.coeff(k.first);
        if (sgn(a) == 0) continue;
        s += c * a * q.coeff(k.second);
    }
    return s;
}

// Diamond

Diamond Diamond::zero() {
    return Diamond([](Letter, Letter) -> std::optional<Letter> { return std::nullopt; }, true);
}

Diamond Diamond::stuffle() {
    return Diamond([](Letter a, Letter b) -> std::optional<Letter> {
        const int s = static_cast<int>(a) + static_cast<int>(b);
        if (s > 255) throw std::overflow_error("stuffle letter index exceeds 255");
        return static_cast<Letter>(s);
    });
}

std::vector<std::pair<Letter, Letter>> Diamond::split(Alphabet a, Letter c) const {
    std::vector<std::pair<Letter, Letter>> out;
    if (zero_) return out;
    const int wc = letter_weight(a, c);
    for (int k = 1; k < wc; ++k)
        for (Letter l : letters_of_weight(a, k))
            for (Letter r : letters_of_weight(a, wc - k)) {
                auto m = merge_(l, r);
                if (m && *m == c) out.emplace_back(l, r);
            }
    return out;
}

// Products

namespace {

using Counts = std::unordered_map<Word, long long>;

void shuffle_rec(const Word& u, const Word& v, std::size_t i, std::size_t j, Word& buf, Counts& out) {
    if (i == u.size() && j == v.size()) {
        ++out[buf];
        return;
    }
    if (i < u.size()) {
        buf.push_back(u[i]);
        shuffle_rec(u, v, i + 1, j, buf, out);
        buf.pop_back();
    }
    if (j < v.size()) {
        buf.push_back(v[j]);
        shuffle_rec(u, v, i, j + 1, buf, out);
        buf.pop_back();
    }
}

void quasi_rec(const Word& u, const Word& v, std::size_t i, std::size_t j, const Diamond& d, Word& buf, Counts& out) {
    if (i == u.size() && j == v.size()) {
        ++out[buf];
        return;
    }
    if (i < u.size()) {
        buf.push_back(u[i]);
        quasi_rec(u, v, i + 1, j, d, buf, out);
        buf.pop_back();
    }
    if (j < v.size()) {
        buf.push_back(v[j]);
        quasi_rec(u, v, i, j + 1, d, buf, out);
        buf.pop_back();
    }
    if (i < u.size() && j < v.size()) {
        if (auto m = d.merge(static_cast<Letter>(u[i]), static_cast<Letter>(v[j]))) {
            buf.push_back(static_cast<char>(*m));
            quasi_rec(u, v, i + 1, j + 1, d, buf, out);
            buf.pop_back();
        }
    }
}

Alphabet common_alphabet(const NCPoly& u, const NCPoly& v) {
    if (!u.is_zero() && !v.is_zero()) check_same(u.alphabet(), v.alphabet());
    return u.is_zero() ? v.alphabet() : u.alphabet();
}

}  // namespace

NCPoly shuffle(Alphabet a, const Word& u, const Word& v) {
    Counts counts;
    Word buf;
    buf.reserve(u.size() + v.size());
    shuffle_rec(u, v, 0, 0, buf, counts);
    NCPoly out(a);
    for (const auto& [w, n] : counts) out.add(w, Rational(static_cast<long>(n)));
    return out;
}

NCPoly shuffle(const NCPoly& u, const NCPoly& v) {
    NCPoly out(common_alphabet(u, v));
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms()) {
            Counts counts;
            Word buf;
            shuffle_rec(a, b, 0, 0, buf, counts);
            const Rational c = ca * cb;
            for (const auto& [w, n] : counts) out.add(w, c * static_cast<long>(n));
        }
    return out;
}

NCPoly quasi_shuffle(const NCPoly& u, const NCPoly& v, const Diamond& d) {
    NCPoly out(common_alphabet(u, v));
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms()) {
            Counts counts;
            Word buf;
            quasi_rec(a, b, 0, 0, d, buf, counts);
            const Rational c = ca * cb;
            for (const auto& [w, n] : counts) out.add(w, c * static_cast<long>(n));
        }
    return out;
}

NCPoly stuffle(const NCPoly& u, const NCPoly& v) { return quasi_shuffle(u, v, Diamond::stuffle()); }

NCPoly shuffle_power(const NCPoly& p, int n) {
    NCPoly out = NCPoly::one(p.alphabet());
    for (int i = 0; i < n; ++i) out = shuffle(out, p);
    return out;
}

// Coproducts

Tensor2 deconcat(Alphabet a, const Word& w) {
    Tensor2 out(a);
    for (std::size_t i = 0; i <= w.size(); ++i) out.add(w.substr(0, i), w.substr(i), 1);
    return out;
}

Tensor2 deconcat(const NCPoly& p) {
    Tensor2 out(p.alphabet());
    for (const auto& [w, c] : p.terms())
        for (std::size_t i = 0; i <= w.size(); ++i) out.add(w.substr(0, i), w.substr(i), c);
    return out;
}

namespace {

struct PairCounts {
    std::map<std::pair<Word, Word>, long long> counts;
};

void dual_rec(Alphabet a, const Word& w, std::size_t i, const Diamond& d, Word& l, Word& r, PairCounts& out) {
    if (i == w.size()) {
        ++out.counts[{l, r}];
        return;
    }
    const Letter c = static_cast<Letter>(w[i]);
    l.push_back(w[i]);
    dual_rec(a, w, i + 1, d, l, r, out);
    l.pop_back();
    r.push_back(w[i]);
    dual_rec(a, w, i + 1, d, l, r, out);
    r.pop_back();
    for (const auto& [x, y] : d.split(a, c)) {
        l.push_back(static_cast<char>(x));
        r.push_back(static_cast<char>(y));
        dual_rec(a, w, i + 1, d, l, r, out);
        l.pop_back();
        r.pop_back();
    }
}

}  // namespace

Tensor2 dual_coproduct(Alphabet a, const Word& w, const Diamond& d) {
    PairCounts pc;
    Word l, r;
    dual_rec(a, w, 0, d, l, r, pc);
    Tensor2 out(a);
    for (const auto& [k, n] : pc.counts) out.add(k.first, k.second, Rational(static_cast<long>(n)));
    return out;
}

Tensor2 dual_coproduct(const NCPoly& p, const Diamond& d) {
    Tensor2 out(p.alphabet());
    for (const auto& [w, c] : p.terms()) {
        Tensor2 t = dual_coproduct(p.alphabet(), w, d);
        t *= c;
        out += t;
    }
    return out;
}

NCPoly antipode_conc(const NCPoly& p) {
    NCPoly out(p.alphabet());
    for (const auto& [w, c] : p.terms()) out.add(reversed(w), w.size() % 2 ? Rational(-c) : c);
    return out;
}

// Hoffman exp / log

std::vector<std::vector<int>> compositions(int n) {
    std::vector<std::vector<int>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    for (int first = 1; first <= n; ++first)
        for (auto& rest : compositions(n - first)) {
            std::vector<int> c{first};
            c.insert(c.end(), rest.begin(), rest.end());
            out.push_back(std::move(c));
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Word> apply_composition(const std::vector<int>& parts, const Word& w, const Diamond& d) {
    Word out;
    std::size_t pos = 0;
    for (int k : parts) {
        Letter acc = static_cast<Letter>(w.at(pos));
        for (int j = 1; j < k; ++j) {
            auto m = d.merge(acc, static_cast<Letter>(w.at(pos + static_cast<std::size_t>(j))));
            if (!m) return std::nullopt;
            acc = *m;
        }
        out.push_back(static_cast<char>(acc));
        pos += static_cast<std::size_t>(k);
    }
    if (pos != w.size()) throw std::invalid_argument("composition does not match word length");
    return out;
}

static NCPoly hoffman_map(const NCPoly& p, const Diamond& d, bool log) {
    NCPoly out(p.alphabet());
    for (const auto& [w, c] : p.terms()) {
        const int n = static_cast<int>(w.size());
        for (const auto& parts : compositions(n)) {
            auto img = apply_composition(parts, w, d);
            if (!img) continue;
            Integer den = 1;
            for (int k : parts) den *= log ? Integer(k) : factorial(static_cast<unsigned>(k));
            Rational coef(Integer(1), den);
            coef.canonicalize();
            if (log && (n - static_cast<int>(parts.size())) % 2) coef = -coef;
            out.add(*img, c * coef);
        }
    }
    return out;
}

NCPoly hoffman_exp(const NCPoly& p, const Diamond& d) { return hoffman_map(p, d, false); }
NCPoly hoffman_log(const NCPoly& p, const Diamond& d) { return hoffman_map(p, d, true); }

// Lyndon words

bool is_lyndon(const Word& w) {
    if (w.empty()) throw std::invalid_argument("is_lyndon: empty word");
    for (std::size_t i = 1; i < w.size(); ++i)
        if (!(w < w.substr(i))) return false;
    return true;
}

std::vector<Word> lyndon_factorization(const Word& w) {
    std::vector<Word> out;
    std::size_t i = 0;
    const std::size_t n = w.size();
    while (i < n) {
        std::size_t j = i + 1, k = i;
        while (j < n && static_cast<Letter>(w[k]) <= static_cast<Letter>(w[j])) {
            k = static_cast<Letter>(w[k]) < static_cast<Letter>(w[j]) ? i : k + 1;
            ++j;
        }
        while (i <= k) {
            out.push_back(w.substr(i, j - k));
            i += j - k;
        }
    }
    return out;
}

std::vector<Word> lyndon_words(Alphabet a, int n) {
    std::vector<Word> out;
    for (const auto& w : words_of_weight(a, n))
        if (!w.empty() && is_lyndon(w)) out.push_back(w);
    return out;
}

static void words_rec(Alphabet a, int remaining, Word& buf, std::vector<Word>& out) {
    if (remaining == 0) {
        out.push_back(buf);
        return;
    }
    std::vector<Letter> letters;
    for (int k = 1; k <= remaining; ++k)
        for (Letter c : letters_of_weight(a, k)) letters.push_back(c);
    std::sort(letters.begin(), letters.end());
    for (Letter c : letters) {
        buf.push_back(static_cast<char>(c));
        words_rec(a, remaining - letter_weight(a, c), buf, out);
        buf.pop_back();
    }
}

const std::vector<Word>& words_of_weight(Alphabet a, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<Word>> cache;
    if (n < 0) throw std::invalid_argument("words_of_weight: negative weight");
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(a), n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Word> out;
    Word buf;
    words_rec(a, n, buf, out);
    return cache.emplace(key, std::move(out)).first->second;
}

// Indecomposables

namespace {

std::recursive_mutex indec_mu;
std::map<std::pair<int, Word>, NCPoly> indec_cache;

Integer multiplicity_factor(const std::vector<Word>& factors) {
    Integer f = 1;
    std::size_t i = 0;
    while (i < factors.size()) {
        std::size_t j = i;
        while (j < factors.size() && factors[j] == factors[i]) ++j;
        f *= factorial(static_cast<unsigned>(j - i));
        i = j;
    }
    return f;
}

const NCPoly& reduce_word(Alphabet a, const Word& w) {
    auto key = std::make_pair(static_cast<int>(a), w);
    auto it = indec_cache.find(key);
    if (it != indec_cache.end()) return it->second;
    NCPoly red(a);
    if (!w.empty()) {
        if (is_lyndon(w)) {
            red.add(w, 1);
        } else {
            const auto factors = lyndon_factorization(w);
            NCPoly prod = NCPoly::word(a, factors[0]);
            for (std::size_t i = 1; i < factors.size(); ++i) prod = shuffle(prod, NCPoly::word(a, factors[i]));
            const Rational lead = prod.coeff(w);
            if (lead != Rational(multiplicity_factor(factors)))
                throw std::logic_error("Lyndon reduction: unexpected leading coefficient");
            for (const auto& [z, c] : prod.terms()) {
                if (z == w) continue;
                if (!(z < w)) throw std::logic_error("Lyndon reduction: product term above leading word");
                NCPoly r = reduce_word(a, z);
                r *= -c / lead;
                red += r;
            }
        }
    }
    return indec_cache.emplace(key, std::move(red)).first->second;
}

}  // namespace

NCPoly pi_indec(const NCPoly& p, int n) {
    std::lock_guard<std::recursive_mutex> lock(indec_mu);
    NCPoly out(p.alphabet());
    if (n <= 0) return out;
    for (const auto& [w, c] : p.terms()) {
        if (weight(p.alphabet(), w) != n) continue;
        NCPoly r = reduce_word(p.alphabet(), w);
        r *= c;
        out += r;
    }
    return out;
}

namespace {

struct ProductSpace {
    std::vector<Word> columns;
    std::map<Word, std::size_t> index;
    RowEchelon echelon{0};
};

const ProductSpace& product_space(Alphabet a, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, ProductSpace> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(a), n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    ProductSpace ps;
    ps.columns = words_of_weight(a, n);
    std::sort(ps.columns.begin(), ps.columns.end(), [](const Word& u, const Word& v) {
        if (u.size() != v.size()) return u.size() < v.size();
        return v < u;
    });
    for (std::size_t i = 0; i < ps.columns.size(); ++i) ps.index[ps.columns[i]] = i;
    ps.echelon = RowEchelon(ps.columns.size());
    for (int k = 1; 2 * k <= n; ++k)
        for (const auto& u : words_of_weight(a, k))
            for (const auto& v : words_of_weight(a, n - k)) {
                if (2 * k == n && v < u) continue;
                QVector row(ps.columns.size());
                const NCPoly prod = shuffle(a, u, v);
                for (const auto& [w, c] : prod.terms()) row[ps.index.at(w)] = c;
                ps.echelon.insert(std::move(row));
            }
    return cache.emplace(key, std::move(ps)).first->second;
}

}  // namespace

NCPoly pi_indec_rowreduce(const NCPoly& p, int n) {
    NCPoly out(p.alphabet());
    if (n <= 0) return out;
    const ProductSpace& ps = product_space(p.alphabet(), n);
    QVector v(ps.columns.size());
    for (const auto& [w, c] : p.terms())
        if (weight(p.alphabet(), w) == n) v[ps.index.at(w)] += c;
    v = ps.echelon.reduce(std::move(v));
    for (std::size_t i = 0; i < v.size(); ++i) out.add(ps.columns[i], v[i]);
    return out;
}

Rational pairing(const NCPoly& p, const NCPoly& q) {
    Rational s = 0;
    for (const auto& [w, c] : p.terms()) s += c * q.coeff(w);
    return s;
}

}  // namespace fmzv
