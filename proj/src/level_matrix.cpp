#include "fmzv/level_matrix.hpp"

#include "fmzv/goncharov.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace fmzv {

int weight23(const Word23& u) {
    int s = 0;
    for (int e : u) s += e;
    return s;
}

int level23(const Word23& u) { return static_cast<int>(std::count(u.begin(), u.end(), 3)); }

std::string format_word23(const Word23& u) {
    std::string out = "(";
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(u[i]);
    }
    return out + ")";
}

Word23 parse_word23(const std::string& text) {
    Word23 out;
    for (char c : text) {
        if (c == '2' || c == '3') out.push_back(c - '0');
        else if (c == '(' || c == ')' || c == ',' || std::isspace(static_cast<unsigned char>(c))) continue;
        else throw std::invalid_argument("malformed word over {2,3}: '" + text + "'");
    }
    return out;
}

Word bzd(const Word23& u) {
    Word w;
    for (int e : u) {
        if (e == 2) w += make_word({0, 1});
        else if (e == 3) w += make_word({0, 0, 1});
        else throw std::invalid_argument("bzd: entries must be 2 or 3");
    }
    return w;
}

std::optional<Word23> unbzd(const Word& w) {
    Word23 out;
    std::size_t i = 0;
    while (i < w.size()) {
        if (i + 1 < w.size() && w[i] == 0 && w[i + 1] == 1) {
            out.push_back(2);
            i += 2;
        } else if (i + 2 < w.size() && w[i] == 0 && w[i + 1] == 0 && w[i + 2] == 1) {
            out.push_back(3);
            i += 3;
        } else {
            return std::nullopt;
        }
    }
    return out;
}

int level(const Word& w) {
    auto u = unbzd(w);
    if (!u) throw std::invalid_argument("level: word is not a concatenation of x0x1 and x0x0x1");
    return level23(*u);
}

bool word23_less(const Word23& u, const Word23& v) { return bzd(u) < bzd(v); }

static void enumerate_rec(int twos, int threes, Word23& buf, std::vector<Word23>& out) {
    if (twos == 0 && threes == 0) {
        out.push_back(buf);
        return;
    }
    if (threes > 0) {
        buf.push_back(3);
        enumerate_rec(twos, threes - 1, buf, out);
        buf.pop_back();
    }
    if (twos > 0) {
        buf.push_back(2);
        enumerate_rec(twos - 1, threes, buf, out);
        buf.pop_back();
    }
}

LevelBasis enumerate_basis(int n, int ell) {
    LevelBasis b{n, ell, {}};
    const int rest = n - 3 * ell;
    if (ell < 0 || rest < 0 || rest % 2) return b;
    Word23 buf;
    enumerate_rec(rest / 2, ell, buf, b.elements);
    return b;
}

Word23 psi(const Word23& v, int n) {
    const int gap = n - 1 - weight23(v);
    if (gap < 2 || gap % 2) throw std::invalid_argument("psi: weight of " + format_word23(v) + " incompatible with N=" + std::to_string(n));
    Word23 out(static_cast<std::size_t>(gap / 2 - 1), 2);
    out.push_back(3);
    out.insert(out.end(), v.begin(), v.end());
    return out;
}

std::vector<Word23> enumerate_codomain(int n, int ell) {
    std::vector<Word23> out;
    if (ell < 1) return out;
    for (int wv = n - 3; wv >= 0; wv -= 2) {
        auto part = enumerate_basis(wv, ell - 1).elements;
        out.insert(out.end(), part.begin(), part.end());
    }
    std::stable_sort(out.begin(), out.end(), [n](const Word23& u, const Word23& v) { return word23_less(psi(u, n), psi(v, n)); });
    return out;
}

Rational c_coeff(int a, int b, int r) {
    if (a < 0 || b < 0 || r < 1) throw std::invalid_argument("c_coeff: need a, b >= 0 and r >= 1");
    Integer four_r;
    mpz_ui_pow_ui(four_r.get_mpz_t(), 4, static_cast<unsigned long>(r));
    Rational factor = 1 - Rational(Integer(1), four_r);
    factor.canonicalize();
    Rational v = Rational(binomial(2 * r, 2 * b + 2)) - factor * Rational(binomial(2 * r, 2 * a + 1));
    v *= (r % 2 ? -2 : 2);
    v.canonicalize();
    return v;
}

Rational c_ab(int a, int b) { return c_coeff(a, b, a + b + 1); }

namespace {

bool match_level_one(const Word& w, int& a, int& b) {
    const Word three = make_word({0, 0, 1});
    const Word two = make_word({0, 1});
    for (std::size_t i = 0; i + 3 <= w.size(); i += 2) {
        bool ok = true;
        for (std::size_t j = 0; j < i; j += 2) ok = ok && w.compare(j, 2, two) == 0;
        if (!ok) break;
        if (w.compare(i, 3, three) != 0) continue;
        const std::size_t tail = w.size() - i - 3;
        if (tail % 2) continue;
        bool tail_ok = true;
        for (std::size_t j = i + 3; j < w.size(); j += 2) tail_ok = tail_ok && w.compare(j, 2, two) == 0;
        if (!tail_ok) continue;
        a = static_cast<int>(i / 2);
        b = static_cast<int>(tail / 2);
        return true;
    }
    return false;
}

bool match_palindrome(const Word& w, int& n) {
    if (w.size() % 2 == 0) return false;
    for (std::size_t j = 0; j + 1 < w.size(); j += 2)
        if (w[j] != 0 || w[j + 1] != 1) return false;
    if (w.back() != 0) return false;
    n = static_cast<int>(w.size() / 2);
    return true;
}

}  // namespace

Rational phi_of_factor(const NCPoly& p) {
    if (!p.is_zero() && p.alphabet() != Alphabet::X) throw std::invalid_argument("phi_of_factor: polynomial must be over X");
    Rational s = 0;
    for (const auto& [w, c] : p.terms()) {
        int a = 0, b = 0, n = 0;
        if (match_level_one(w, a, b)) s += c * c_ab(a, b);
        else if (match_palindrome(w, n)) s += c * (n % 2 ? -2 : 2);
        else throw std::invalid_argument("phi_of_factor: word outside the level-one shapes");
    }
    return s;
}

std::map<Word23, Rational> partial_phi(const Word23& w, int n, int ell) {
    if (weight23(w) != n || level23(w) != ell) throw std::invalid_argument("partial_phi: weight or level mismatch for " + format_word23(w));
    std::map<Word23, Rational> out;
    const Word bw = bzd(w);
    for (int r = 1; 2 * r + 1 <= n; ++r) {
        std::map<Word, NCPoly> by_right;
        for (const auto& [k, c] : partial_2r1(bw, r).terms())
            by_right.try_emplace(k.second, Alphabet::X).first->second.add(k.first, c);
        for (const auto& [right, left] : by_right) {
            auto v = unbzd(right);
            if (!v) throw std::logic_error("partial_phi: right factor outside B");
            if (level23(*v) != ell - 1) continue;
            const Rational c = phi_of_factor(left);
            if (sgn(c) == 0) continue;
            Rational& slot = out[*v];
            slot += c;
            if (sgn(slot) == 0) out.erase(*v);
        }
    }
    return out;
}

QMatrix build_matrix(int n, int ell) {
    const auto basis = enumerate_basis(n, ell).elements;
    const auto codomain = enumerate_codomain(n, ell);
    if (basis.empty() || codomain.empty()) return QMatrix();
    QMatrix m(basis.size(), codomain.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto row = partial_phi(basis[i], n, ell);
        for (std::size_t j = 0; j < codomain.size(); ++j) {
            auto it = row.find(codomain[j]);
            if (it != row.end()) m(i, j) = it->second;
        }
        for (const auto& [v, c] : row)
            if (std::find(codomain.begin(), codomain.end(), v) == codomain.end())
                throw std::logic_error("build_matrix: image outside the codomain basis");
    }
    return m;
}

bool verify_c_lemma(int max) {
    auto power_of_two_den = [](const Rational& q) {
        Integer d = q.get_den();
        while (d % 2 == 0) d /= 2;
        return d == 1;
    };
    for (int a = 0; a <= max; ++a)
        for (int b = 0; b <= max; ++b) {
            const Rational c = c_ab(a, b);
            if (!power_of_two_den(c)) return false;
            const Rational diff = c - c_ab(b, a);
            if (diff.get_den() != 1 || diff.get_num() % 2 != 0) return false;
            const Valuation v = nu_p(2, c);
            const Valuation l = nu_p(2, c_ab(a + b, 0));
            const Valuation r = nu_p(2, c_ab(0, a + b));
            if (l != r || !(l <= v) || !(v <= Valuation::of(0))) return false;
        }
    return true;
}

bool verify_binomial_identity(int max) {
    for (int a = 0; a <= max; ++a)
        for (int b = 0; b <= max; ++b)
            for (int r = 1; r <= a + b + 1; ++r) {
                Rational rhs = 0;
                for (int alpha = 0; alpha <= a; ++alpha) {
                    const int beta = r - 1 - alpha;
                    if (beta < 0 || beta > b) continue;
                    rhs += c_coeff(alpha, beta, r);
                    if (alpha < a) rhs -= c_coeff(beta, alpha, r);
                }
                rhs += (r % 2 ? -2 : 2) * ((a >= r ? 1 : 0) - (b >= r ? 1 : 0));
                if (rhs != c_coeff(a, b, r)) return false;
            }
    return true;
}

}  // namespace fmzv
