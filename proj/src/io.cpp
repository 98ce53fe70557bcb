#include "fmzv/io.hpp"

#include <json.hpp>

#include <cctype>

namespace fmzv {

namespace {

std::string error_text(std::size_t pos, const std::string& expected, const std::string& input) {
    return "parse error at position " + std::to_string(pos) + ": expected " + expected + " in '" + input + "'";
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string trim(const std::string& s, std::size_t* offset = nullptr) {
    std::size_t b = 0, e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    if (offset) *offset = b;
    return s.substr(b, e - b);
}

std::string coeff_prefix(const Rational& c) {
    return c == 1 ? std::string() : to_string(c) + "*";
}

}  // namespace

ParseError::ParseError(std::size_t position, const std::string& expected, const std::string& input)
    : std::invalid_argument(error_text(position, expected, input)), position_(position), expected_(expected) {}

std::string format_letter(Alphabet a, Letter c) {
    switch (a) {
        case Alphabet::X: return c == kX0 ? "x0" : "x1";
        case Alphabet::Y: return "y" + std::to_string(c);
        case Alphabet::S: return "s" + std::to_string(c);
    }
    return "?";
}

std::string format_word(Alphabet a, const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i && a != Alphabet::X) out += ' ';
        out += format_letter(a, static_cast<Letter>(w[i]));
    }
    return out;
}

Word parse_word(Alphabet a, const std::string& text) {
    std::size_t off = 0;
    const std::string t = trim(text, &off);
    if (t.empty() || t == "1" || t == "()") return Word();
    Word w;
    std::size_t i = 0;
    if (a == Alphabet::X && t.find('x') == std::string::npos) {
        for (; i < t.size(); ++i) {
            if (t[i] == '0' || t[i] == '1') w.push_back(static_cast<char>(t[i] - '0'));
            else throw ParseError(off + i, "digit 0 or 1", text);
        }
        return w;
    }
    const char prefix = a == Alphabet::X ? 'x' : a == Alphabet::Y ? 'y' : 's';
    while (i < t.size()) {
        if (is_space(t[i])) {
            ++i;
            continue;
        }
        if (t[i] != prefix) throw ParseError(off + i, std::string("letter '") + prefix + "'", text);
        ++i;
        const std::size_t start = i;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
            ++i;
            if (a == Alphabet::X) break;
        }
        if (i == start || i - start > 3) throw ParseError(off + start, "letter index", text);
        const int code = std::stoi(t.substr(start, i - start));
        if (!valid_letter(a, code)) throw ParseError(off + start, "valid letter index for alphabet " + alphabet_name(a), text);
        w.push_back(static_cast<char>(code));
    }
    return w;
}

std::string format_poly(const NCPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : p.canonical_terms()) {
        Rational mag = abs(c);
        if (first) out += sgn(c) < 0 ? "-" : "";
        else out += sgn(c) < 0 ? " - " : " + ";
        first = false;
        if (w.empty()) out += to_string(mag);
        else out += coeff_prefix(mag) + format_word(p.alphabet(), w);
    }
    return out;
}

NCPoly parse_poly(Alphabet a, const std::string& text) {
    NCPoly out(a);
    // Normalize U+2212 to '-' while tracking original byte positions.
    std::string s;
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
            s.push_back('-');
            pos.push_back(i);
            i += 2;
            continue;
        }
        s.push_back(text[i]);
        pos.push_back(i);
    }
    pos.push_back(text.size());

    std::size_t i = 0;
    bool any = false;
    while (true) {
        while (i < s.size() && is_space(s[i])) ++i;
        int sign = 1;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (any) {
            if (i >= s.size()) break;
            throw ParseError(pos[i], "'+' or '-'", text);
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::size_t lead = 0;
        const std::string term = trim(s.substr(i, j - i), &lead);
        const std::size_t term_pos = pos[i + lead];
        if (term.empty()) throw ParseError(pos[std::min(i, s.size())], "term", text);
        Rational c = 1;
        std::string word_text = term;
        const auto star = term.find('*');
        if (star != std::string::npos) {
            try {
                c = parse_rational(trim(term.substr(0, star)));
            } catch (const std::invalid_argument&) {
                throw ParseError(term_pos, "rational coefficient", text);
            }
            word_text = term.substr(star + 1);
            try {
                out.add(parse_word(a, word_text), sign * c);
            } catch (const ParseError& e) {
                throw ParseError(term_pos + star + 1 + e.position(), e.expected(), text);
            }
        } else {
            try {
                out.add(parse_word(a, word_text), sign * c);
            } catch (const ParseError& e) {
                Rational r;
                try {
                    r = parse_rational(term);
                } catch (const std::invalid_argument&) {
                    throw ParseError(term_pos + e.position(), e.expected(), text);
                }
                out.add(Word(), sign * r);
            }
        }
        any = true;
        i = j;
        if (i >= s.size()) break;
    }
    if (!any) throw ParseError(0, "term", text);
    return out;
}

std::string format_tensor(const Tensor2& t) {
    if (t.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : t.canonical_terms()) {
        Rational mag = abs(c);
        if (first) out += sgn(c) < 0 ? "-" : "";
        else out += sgn(c) < 0 ? " - " : " + ";
        first = false;
        out += coeff_prefix(mag) + format_word(t.left_alphabet(), k.first) + " ⊗ " +
               format_word(t.right_alphabet(), k.second);
    }
    return out;
}

std::string poly_to_json(const NCPoly& p) {
    nlohmann::json j;
    j["alphabet"] = alphabet_name(p.alphabet());
    j["terms"] = nlohmann::json::array();
    for (const auto& [w, c] : p.canonical_terms())
        j["terms"].push_back({{"word", format_word(p.alphabet(), w)}, {"coeff", to_string(c)}});
    return j.dump();
}

NCPoly poly_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.byte == 0 ? 0 : e.byte - 1, "JSON value", text);
    }
    try {
        const Alphabet a = parse_alphabet(j.at("alphabet").get<std::string>());
        NCPoly p(a);
        for (const auto& t : j.at("terms"))
            p.add(parse_word(a, t.at("word").get<std::string>()), parse_rational(t.at("coeff").get<std::string>()));
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("poly_from_json: ") + e.what());
    }
}

std::string tensor_to_json(const Tensor2& t) {
    nlohmann::json j;
    j["left_alphabet"] = alphabet_name(t.left_alphabet());
    j["right_alphabet"] = alphabet_name(t.right_alphabet());
    j["terms"] = nlohmann::json::array();
    for (const auto& [k, c] : t.canonical_terms())
        j["terms"].push_back({{"left", format_word(t.left_alphabet(), k.first)},
                              {"right", format_word(t.right_alphabet(), k.second)},
                              {"coeff", to_string(c)}});
    return j.dump();
}

}  // namespace fmzv
