#include "fmzv/fmzv.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::json;

constexpr int kSchemaVersion = 1;
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct Failure {
    std::string message;
};

void check(fmzv_status s) {
    if (s != FMZV_OK) throw Failure{fmzv_last_error()};
}

struct PolyDeleter {
    void operator()(fmzv_poly* p) const { fmzv_poly_free(p); }
};
struct TensorDeleter {
    void operator()(fmzv_tensor* t) const { fmzv_tensor_free(t); }
};
struct MatrixDeleter {
    void operator()(fmzv_matrix* m) const { fmzv_matrix_free(m); }
};
struct ListDeleter {
    void operator()(fmzv_polylist* l) const { fmzv_polylist_free(l); }
};
using Poly = std::unique_ptr<fmzv_poly, PolyDeleter>;
using Tensor = std::unique_ptr<fmzv_tensor, TensorDeleter>;
using Matrix = std::unique_ptr<fmzv_matrix, MatrixDeleter>;
using PolyList = std::unique_ptr<fmzv_polylist, ListDeleter>;

std::string take(char* s) {
    std::string out(s ? s : "");
    fmzv_string_free(s);
    return out;
}

fmzv_alphabet alphabet_of(const std::string& name) {
    if (name == "X") return FMZV_ALPHABET_X;
    if (name == "Y") return FMZV_ALPHABET_Y;
    if (name == "S") return FMZV_ALPHABET_S;
    throw Failure{"unknown alphabet '" + name + "'"};
}

Poly parse(fmzv_alphabet a, const std::string& text) {
    fmzv_poly* p = nullptr;
    check(fmzv_poly_parse(a, text.c_str(), &p));
    return Poly(p);
}

std::string text_of(const fmzv_poly* p) {
    char* s = nullptr;
    check(fmzv_poly_format(p, &s));
    return take(s);
}

json json_of(const fmzv_poly* p) {
    char* s = nullptr;
    check(fmzv_poly_to_json(p, &s));
    return json::parse(take(s));
}

std::string text_of(const fmzv_tensor* t) {
    char* s = nullptr;
    check(fmzv_tensor_format(t, &s));
    return take(s);
}

json json_of(const fmzv_tensor* t) {
    char* s = nullptr;
    check(fmzv_tensor_to_json(t, &s));
    return json::parse(take(s));
}

std::vector<Poly> unpack(const fmzv_polylist* l) {
    std::size_t n = 0;
    check(fmzv_polylist_size(l, &n));
    std::vector<Poly> out;
    for (std::size_t i = 0; i < n; ++i) {
        fmzv_poly* p = nullptr;
        check(fmzv_polylist_get(l, i, &p));
        out.emplace_back(p);
    }
    return out;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) out.push_back(line);
    return out;
}

struct Budget {
    int eds = 9;
    int matrix = 16;
};

Budget read_budget() {
    Budget b;
    if (const char* env = std::getenv("FMZV_MAX_WEIGHT")) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(env, &used);
            if (used != std::string(env).size() || v < 0) throw std::invalid_argument("bad");
            b.eds = b.matrix = v;
        } catch (const std::exception&) {
            throw Failure{"FMZV_MAX_WEIGHT must be a non-negative integer"};
        }
    }
    return b;
}

void within(int value, int cap, const std::string& what) {
    if (value > cap)
        throw Failure{what + " " + std::to_string(value) + " exceeds the budget " + std::to_string(cap) + " (set FMZV_MAX_WEIGHT to raise it)"};
}

json envelope(const std::string& command) { return json{{"schema_version", kSchemaVersion}, {"command", command}}; }

void progress(const std::string& msg) { std::cerr << msg << '\n'; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with formal multiple zeta values"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.set_version_flag("--version", std::string(fmzv_version()));

    std::string op, alphabet, w1, w2, mode, poly_text, suite;
    int r = 1, n = 0, level = 1, a = 0, b = 0, max_weight = 0;
    std::optional<int> r_opt;
    bool want_det = false, want_two_adic = false, want_kernel = false;

    auto* product = app.add_subcommand("product", "Product of two polynomials");
    product->add_option("--op", op, "shuffle, stuffle or concat")->required()->check(CLI::IsMember({"shuffle", "stuffle", "concat"}));
    product->add_option("--alphabet", alphabet, "X, Y or S");
    product->add_option("lhs", w1)->required();
    product->add_option("rhs", w2)->required();

    auto* coproduct = app.add_subcommand("coproduct", "Coproduct of a polynomial");
    coproduct->add_option("--op", op, "gon, dec or dual-stuffle")->required()->check(CLI::IsMember({"gon", "dec", "dual-stuffle"}));
    coproduct->add_option("--alphabet", alphabet, "X, Y or S");
    coproduct->add_option("word", w1)->required();

    auto* derivation = app.add_subcommand("derivation", "D_{2r+1} or the partial map");
    derivation->add_option("--r", r)->required()->check(CLI::PositiveNumber);
    derivation->add_option("--mode", mode, "D or partial")->default_val("D")->check(CLI::IsMember({"D", "partial"}));
    derivation->add_option("word", w1)->required();

    auto* matrix = app.add_subcommand("matrix", "Level-lowering matrix");
    matrix->add_option("--N", n)->required()->check(CLI::NonNegativeNumber);
    matrix->add_option("--level", level)->required()->check(CLI::PositiveNumber);
    matrix->add_flag("--det", want_det, "Print the exact determinant");
    matrix->add_flag("--two-adic", want_two_adic, "Print the 2-adic certificate");

    auto* dm = app.add_subcommand("dm", "Basis of the double shuffle Lie algebra in one weight");
    dm->add_option("--weight", n)->required()->check(CLI::PositiveNumber);

    auto* dims = app.add_subcommand("dims", "Dimension table");
    dims->add_option("--max-weight", max_weight)->required()->check(CLI::NonNegativeNumber);

    auto* reduce = app.add_subcommand("reduce", "Canonical form modulo the extended double shuffle ideal");
    reduce->add_option("--weight", n)->required()->check(CLI::NonNegativeNumber);
    reduce->add_option("poly", poly_text)->required();

    auto* oddmodel = app.add_subcommand("oddmodel", "Odd generator model");
    oddmodel->add_flag("--kernel", want_kernel, "Kernel of the lower derivations instead of the basis");
    oddmodel->add_option("--weight", n)->required()->check(CLI::NonNegativeNumber);

    auto* coeffs = app.add_subcommand("coeffs", "Zagier coefficients c^r_{a,b}");
    coeffs->add_option("--a", a)->required()->check(CLI::NonNegativeNumber);
    coeffs->add_option("--b", b)->required()->check(CLI::NonNegativeNumber);
    coeffs->add_option("--r", r_opt)->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite)->required()->check(CLI::IsMember({"zagier", "euler", "level-one", "c-lemma", "binomial"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const bool as_json = format == "json";
    const bool as_csv = format == "csv";
    try {
        const Budget budget = read_budget();
        json doc;
        std::ostringstream out;
        int exit_code = kExitOk;

        if (*product) {
            const fmzv_product_op p_op = op == "shuffle" ? FMZV_PRODUCT_SHUFFLE : op == "stuffle" ? FMZV_PRODUCT_STUFFLE : FMZV_PRODUCT_CONCAT;
            const fmzv_alphabet al = alphabet_of(alphabet.empty() ? (op == "stuffle" ? "Y" : "X") : alphabet);
            Poly x = parse(al, w1), y = parse(al, w2);
            fmzv_poly* res = nullptr;
            check(fmzv_product(p_op, x.get(), y.get(), &res));
            Poly result(res);
            doc = envelope("product");
            doc["op"] = op;
            doc["result"] = json_of(result.get());
            out << text_of(result.get()) << '\n';
        } else if (*coproduct) {
            const fmzv_coproduct_op c_op = op == "gon" ? FMZV_COPRODUCT_GON : op == "dec" ? FMZV_COPRODUCT_DEC : FMZV_COPRODUCT_DUAL_STUFFLE;
            const fmzv_alphabet al = alphabet_of(alphabet.empty() ? (op == "dual-stuffle" ? "Y" : "X") : alphabet);
            Poly x = parse(al, w1);
            fmzv_tensor* res = nullptr;
            check(fmzv_coproduct(c_op, x.get(), &res));
            Tensor result(res);
            doc = envelope("coproduct");
            doc["op"] = op;
            doc["result"] = json_of(result.get());
            out << text_of(result.get()) << '\n';
        } else if (*derivation) {
            Poly x = parse(FMZV_ALPHABET_X, w1);
            fmzv_tensor* res = nullptr;
            check(fmzv_derivation(mode == "D" ? FMZV_DERIVATION_D : FMZV_DERIVATION_PARTIAL, x.get(), r, &res));
            Tensor result(res);
            doc = envelope("derivation");
            doc["mode"] = mode;
            doc["r"] = r;
            doc["result"] = json_of(result.get());
            out << text_of(result.get()) << '\n';
        } else if (*matrix) {
            within(n, budget.matrix, "N");
            fmzv_matrix* res = nullptr;
            check(fmzv_level_matrix(n, level, &res));
            Matrix m(res);
            char *basis = nullptr, *codomain = nullptr;
            check(fmzv_level_labels(n, level, &basis, &codomain));
            const auto cols = lines(take(basis)), rows = lines(take(codomain));
            char* csv = nullptr;
            check(fmzv_matrix_to_csv(m.get(), &csv));
            char* mj = nullptr;
            check(fmzv_matrix_to_json(m.get(), &mj));
            doc = envelope("matrix");
            doc["N"] = n;
            doc["level"] = level;
            doc["rows"] = rows;
            doc["columns"] = cols;
            doc["entries"] = json::parse(take(mj));
            out << take(csv);
            if (want_det) {
                char* d = nullptr;
                check(fmzv_matrix_det(m.get(), &d));
                const std::string det = take(d);
                doc["det"] = det;
                out << "det = " << det << '\n';
            }
            if (want_two_adic) {
                int ok = 0;
                check(fmzv_matrix_two_adic(m.get(), &ok));
                doc["two_adic"] = ok == 1;
                out << "two-adic = " << (ok ? "true" : "false") << '\n';
            }
        } else if (*dm) {
            within(n, budget.eds, "weight");
            progress("computing dm in weight " + std::to_string(n));
            fmzv_polylist* res = nullptr;
            check(fmzv_dm_basis(n, &res));
            PolyList l(res);
            doc = envelope("dm");
            doc["weight"] = n;
            doc["basis"] = json::array();
            for (const auto& p : unpack(l.get())) {
                doc["basis"].push_back(json_of(p.get()));
                out << text_of(p.get()) << '\n';
            }
            doc["dimension"] = doc["basis"].size();
            if (doc["basis"].empty()) out << "0\n";
        } else if (*dims) {
            within(max_weight, budget.eds, "max weight");
            doc = envelope("dims");
            doc["rows"] = json::array();
            const char sep = as_csv ? ',' : ' ';
            out << "weight" << sep << "zf" << sep << "dm" << sep << "uf" << '\n';
            for (int w = 0; w <= max_weight; ++w) {
                progress("weight " + std::to_string(w));
                int zf = 0;
                check(fmzv_zf_dim(w, &zf));
                std::size_t dm_dim = 0;
                if (w >= 1) {
                    fmzv_polylist* res = nullptr;
                    check(fmzv_dm_basis(w, &res));
                    PolyList l(res);
                    check(fmzv_polylist_size(l.get(), &dm_dim));
                }
                long long uf = 0;
                check(fmzv_uf_dim(w, &uf));
                doc["rows"].push_back({{"weight", w}, {"zf", zf}, {"dm", dm_dim}, {"uf", uf}});
                out << w << sep << zf << sep << dm_dim << sep << uf << '\n';
            }
        } else if (*reduce) {
            within(n, budget.eds, "weight");
            Poly x = parse(FMZV_ALPHABET_X, poly_text);
            progress("reducing in weight " + std::to_string(n));
            fmzv_poly* res = nullptr;
            check(fmzv_zf_reduce(x.get(), n, &res));
            Poly result(res);
            doc = envelope("reduce");
            doc["weight"] = n;
            doc["result"] = json_of(result.get());
            out << text_of(result.get()) << '\n';
        } else if (*oddmodel) {
            within(n, budget.matrix, "weight");
            fmzv_polylist* res = nullptr;
            check(want_kernel ? fmzv_uf_kernel(n, &res) : fmzv_uf_basis(n, &res));
            PolyList l(res);
            doc = envelope("oddmodel");
            doc["weight"] = n;
            doc["kind"] = want_kernel ? "kernel" : "basis";
            doc["elements"] = json::array();
            for (const auto& p : unpack(l.get())) {
                doc["elements"].push_back(json_of(p.get()));
                out << text_of(p.get()) << '\n';
            }
        } else if (*coeffs) {
            doc = envelope("coeffs");
            doc["a"] = a;
            doc["b"] = b;
            auto value = [&](int rr) {
                char* s = nullptr;
                check(fmzv_c_coeff(a, b, rr, &s));
                return take(s);
            };
            if (r_opt) {
                const std::string v = value(*r_opt);
                doc["r"] = *r_opt;
                doc["value"] = v;
                out << v << '\n';
            } else {
                doc["values"] = json::array();
                if (as_csv) out << "r,value\n";
                for (int rr = 1; rr <= a + b + 1; ++rr) {
                    const std::string v = value(rr);
                    doc["values"].push_back({{"r", rr}, {"value", v}});
                    out << rr << (as_csv ? "," : ": ") << v << '\n';
                }
            }
        } else if (*verify) {
            progress("running suite " + suite);
            int passed = 0;
            char* report = nullptr;
            check(fmzv_verify(suite.c_str(), budget.eds, std::min(14, budget.matrix), &passed, &report));
            const auto checks = lines(take(report));
            doc = envelope("verify");
            doc["suite"] = suite;
            doc["passed"] = passed == 1;
            doc["checks"] = json::array();
            for (const auto& c : checks) {
                doc["checks"].push_back({{"name", c.substr(5)}, {"passed", c.rfind("PASS", 0) == 0}});
                out << c << '\n';
            }
            out << "suite " << suite << ": " << (passed ? "PASS" : "FAIL") << '\n';
            if (!passed) exit_code = kExitVerifyFailed;
        }

        if (as_json)
            std::cout << doc.dump(2) << '\n';
        else
            std::cout << out.str();
        return exit_code;
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return kExitUsage;
    }
}
