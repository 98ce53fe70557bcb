#include "fmzv/fmzv.h"

#include "fmzv/double_shuffle.hpp"
#include "fmzv/goncharov.hpp"
#include "fmzv/ihara.hpp"
#include "fmzv/io.hpp"
#include "fmzv/level_matrix.hpp"
#include "fmzv/odd_model.hpp"
#include "fmzv/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

struct fmzv_poly {
    fmzv::NCPoly value;
};
struct fmzv_tensor {
    fmzv::Tensor2 value;
};
struct fmzv_matrix {
    fmzv::QMatrix value;
};
struct fmzv_polylist {
    std::vector<fmzv::NCPoly> value;
};

namespace {

thread_local std::string last_error;

fmzv_status fail(fmzv_status s, const std::string& msg) {
    last_error = msg;
    return s;
}

struct NullArg : std::invalid_argument {
    NullArg() : std::invalid_argument("null argument") {}
};

// Runs f, mapping exceptions to status codes.
template <class F>
fmzv_status guard(F&& f) {
    try {
        last_error.clear();
        f();
        return FMZV_OK;
    } catch (const NullArg& e) {
        return fail(FMZV_ERR_NULL, e.what());
    } catch (const fmzv::ParseError& e) {
        return fail(FMZV_ERR_PARSE, e.what());
    } catch (const fmzv::DimensionError& e) {
        return fail(FMZV_ERR_DIMENSION, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(FMZV_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(FMZV_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(FMZV_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(FMZV_ERR_INTERNAL, e.what());
    }
}

template <class... P>
void need(const P*... ps) {
    if (((ps == nullptr) || ...)) throw NullArg();
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

fmzv::Alphabet to_alphabet(fmzv_alphabet a) {
    switch (a) {
        case FMZV_ALPHABET_X: return fmzv::Alphabet::X;
        case FMZV_ALPHABET_Y: return fmzv::Alphabet::Y;
        case FMZV_ALPHABET_S: return fmzv::Alphabet::S;
    }
    throw std::invalid_argument("unknown alphabet");
}

void require(const fmzv::NCPoly& p, fmzv::Alphabet a, const char* what) {
    if (!p.is_zero() && p.alphabet() != a)
        throw std::invalid_argument(std::string(what) + ": expected alphabet " + fmzv::alphabet_name(a));
}

template <class F>
fmzv_status run(F&& f) {
    return guard(std::forward<F>(f));
}

}  // namespace

extern "C" {

const char* fmzv_last_error(void) { return last_error.c_str(); }

const char* fmzv_version(void) { return "1.0.0"; }

void fmzv_string_free(char* s) { std::free(s); }

fmzv_status fmzv_poly_parse(fmzv_alphabet a, const char* text, fmzv_poly** out) {
    return run([&] {
        need(text, out);
        *out = new fmzv_poly{fmzv::parse_poly(to_alphabet(a), text)};
    });
}

fmzv_status fmzv_poly_from_json(const char* json, fmzv_poly** out) {
    return run([&] {
        need(json, out);
        *out = new fmzv_poly{fmzv::poly_from_json(json)};
    });
}

fmzv_status fmzv_poly_clone(const fmzv_poly* p, fmzv_poly** out) {
    return run([&] {
        need(p, out);
        *out = new fmzv_poly{p->value};
    });
}

void fmzv_poly_free(fmzv_poly* p) { delete p; }

fmzv_status fmzv_poly_format(const fmzv_poly* p, char** out) {
    return run([&] {
        need(p, out);
        *out = dup(fmzv::format_poly(p->value));
    });
}

fmzv_status fmzv_poly_to_json(const fmzv_poly* p, char** out) {
    return run([&] {
        need(p, out);
        *out = dup(fmzv::poly_to_json(p->value));
    });
}

fmzv_status fmzv_poly_is_zero(const fmzv_poly* p, int* out) {
    return run([&] {
        need(p, out);
        *out = p->value.is_zero() ? 1 : 0;
    });
}

fmzv_status fmzv_poly_equal(const fmzv_poly* a, const fmzv_poly* b, int* out) {
    return run([&] {
        need(a, b, out);
        *out = (a->value == b->value) ? 1 : 0;
    });
}

void fmzv_tensor_free(fmzv_tensor* t) { delete t; }

fmzv_status fmzv_tensor_format(const fmzv_tensor* t, char** out) {
    return run([&] {
        need(t, out);
        *out = dup(fmzv::format_tensor(t->value));
    });
}

fmzv_status fmzv_tensor_to_json(const fmzv_tensor* t, char** out) {
    return run([&] {
        need(t, out);
        *out = dup(fmzv::tensor_to_json(t->value));
    });
}

fmzv_status fmzv_tensor_is_zero(const fmzv_tensor* t, int* out) {
    return run([&] {
        need(t, out);
        *out = t->value.is_zero() ? 1 : 0;
    });
}

void fmzv_polylist_free(fmzv_polylist* l) { delete l; }

fmzv_status fmzv_polylist_size(const fmzv_polylist* l, size_t* out) {
    return run([&] {
        need(l, out);
        *out = l->value.size();
    });
}

fmzv_status fmzv_polylist_get(const fmzv_polylist* l, size_t i, fmzv_poly** out) {
    return run([&] {
        need(l, out);
        if (i >= l->value.size()) throw std::out_of_range("polylist index out of range");
        *out = new fmzv_poly{l->value[i]};
    });
}

fmzv_status fmzv_product(fmzv_product_op op, const fmzv_poly* a, const fmzv_poly* b, fmzv_poly** out) {
    return run([&] {
        need(a, b, out);
        fmzv::NCPoly r;
        switch (op) {
            case FMZV_PRODUCT_SHUFFLE: r = fmzv::shuffle(a->value, b->value); break;
            case FMZV_PRODUCT_STUFFLE:
                require(a->value, fmzv::Alphabet::Y, "stuffle");
                require(b->value, fmzv::Alphabet::Y, "stuffle");
                r = fmzv::stuffle(a->value, b->value);
                break;
            case FMZV_PRODUCT_CONCAT: r = a->value * b->value; break;
            default: throw std::invalid_argument("unknown product");
        }
        *out = new fmzv_poly{std::move(r)};
    });
}

fmzv_status fmzv_coproduct(fmzv_coproduct_op op, const fmzv_poly* p, fmzv_tensor** out) {
    return run([&] {
        need(p, out);
        fmzv::Tensor2 t;
        switch (op) {
            case FMZV_COPRODUCT_GON:
                require(p->value, fmzv::Alphabet::X, "gon");
                t = fmzv::gon_coproduct(p->value);
                break;
            case FMZV_COPRODUCT_DEC: t = fmzv::deconcat(p->value); break;
            case FMZV_COPRODUCT_DUAL_STUFFLE:
                require(p->value, fmzv::Alphabet::Y, "dual-stuffle");
                t = fmzv::dual_coproduct(p->value, fmzv::Diamond::stuffle());
                break;
            default: throw std::invalid_argument("unknown coproduct");
        }
        *out = new fmzv_tensor{std::move(t)};
    });
}

fmzv_status fmzv_pi_indec(const fmzv_poly* p, int n, fmzv_poly** out) {
    return run([&] {
        need(p, out);
        *out = new fmzv_poly{fmzv::pi_indec(p->value, n)};
    });
}

fmzv_status fmzv_ihara_bracket(const fmzv_poly* f, const fmzv_poly* g, fmzv_poly** out) {
    return run([&] {
        need(f, g, out);
        require(f->value, fmzv::Alphabet::X, "ihara_bracket");
        require(g->value, fmzv::Alphabet::X, "ihara_bracket");
        *out = new fmzv_poly{fmzv::ihara_bracket(f->value, g->value)};
    });
}

fmzv_status fmzv_grossman_larson(const fmzv_poly* a, const fmzv_poly* b, fmzv_poly** out) {
    return run([&] {
        need(a, b, out);
        require(a->value, fmzv::Alphabet::X, "grossman_larson");
        require(b->value, fmzv::Alphabet::X, "grossman_larson");
        *out = new fmzv_poly{fmzv::grossman_larson(a->value, b->value)};
    });
}

fmzv_status fmzv_gl_antipode(const fmzv_poly* a, int max_weight, fmzv_poly** out) {
    return run([&] {
        need(a, out);
        require(a->value, fmzv::Alphabet::X, "gl_antipode");
        *out = new fmzv_poly{fmzv::gl_antipode(a->value, max_weight)};
    });
}

fmzv_status fmzv_derivation(fmzv_derivation_mode mode, const fmzv_poly* p, int r, fmzv_tensor** out) {
    return run([&] {
        need(p, out);
        require(p->value, fmzv::Alphabet::X, "derivation");
        if (r < 1) throw std::invalid_argument("derivation: r must be positive");
        switch (mode) {
            case FMZV_DERIVATION_D: *out = new fmzv_tensor{fmzv::derivation_D(p->value, r)}; break;
            case FMZV_DERIVATION_PARTIAL: *out = new fmzv_tensor{fmzv::partial_2r1(p->value, r)}; break;
            default: throw std::invalid_argument("unknown derivation mode");
        }
    });
}

fmzv_status fmzv_level_matrix(int n, int level, fmzv_matrix** out) {
    return run([&] {
        need(out);
        if (n < 0 || level < 1) throw std::invalid_argument("level_matrix: need N >= 0 and level >= 1");
        *out = new fmzv_matrix{fmzv::build_matrix(n, level)};
    });
}

void fmzv_matrix_free(fmzv_matrix* m) { delete m; }

fmzv_status fmzv_matrix_shape(const fmzv_matrix* m, size_t* rows, size_t* cols) {
    return run([&] {
        need(m, rows, cols);
        *rows = m->value.rows();
        *cols = m->value.cols();
    });
}

fmzv_status fmzv_matrix_entry(const fmzv_matrix* m, size_t i, size_t j, char** out) {
    return run([&] {
        need(m, out);
        if (i >= m->value.rows() || j >= m->value.cols()) throw std::out_of_range("matrix index out of range");
        *out = dup(fmzv::to_string(m->value(i, j)));
    });
}

fmzv_status fmzv_matrix_to_csv(const fmzv_matrix* m, char** out) {
    return run([&] {
        need(m, out);
        *out = dup(m->value.to_csv());
    });
}

fmzv_status fmzv_matrix_to_json(const fmzv_matrix* m, char** out) {
    return run([&] {
        need(m, out);
        *out = dup(m->value.to_json());
    });
}

fmzv_status fmzv_matrix_det(const fmzv_matrix* m, char** out) {
    return run([&] {
        need(m, out);
        *out = dup(fmzv::to_string(fmzv::det_exact(m->value)));
    });
}

fmzv_status fmzv_matrix_two_adic(const fmzv_matrix* m, int* out) {
    return run([&] {
        need(m, out);
        *out = fmzv::two_adic_certificate(m->value) ? 1 : 0;
    });
}

fmzv_status fmzv_level_labels(int n, int level, char** basis, char** codomain) {
    return run([&] {
        need(basis, codomain);
        if (n < 0 || level < 1) throw std::invalid_argument("level_labels: need N >= 0 and level >= 1");
        std::string b, c;
        for (const auto& u : fmzv::enumerate_basis(n, level).elements) b += fmzv::format_word23(u) + "\n";
        for (const auto& u : fmzv::enumerate_codomain(n, level)) c += fmzv::format_word23(u) + "\n";
        *basis = dup(b);
        try {
            *codomain = dup(c);
        } catch (...) {
            std::free(*basis);
            throw;
        }
    });
}

fmzv_status fmzv_c_coeff(int a, int b, int r, char** out) {
    return run([&] {
        need(out);
        if (a < 0 || b < 0 || r < 1) throw std::invalid_argument("c_coeff: need a, b >= 0 and r >= 1");
        *out = dup(fmzv::to_string(fmzv::c_coeff(a, b, r)));
    });
}

fmzv_status fmzv_dm_basis(int weight, fmzv_polylist** out) {
    return run([&] {
        need(out);
        *out = new fmzv_polylist{fmzv::dm_basis(weight)};
    });
}

fmzv_status fmzv_check_dm(const fmzv_poly* psi, int* out) {
    return run([&] {
        need(psi, out);
        *out = fmzv::check_dm_conditions(psi->value) ? 1 : 0;
    });
}

fmzv_status fmzv_zf_dim(int n, int* out) {
    return run([&] {
        need(out);
        *out = fmzv::zf_dim(n);
    });
}

fmzv_status fmzv_zf_reduce(const fmzv_poly* p, int n, fmzv_poly** out) {
    return run([&] {
        need(p, out);
        *out = new fmzv_poly{fmzv::zf_reduce(p->value, n)};
    });
}

fmzv_status fmzv_uf_basis(int n, fmzv_polylist** out) {
    return run([&] {
        need(out);
        std::vector<fmzv::NCPoly> v;
        for (const auto& w : fmzv::uf_basis(n)) v.push_back(fmzv::NCPoly::word(fmzv::Alphabet::S, w));
        *out = new fmzv_polylist{std::move(v)};
    });
}

fmzv_status fmzv_uf_dim(int n, long long* out) {
    return run([&] {
        need(out);
        *out = fmzv::uf_dim(n);
    });
}

fmzv_status fmzv_uf_kernel(int n, fmzv_polylist** out) {
    return run([&] {
        need(out);
        *out = new fmzv_polylist{fmzv::uf_kernel(n)};
    });
}

fmzv_status fmzv_uf_dec(const fmzv_poly* e, fmzv_tensor** out) {
    return run([&] {
        need(e, out);
        *out = new fmzv_tensor{fmzv::dec_coaction(e->value)};
    });
}

fmzv_status fmzv_uf_derivation(const fmzv_poly* e, int r, fmzv_tensor** out) {
    return run([&] {
        need(e, out);
        *out = new fmzv_tensor{fmzv::uf_derivation_D(e->value, r)};
    });
}

fmzv_status fmzv_verify(const char* suite, int eds_max_weight, int matrix_max_n, int* passed, char** report) {
    return run([&] {
        need(suite, passed, report);
        const auto rep = fmzv::run_suite(suite, eds_max_weight, matrix_max_n);
        std::string text;
        for (const auto& c : rep.checks) text += std::string(c.passed ? "PASS " : "FAIL ") + c.name + "\n";
        *report = dup(text);
        *passed = rep.passed() ? 1 : 0;
    });
}

}  // extern "C"
