#include <doctest.h>

#include "fmzv/fmzv.h"

#include <cstring>
#include <string>

namespace {

std::string take(char* s) {
    std::string out(s);
    fmzv_string_free(s);
    return out;
}

fmzv_poly* parse(fmzv_alphabet a, const char* text) {
    fmzv_poly* p = nullptr;
    REQUIRE(fmzv_poly_parse(a, text, &p) == FMZV_OK);
    return p;
}

std::string text(const fmzv_poly* p) {
    char* s = nullptr;
    REQUIRE(fmzv_poly_format(p, &s) == FMZV_OK);
    return take(s);
}

}  // namespace

TEST_CASE("products and formatting") {
    fmzv_poly* a = parse(FMZV_ALPHABET_X, "x0");
    fmzv_poly* b = parse(FMZV_ALPHABET_X, "x1");
    fmzv_poly* out = nullptr;
    REQUIRE(fmzv_product(FMZV_PRODUCT_SHUFFLE, a, b, &out) == FMZV_OK);
    CHECK(text(out) == "x0x1 + x1x0");
    CHECK(std::string(fmzv_last_error()).empty());
    fmzv_poly* c = nullptr;
    CHECK(fmzv_product(FMZV_PRODUCT_STUFFLE, a, b, &c) == FMZV_ERR_INVALID_ARGUMENT);
    CHECK(c == nullptr);
    CHECK_FALSE(std::string(fmzv_last_error()).empty());
    fmzv_poly_free(out);
    fmzv_poly_free(a);
    fmzv_poly_free(b);
}

TEST_CASE("parse errors carry the position") {
    fmzv_poly* p = nullptr;
    CHECK(fmzv_poly_parse(FMZV_ALPHABET_X, "x0x1 + x2", &p) == FMZV_ERR_PARSE);
    CHECK(p == nullptr);
    CHECK(std::string(fmzv_last_error()).find("position 8") != std::string::npos);
    CHECK(fmzv_poly_from_json("{", &p) == FMZV_ERR_PARSE);
    CHECK(fmzv_poly_from_json(R"({"alphabet":"X"})", &p) == FMZV_ERR_INVALID_ARGUMENT);
}

TEST_CASE("null arguments are rejected") {
    fmzv_poly* p = nullptr;
    CHECK(fmzv_poly_parse(FMZV_ALPHABET_X, nullptr, &p) == FMZV_ERR_NULL);
    CHECK(fmzv_poly_parse(FMZV_ALPHABET_X, "x0", nullptr) == FMZV_ERR_NULL);
    CHECK(fmzv_zf_dim(3, nullptr) == FMZV_ERR_NULL);
    fmzv_poly_free(nullptr);
    fmzv_tensor_free(nullptr);
    fmzv_matrix_free(nullptr);
    fmzv_polylist_free(nullptr);
    fmzv_string_free(nullptr);
}

TEST_CASE("json round trip") {
    fmzv_poly* p = parse(FMZV_ALPHABET_Y, "1/2*y2 y1 - y3");
    char* js = nullptr;
    REQUIRE(fmzv_poly_to_json(p, &js) == FMZV_OK);
    fmzv_poly* back = nullptr;
    REQUIRE(fmzv_poly_from_json(js, &back) == FMZV_OK);
    fmzv_string_free(js);
    int eq = 0;
    REQUIRE(fmzv_poly_equal(p, back, &eq) == FMZV_OK);
    CHECK(eq == 1);
    fmzv_poly_free(p);
    fmzv_poly_free(back);
}

TEST_CASE("coproducts and derivations") {
    fmzv_poly* w = parse(FMZV_ALPHABET_X, "x1x0");
    fmzv_tensor* t = nullptr;
    REQUIRE(fmzv_coproduct(FMZV_COPRODUCT_GON, w, &t) == FMZV_OK);
    char* s = nullptr;
    REQUIRE(fmzv_tensor_format(t, &s) == FMZV_OK);
    CHECK(take(s) == "x1x0 ⊗ 1 + x1 ⊗ x0 + x0 ⊗ x1 + 1 ⊗ x1x0");
    fmzv_tensor_free(t);
    fmzv_poly_free(w);

    fmzv_poly* b = parse(FMZV_ALPHABET_X, "x0x0x1x0x1x0x1x0x1");
    REQUIRE(fmzv_derivation(FMZV_DERIVATION_PARTIAL, b, 1, &t) == FMZV_OK);
    REQUIRE(fmzv_tensor_format(t, &s) == FMZV_OK);
    CHECK(take(s) == "x0x0x1 ⊗ x0x1x0x1x0x1 - x0x1x0 ⊗ x0x1x0x1x0x1");
    fmzv_tensor_free(t);
    CHECK(fmzv_derivation(FMZV_DERIVATION_D, b, 0, &t) == FMZV_ERR_INVALID_ARGUMENT);
    fmzv_poly_free(b);
}

TEST_CASE("level matrices") {
    fmzv_matrix* m = nullptr;
    REQUIRE(fmzv_level_matrix(9, 1, &m) == FMZV_OK);
    size_t r = 0, c = 0;
    REQUIRE(fmzv_matrix_shape(m, &r, &c) == FMZV_OK);
    CHECK(r == 4);
    CHECK(c == 4);
    char* s = nullptr;
    REQUIRE(fmzv_matrix_det(m, &s) == FMZV_OK);
    CHECK(take(s) == "4865/512");
    REQUIRE(fmzv_matrix_entry(m, 0, 3, &s) == FMZV_OK);
    CHECK(take(s) == "-223/16");
    CHECK(fmzv_matrix_entry(m, 4, 0, &s) == FMZV_ERR_INVALID_ARGUMENT);
    int ok = 0;
    REQUIRE(fmzv_matrix_two_adic(m, &ok) == FMZV_OK);
    CHECK(ok == 1);
    fmzv_matrix_free(m);
    char *basis = nullptr, *codomain = nullptr;
    REQUIRE(fmzv_level_labels(9, 1, &basis, &codomain) == FMZV_OK);
    CHECK(take(basis) == "(3,2,2,2)\n(2,3,2,2)\n(2,2,3,2)\n(2,2,2,3)\n");
    CHECK(take(codomain) == "(2,2,2)\n(2,2)\n(2)\n()\n");
    REQUIRE(fmzv_c_coeff(0, 1, 2, &s) == FMZV_OK);
    CHECK(take(s) == "-11/2");
    CHECK(fmzv_level_matrix(9, 0, &m) == FMZV_ERR_INVALID_ARGUMENT);
}

TEST_CASE("double shuffle and odd model") {
    int d = -1;
    REQUIRE(fmzv_zf_dim(8, &d) == FMZV_OK);
    CHECK(d == 4);
    fmzv_poly* p = parse(FMZV_ALPHABET_X, "x0x1x0x1");
    fmzv_poly* red = nullptr;
    REQUIRE(fmzv_zf_reduce(p, 4, &red) == FMZV_OK);
    CHECK(text(red) == "3/4*x0x0x0x1");
    fmzv_poly_free(red);
    CHECK(fmzv_zf_reduce(p, 5, &red) == FMZV_ERR_INVALID_ARGUMENT);
    fmzv_poly_free(p);

    fmzv_polylist* l = nullptr;
    REQUIRE(fmzv_dm_basis(3, &l) == FMZV_OK);
    size_t n = 0;
    REQUIRE(fmzv_polylist_size(l, &n) == FMZV_OK);
    CHECK(n == 1);
    fmzv_poly* xi = nullptr;
    REQUIRE(fmzv_polylist_get(l, 0, &xi) == FMZV_OK);
    int ok = 0;
    REQUIRE(fmzv_check_dm(xi, &ok) == FMZV_OK);
    CHECK(ok == 1);
    CHECK(fmzv_polylist_get(l, 1, &p) == FMZV_ERR_INVALID_ARGUMENT);
    fmzv_poly_free(xi);
    fmzv_polylist_free(l);

    REQUIRE(fmzv_uf_kernel(7, &l) == FMZV_OK);
    REQUIRE(fmzv_polylist_get(l, 0, &p) == FMZV_OK);
    CHECK(text(p) == "s7");
    fmzv_poly_free(p);
    fmzv_polylist_free(l);
    long long dim = 0;
    REQUIRE(fmzv_uf_dim(14, &dim) == FMZV_OK);
    CHECK(dim == 21);
}

TEST_CASE("verification suites") {
    int passed = 0;
    char* report = nullptr;
    REQUIRE(fmzv_verify("euler", 9, 14, &passed, &report) == FMZV_OK);
    CHECK(passed == 1);
    CHECK(take(report).find("FAIL") == std::string::npos);
    CHECK(fmzv_verify("nonsense", 9, 14, &passed, &report) == FMZV_ERR_INVALID_ARGUMENT);
}

TEST_CASE("version") { CHECK(std::strlen(fmzv_version()) > 0); }
