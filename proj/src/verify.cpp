#include "fmzv/verify.hpp"

#include "fmzv/double_shuffle.hpp"
#include "fmzv/level_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace fmzv {

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"zagier", "euler", "level-one", "c-lemma", "binomial"};
    return names;
}

SuiteReport run_suite(const std::string& name, int eds_max_weight, int matrix_max_n) {
    SuiteReport rep;
    rep.suite = name;
    auto add = [&rep](std::string label, bool ok) { rep.checks.push_back({std::move(label), ok}); };
    if (name == "zagier") {
        for (int a = 0; 2 * a + 3 <= eds_max_weight; ++a)
            for (int b = 0; 2 * a + 2 * b + 3 <= eds_max_weight; ++b)
                add("formal_zagier(" + std::to_string(a) + "," + std::to_string(b) + ")", verify_formal_zagier(a, b));
    } else if (name == "euler") {
        if (eds_max_weight >= 3) add("zeta(2,1) = zeta(3)", verify_euler());
        for (int n = 2; 2 * n <= eds_max_weight; ++n) add("zeta(" + std::to_string(2 * n) + ") = b_n zeta(2)^n", verify_even_zeta(n));
        for (int n = 1; 2 * n <= eds_max_weight; ++n) add("zeta({2}^" + std::to_string(n) + ")", verify_zeta_222(n));
    } else if (name == "level-one") {
        for (int n = 1; 2 * n + 1 <= eds_max_weight; ++n) add("level_one(" + std::to_string(n) + ")", verify_level_one_identity(n));
    } else if (name == "c-lemma") {
        add("c_lemma(10)", verify_c_lemma(10));
        for (int n = 1; n <= matrix_max_n; ++n)
            for (int ell = 1; 3 * ell <= n; ++ell) {
                const QMatrix m = build_matrix(n, ell);
                if (m.rows() == 0) continue;
                add("matrix(" + std::to_string(n) + "," + std::to_string(ell) + ") 2-adic",
                    two_adic_certificate(m) && sgn(det_exact(m)) != 0);
            }
    } else if (name == "binomial") {
        add("binomial_identity(8)", verify_binomial_identity(8));
    } else {
        throw std::invalid_argument("unknown suite '" + name + "'");
    }
    return rep;
}

}  // namespace fmzv
