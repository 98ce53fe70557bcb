#ifndef FMZV_VERIFY_HPP
#define FMZV_VERIFY_HPP

#include <string>
#include <vector>

namespace fmzv {

struct CheckResult {
    std::string name;
    bool passed = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool passed() const;
};

// zagier, euler, level-one, c-lemma, binomial.
const std::vector<std::string>& suite_names();
// eds_max_weight bounds the formal zeta checks; matrix_max_n bounds the matrix certificates.
SuiteReport run_suite(const std::string& name, int eds_max_weight = 9, int matrix_max_n = 14);

}  // namespace fmzv

#endif
