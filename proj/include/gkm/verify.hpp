#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace gkm {

struct Check {
    Check() = default;
    explicit Check(std::string n) : name(std::move(n)) {}

    std::string name;
    bool ok = true;
    long cases = 0;
    long skipped = 0;
    std::string counterexample;  // first failing instance
    std::string note;

    // records one case; keeps the first counterexample
    void record(bool pass, const std::function<std::string()>& instance);
};

struct SuiteResult {
    std::string suite;
    std::string module;
    std::string statement;
    std::vector<Check> checks;
    double seconds = 0;

    bool ok() const;
    const Check* first_failure() const;
};

SuiteResult verify_supports(int n, int random_n, int random_count, int seeds, std::uint64_t seed);
SuiteResult verify_minors(int n, int random_n, int random_count, std::uint64_t seed);
SuiteResult verify_cell_chart(int nmax);
SuiteResult verify_permutohedral(int nmax);
SuiteResult verify_poincare(int nmax);
SuiteResult verify_dot_rules(int n_sigma, int n_dashed, int n_full);
SuiteResult verify_coxeter(int nmax);
SuiteResult verify_decomposition_suite(int nmax);
SuiteResult verify_young_types(int nmax);
SuiteResult verify_sw_suite(int n_sw, int n_closed);
SuiteResult verify_wz_suite(int n_wz, int n_leading);

// CLI names: supports, minors, cell-chart, permutohedral, poincare, dot, coxeter,
// decomposition, young-types, shareshian-wachs, wz
const std::vector<std::string>& suite_names();
// runs one suite scaled by n; throws std::invalid_argument for an unknown name
SuiteResult run_suite(const std::string& name, int n, std::uint64_t seed);

}  // namespace gkm
