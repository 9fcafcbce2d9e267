#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gkm/verify.hpp"

using namespace gkm;

int main() {
    const std::uint64_t seed = 20240611;
    struct Criterion {
        int id;
        std::function<SuiteResult()> run;
    };
    std::vector<Criterion> criteria{
        {1, [&] { return verify_supports(4, 5, 200, 3, seed); }},
        {2, [&] { return verify_minors(4, 5, 500, seed); }},
        {3, [] { return verify_cell_chart(5); }},
        {4, [] { return verify_permutohedral(6); }},
        {5, [] { return verify_poincare(5); }},
        {6, [] { return verify_dot_rules(5, 4, 4); }},
        {7, [] { return verify_coxeter(6); }},
        {8, [] { return verify_decomposition_suite(6); }},
        {9, [] { return verify_young_types(8); }},
        {10, [] { return verify_sw_suite(5, 6); }},
        {11, [] { return verify_wz_suite(6, 5); }},
    };
    int failed = 0;
    for (auto& c : criteria) {
        SuiteResult r = c.run();
        long cases = 0, skipped = 0;
        for (auto& ch : r.checks) {
            cases += ch.cases;
            skipped += ch.skipped;
        }
        std::string tail;
        if (const Check* f = r.first_failure()) tail = " first failure: " + f->name + " at " + f->counterexample;
        std::printf("criterion %d: %s  %s (%ld cases, %ld skipped, %.1fs)%s\n", c.id, r.ok() ? "PASS" : "FAIL",
                    r.statement.c_str(), cases, skipped, r.seconds, tail.c_str());
        std::fflush(stdout);
        if (!r.ok()) ++failed;
    }
    return failed ? 1 : 0;
}
