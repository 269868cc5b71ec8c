// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.

#include <macdlab/verify_suites.hpp>

#include <chrono>
#include <iostream>
#include <limits>

using namespace macdlab;
using namespace macdlab::verify;

namespace {

int failures = 0;

void report(int number, const std::string& label, const std::vector<CheckResult>& results,
            double seconds, double budget_seconds) {
    bool ok = all_pass(results);
    bool in_time = seconds < budget_seconds;
    if (!ok || !in_time) ++failures;
    std::cout << "criterion " << number << " [" << label << "]: "
              << (ok && in_time ? "PASS" : "FAIL") << " (" << results.size() << " instances, "
              << seconds << "s";
    if (!in_time) std::cout << ", over budget " << budget_seconds << "s";
    std::cout << ")\n";
    for (const auto& r : results)
        if (!r.ok)
            std::cout << "  failed: " << r.suite << " " << r.instance << ": " << r.witness
                      << "\n";
}

template <typename F>
void run(int number, const std::string& label, double budget_seconds, F&& f) {
    auto start = std::chrono::steady_clock::now();
    std::vector<CheckResult> results = f();
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(number, label, results, seconds, budget_seconds);
}

}  // namespace

int main() {
    run(1, "worked examples", 10, [] { return suite_examples(); });
    run(2, "filling statistics", 1, [] { return suite_hhl_stats(); });
    run(3, "triple oracle", 600, [] { return suite_hhl_oracle(4, 4); });
    run(4, "operator relations", 300, [] {
        auto r = suite_daha_relations(3, 3);
        auto r4 = suite_daha_relations(4, 3);
        r.insert(r.end(), r4.begin(), r4.end());
        return r;
    });
    // criteria without a stated runtime budget are exactness-only
    const double unbounded = std::numeric_limits<double>::infinity();
    run(5, "eigenvalue formula", unbounded, [] { return suite_eigenvalue(4, 4); });
    run(6, "hall-littlewood duality", 120, [] { return suite_hl_duality(6); });
    run(7, "A identification", unbounded, [] { return suite_A_macdonald(5); });
    run(8, "tail expansion", unbounded, [] { return suite_tail_expansion(3, 2, 3); });
    run(9, "convergence certificates", unbounded, [] { return suite_convergence(3, 2, 3); });
    run(10, "basis and spectrum", 600, [] { return suite_basis_rank(4, 3, 3, 1); });
    run(11, "recurrences", unbounded, [] { return suite_recurrences(3, 2); });
    run(12, "psi diagonality", unbounded, [] { return suite_psi(3, 2, 4); });

    if (failures == 0) {
        std::cout << "acceptance: all 12 criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria failed\n";
    return 1;
}
