// Acceptance runner: prints one pass/fail line per check and exits nonzero if
// any check of the selected criterion fails.

#include <heapknot/acceptance.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    using namespace heapknot::acceptance;
    std::vector<CheckResult> results;
    if (argc > 1) {
        results = run_criterion(std::atoi(argv[1]));
    } else {
        results = run_all();
    }
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name;
        if (!r.detail.empty()) std::cout << " -- " << r.detail;
        std::cout << "\n";
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
