#include <cstdio>

#include "qde/verify.hpp"

using namespace qde;

int main() {
    NumericConfig cfg; // 256 bits, series order 30
    int failed = 0;
    for (int id : criteria_of(Suite::all)) {
        CriterionResult r = run_criterion(id, 6, cfg);
        if (!r.ok) ++failed;
        std::printf("criterion %d: %s (%.2f s) %s: %s", id, r.ok ? "PASS" : "FAIL", r.seconds, r.title.c_str(),
                    r.detail.c_str());
        for (const auto& [name, value] : r.errors) std::printf("; %s %.2e", name.c_str(), value);
        std::printf("\n");
        if (!r.note.empty()) std::printf("  note: %s\n", r.note.c_str());
        std::fflush(stdout);
    }
    std::printf("%s: %d of 11 criteria failed\n", failed ? "FAIL" : "PASS", failed);
    return failed ? 1 : 0;
}
