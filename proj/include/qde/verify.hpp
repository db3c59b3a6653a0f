#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qde/analytic.hpp"

namespace qde {

enum class Suite { exact, series, analytic, all };
Suite parse_suite(const std::string& s); // throws std::invalid_argument

struct CriterionResult {
    int id = 0;
    std::string suite;
    std::string title;
    bool ok = true;
    double seconds = 0;
    double budget = 0;  // seconds
    std::string detail; // human-readable summary or first failure
    std::string note;   // informational, not part of the verdict
    std::vector<std::pair<std::string, double>> errors; // named maxima
};

std::vector<int> criteria_of(Suite suite); // ids 1..11
// Each criterion covers energies up to min(its own range, n_max).
CriterionResult run_criterion(int id, int n_max, const NumericConfig& cfg);

} // namespace qde
