#pragma once

#include <string>
#include <vector>

namespace elasym::verify {

struct Check {
    std::string name;
    double residual = 0;
    double threshold = 0;
    bool pass = false;
};

struct Suite {
    std::string name;
    std::vector<Check> checks;
    bool pass() const;
};

// Property suites behind `verify --suite ...`. Counts are sized for an
// interactive run; the acceptance binary re-runs the heavy ones at full
// scale.
Suite core_suite();
Suite covariants_suite();
Suite bridge_suite();

// which: "core", "covariants", "bridge" or "all"; throws on anything else.
std::vector<Suite> run_suites(const std::string& which);

} // namespace elasym::verify
