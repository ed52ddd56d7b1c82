#pragma once

// Self-check suite behind `wedgese verify`: mathematical identities, limit
// behaviors, and (at the full level) the brute-force mode-sum comparison.
// Each check reports its worst residual against a pinned bound.

#include <string>
#include <vector>

namespace wedgese::verify {

enum class Level { Fast, Full };

struct CheckResult {
    std::string name;
    double residual;   // worst value seen across the check's sweep
    double bound;      // pass iff residual <= bound
    bool pass;
    std::string note;  // failure detail (e.g. non-convergence message)
};

struct Report {
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

// Fast: identity and limit checks, a few seconds.  Full: adds the
// mode-sum equivalence grid (minutes).  oracle_nodes feeds the mode-sum
// quadrature (minimum 16, default 400).
Report run_verify(Level level, int oracle_nodes = 400);

}  // namespace wedgese::verify
