// Aggregated invariant suite: runs every cross-module identity over
// configurable ranges and reports pass/fail with counters.
#pragma once

#include "pfh/report.hpp"

namespace pfh {

struct SelfCheckRanges {
    int max_degree = 8;   // degree bound Q for index/energy sweeps
    int max_q = 12;       // slope denominator bound for the pair oracle
    int max_genus = 8;    // genus bound for the homology sweep
    int geometry_max_q = 8;
};

Report run_all(const SelfCheckRanges& ranges = {});

}  // namespace pfh
