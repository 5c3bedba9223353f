#pragma once

#include <vector>

#include "pathwheel/detect.hpp"
#include "pathwheel/graph.hpp"

namespace pw {

// Lower-bound witness: a disjoint union of cliques on t-1 vertices whose
// part sizes lie in [max(t-m,1), n-1]. Such a graph has no path on n
// vertices and its complement has no wheel with rim m.
struct CliquePartition {
    long long n = 0;
    long long m = 0;
    long long t = 0;              // the Ramsey value the witness certifies
    std::vector<int> parts;       // nonincreasing, sums to t-1
};

// Balanced partition with k = ceil((t-1)/(n-1)) parts. The balanced part
// sizes provably land inside the admissible window; if they ever did not,
// that would contradict the min-characterization, so it is reported as a
// logic error rather than handled.
CliquePartition clique_partition(long long n, long long m); // n >= 2, m >= 2n+1

Graph build_witness(const CliquePartition& p);

struct WitnessReport {
    bool path_free = false;
    bool wheel_free = false;
    bool cross_checked = false; // generic detectors also ran (small orders)
};

// Reports whether the witness graph avoids P_n and its complement avoids
// W_m. Malformed part lists are not rejected: the report simply says what
// the graph contains. The structural wheel test always runs; at small
// order the generic detectors run too and must agree (disagreement is a
// hard logic error).
WitnessReport verify_witness(long long n, long long m, const CliquePartition& p,
                             const DetectorLimits& limits = {});

} // namespace pw
