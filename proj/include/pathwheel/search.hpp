#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pathwheel/detect.hpp"
#include "pathwheel/graph.hpp"
#include "pathwheel/witness.hpp"

namespace pw::search {

// Desk-scale exhaustive verification: every graph on t vertices with no
// path of order n is enumerated up to isomorphism (as a multiset of
// connected pieces) and its complement is checked for a wheel with rim m.

struct SearchLimits {
    DetectorLimits detector;
    std::uint64_t catalogue_budget = 2'000'000; // max graphs per enumeration
    int threads = 0;                            // 0 = all available
};

// One representative per isomorphism class of connected graphs with no
// path of order n and order <= max_order. Deduplication is by minimum
// adjacency code, restricted to order <= 10; beyond that only the closed
// catalogues for n <= 4 (stars and the sporadic small graphs) are known
// here, and anything else raises ResourceLimitError.
std::vector<Graph> enum_connected_path_free(int n, int max_order,
                                            const SearchLimits& limits = {});

// One representative per isomorphism class of graphs on exactly t
// vertices with no path of order n: multisets of connected pieces drawn
// from the catalogue above. Pieces are emitted in a fixed deterministic
// order; fn's second argument is the generation index.
void for_each_path_free(int n, int t, const SearchLimits& limits,
                        const std::function<void(const Graph&, std::uint64_t)>& fn);
std::vector<Graph> enum_path_free(int n, int t, const SearchLimits& limits = {});

struct SearchReport {
    int n = 0, m = 0, t = 0;
    bool verified = false;
    std::uint64_t graphs_enumerated = 0;
    std::optional<Graph> counterexample; // least generation index if any
    std::chrono::milliseconds elapsed{0};
};

// verified = true iff every enumerated graph has the wheel in its
// complement. The whole catalogue is always scanned, so the report is
// identical across runs and thread counts (the counterexample, when one
// exists, is the one of least generation index).
SearchReport verify_upper_bound(int n, int m, int t, const SearchLimits& limits = {});

struct ConfirmReport {
    int n = 0, m = 0;
    long long ramsey_value = 0;
    bool upper_verified = false;       // no counterexample on R vertices
    CliquePartition witness;           // the R-1 vertex lower-bound graph
    WitnessReport witness_report;      // must come back {true, true}
    std::uint64_t graphs_enumerated = 0;
};

// Pins R(P_n, W_m) at desk scale: formula value, exhaustive upper bound
// at order R, and the witness re-verified at order R-1.
ConfirmReport confirm_ramsey(int n, int m, const SearchLimits& limits = {});

} // namespace pw::search
