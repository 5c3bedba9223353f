#include "pathwheel/witness.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pathwheel/formula.hpp"

namespace pw {

CliquePartition clique_partition(long long n, long long m) {
    if (n < 2) throw std::invalid_argument("clique_partition: n must be at least 2");
    if (m < 2 * n + 1) throw std::invalid_argument("clique_partition: m must be at least 2n+1");
    CliquePartition p;
    p.n = n;
    p.m = m;
    p.t = formula::ramsey_path_wheel(n, m).value;

    // k parts of nearly equal size; k = ceil((t-1)/(n-1)) is the fewest
    // parts with every part <= n-1, and balancing keeps the smallest part
    // at floor((t-1)/k) >= t-m because t-1 is an interval sum from
    // [t-m, n-1]. Falling outside the window would contradict the
    // min-characterization, hence logic_error below, not invalid_argument.
    long long total = p.t - 1;
    long long k = (total + n - 2) / (n - 1);
    long long base = total / k;
    long long extra = total % k; // this many parts get base+1
    for (long long i = 0; i < k; ++i)
        p.parts.push_back(static_cast<int>(i < extra ? base + 1 : base));

    long long window_lo = std::max<long long>(p.t - m, 1);
    for (int part : p.parts)
        if (part < window_lo || part > n - 1)
            throw std::logic_error("clique_partition: balanced part " + std::to_string(part) +
                                   " escaped the window [" + std::to_string(window_lo) + "," +
                                   std::to_string(n - 1) + "] for n=" + std::to_string(n) +
                                   " m=" + std::to_string(m));
    return p;
}

Graph build_witness(const CliquePartition& p) {
    std::vector<int> parts(p.parts.begin(), p.parts.end());
    return clique_union(parts);
}

WitnessReport verify_witness(long long n, long long m, const CliquePartition& p,
                             const DetectorLimits& limits) {
    if (n < 1 || m < 3) throw std::invalid_argument("verify_witness: need n >= 1, m >= 3");
    for (int part : p.parts)
        if (part < 1) throw std::invalid_argument("verify_witness: parts must be positive");

    WitnessReport report;

    // Path check on the explicit graph, component by component. Components
    // are cliques, so this is the honest detector run, not a shortcut.
    Graph w = build_witness(p);
    report.path_free = !has_path(w, static_cast<int>(n), limits);

    // Wheel check via the multipartite structure of the complement; exact
    // at any order.
    report.wheel_free = !cliques_complement_has_wheel(p.parts, static_cast<int>(m));

    // The components are cliques, so the longest path is just the largest
    // part; the DP above must agree with that at every order.
    bool structural_path_free =
        p.parts.empty() || *std::max_element(p.parts.begin(), p.parts.end()) < n;
    if (structural_path_free != report.path_free)
        throw std::logic_error("verify_witness: clique-size and detector path checks disagree for n=" +
                               std::to_string(n) + " m=" + std::to_string(m));

    // At small order run the generic wheel detector on the complement too;
    // the two routes must agree or one of them is broken.
    if (w.order() <= 14) {
        report.cross_checked = true;
        bool generic_wheel_free = !has_wheel(complement(w), static_cast<int>(m), limits);
        if (generic_wheel_free != report.wheel_free)
            throw std::logic_error("verify_witness: structural and generic wheel checks disagree for n=" +
                                   std::to_string(n) + " m=" + std::to_string(m));
    }
    return report;
}

} // namespace pw
