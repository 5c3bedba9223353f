#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathwheel/detect.hpp"
#include "pathwheel/graph.hpp"

namespace pw::lemmalab {

// A fixed catalogue of structural statements about long paths and cycles,
// each encoded as a hypothesis predicate and a conclusion predicate over
// explicit instances. The statements are theorems, so corpus runs are
// expected to produce zero violations; the point of this module is that
// the encodings are executable and falsifiable.
//
// Statement catalogue (nu = order of the graph at hand):
//   L2.1  G 2-connected, min degree >= ceil(n/2)
//           => cycle of order >= min(nu, n)
//   L2.2  x marked; G connected, every v != x has d(v) >= n-1
//           => path of order >= n starting at x
//   L2.3  x, y marked; G+xy 2-connected, every v outside {x,y} has
//         d(v) >= n-1   => path of order >= n from x to y
//   L2.4  x, y marked; G+xy 2-connected, every v outside {x,y} has
//         d(v) >= ceil(n/2)   => path of order >= min(nu, n) from x
//   L2.5  G connected, min degree >= floor(n/2)
//           => path of order >= min(nu, n)
//   L2.6  x marked; G connected, every v != x has d_{G-x}(v) >= n-2
//           => path of order >= n from x
//   L2.7  x marked; G 2-connected, every v != x has d_{G-x}(v) >= floor(n/2)
//           => path of order >= min(nu, n) from x
//   (all L2 statements assume nu >= 3)
//   L3    G disconnected, every component of order <= floor(m/2), m <= nu
//           => complement contains C_m
//   L4.1  n <= nu <= floor(3n/2)-2, no P_n
//           => complement has a path of order >= 2nu+3-2n
//   L4.2  nu >= floor(3n/2)-1, no P_n
//           => complement has a path of order >= nu+1-floor(n/2)
//   L4.3  n >= 4 even, nu >= 3n/2-1, no C_n
//           => complement has a path of order >= nu+1-n/2
//   L5    disjoint G1, G2; complement of G1 has a path of order p;
//         3 <= m <= min(2 nu1, nu1+nu2, p+2 nu2-1)
//           => complement of G1+G2 contains C_m
//   L6    m >= 2n+1; G disconnected, no P_n, m <= nu; dropping any one
//         component leaves total order >= m+floor(n/2)-nu
//           => complement contains C_m
//   L7    X independent, |X| >= 3; every component of R = G-X joined to
//         at most one vertex of X; complement of R has a path of order
//         p >= 2; 3 <= m <= min(nu, p+2|X|-3)
//           => complement of G contains C_m
//   L8    X1, X2 independent, |X1| = |X2| >= 3, |X1 \ X2| = |X2 \ X1| >= 2,
//         X = X1 u X2 (possibly intersecting); every component of R = G-X
//         joined to at most one vertex of each X_i; complement of R has a
//         path of order p >= 2; 3 <= m <= min(nu, p+2|X|-5)
//           => complement of G contains C_m
//   L9    R an induced subgraph, every component of R of order >= 2;
//         X1, X2 as in L8 but inside G-R; for EVERY component H of R, at
//         least q vertices of G-R are in X or have no neighbor in H;
//         complement of R has a path of order p >= 2;
//         3 <= m <= min(ceil(3 nu(R)/2)+4, nu(R)+q-1, p+2q-5)
//           => complement of G contains C_m

enum class LemmaId {
    L2_1, L2_2, L2_3, L2_4, L2_5, L2_6, L2_7,
    L3,
    L4_1, L4_2, L4_3,
    L5, L6, L7, L8, L9,
};

inline constexpr LemmaId all_lemma_ids[] = {
    LemmaId::L2_1, LemmaId::L2_2, LemmaId::L2_3, LemmaId::L2_4,
    LemmaId::L2_5, LemmaId::L2_6, LemmaId::L2_7,
    LemmaId::L3, LemmaId::L4_1, LemmaId::L4_2, LemmaId::L4_3,
    LemmaId::L5, LemmaId::L6, LemmaId::L7, LemmaId::L8, LemmaId::L9,
};

std::string to_string(LemmaId id); // "L2.1", ..., "L9"
LemmaId lemma_id_from_string(std::string_view s);

// Ids L2.1..L4.3 take a single graph plus integer parameters (and marked
// vertices); L5 takes two graphs; L7..L9 take vertex sets. Fields not used
// by an id stay disengaged.
struct LemmaInstance {
    LemmaId id = LemmaId::L2_1;
    Graph g;
    std::optional<int> x;
    std::optional<int> y;
    std::optional<VertexSet> set_x;     // X  (L7)
    std::optional<VertexSet> set_x1;    // X1 (L8, L9)
    std::optional<VertexSet> set_x2;    // X2 (L8, L9)
    std::optional<Graph> g2;            // second graph (L5); g plays G1
    std::optional<VertexSet> region;    // vertices of R inside g (L9)
    long long n = 0;
    long long m = 0;
    long long p = 0;
    long long q = 0;
};

// evaluate() short-circuits: the conclusion is only computed (and only
// meaningful) when the hypothesis holds.
struct Verdict {
    bool hypothesis_holds = false;
    bool conclusion_holds = false;
};

bool check_hypothesis(const LemmaInstance& inst, const DetectorLimits& limits = {});
bool check_conclusion(const LemmaInstance& inst, const DetectorLimits& limits = {});
Verdict evaluate(const LemmaInstance& inst, const DetectorLimits& limits = {});

// Corpus descriptors. Exhaustive corpora (all labeled graphs up to
// max_order, all feasible parameters) exist for the single-graph ids
// L2.1..L4.3; the multi-part ids L5..L9 only support randomized corpora
// built by seeded rejection sampling. Randomized corpora are available
// for every id.
struct Corpus {
    enum class Kind { Exhaustive, Randomized };
    Kind kind = Kind::Exhaustive;
    int max_order = 7;            // exhaustive only
    std::uint64_t count = 1000;   // randomized only
    std::uint64_t seed = 1;       // randomized only

    static Corpus exhaustive(int max_order);
    static Corpus randomized(std::uint64_t count, std::uint64_t seed);
};

struct SuiteResult {
    LemmaId id = LemmaId::L2_1;
    Corpus corpus;
    std::uint64_t instances_checked = 0;  // instances evaluated (or cut short)
    std::uint64_t hypothesis_held = 0;
    std::uint64_t starved = 0;            // randomized: generator gave up
    std::uint64_t resource_errors = 0;    // never counted as violations
    std::vector<LemmaInstance> violations; // hypothesis true, conclusion false
};

// Parallel suite runner (threads = 0 means all available). Results are
// merged by generation index, so the report does not depend on the thread
// count. run_suite_reference is the plain serial loop over the same
// instances, kept as the comparison baseline.
SuiteResult run_suite(LemmaId id, const Corpus& corpus,
                      const DetectorLimits& limits = {}, int threads = 0);
SuiteResult run_suite_reference(LemmaId id, const Corpus& corpus,
                                const DetectorLimits& limits = {});

// One fused pass for several exhaustive suites: the graph stream and the
// per-graph structure facts are shared across ids, which is what makes
// order-7 exhaustion cheap. run_suite delegates here for exhaustive
// corpora. Ids must all be single-graph ids.
std::vector<SuiteResult> run_exhaustive_suites(const std::vector<LemmaId>& ids,
                                               int max_order,
                                               const DetectorLimits& limits = {},
                                               int threads = 0);

} // namespace pw::lemmalab
