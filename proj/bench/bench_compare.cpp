// Compares the parallel kernels against their serial reference
// implementations on fixed workloads and reports wall time plus whether
// the two routes produced identical results. Single-core hosts will show
// speedups near 1; the equality column is the part that must never
// change.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pathwheel/formula.hpp"
#include "pathwheel/lemmalab.hpp"
#include "pathwheel/report_json.hpp"
#include "pathwheel/search.hpp"

namespace {

using namespace pw;

double time_ms(const std::function<void()>& work) {
    const auto start = std::chrono::steady_clock::now();
    work();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-44s %10.1f %10.1f %7.2fx   %s\n", name.c_str(), serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, equal ? "identical" : "DIFFER");
}

void bench_exhaustive_suite(lemmalab::LemmaId id, int max_order) {
    const lemmalab::Corpus corpus = lemmalab::Corpus::exhaustive(max_order);
    lemmalab::SuiteResult serial_result, parallel_result;
    const double serial_ms =
        time_ms([&] { serial_result = lemmalab::run_suite_reference(id, corpus); });
    const double parallel_ms =
        time_ms([&] { parallel_result = lemmalab::run_suite(id, corpus, {}, 0); });
    report("lemma " + lemmalab::to_string(id) + " exhaustive(" + std::to_string(max_order) + ")",
           serial_ms, parallel_ms, to_json(serial_result) == to_json(parallel_result));
}

void bench_randomized_suite(lemmalab::LemmaId id, std::uint64_t count) {
    const lemmalab::Corpus corpus = lemmalab::Corpus::randomized(count, 11);
    lemmalab::SuiteResult serial_result, parallel_result;
    const double serial_ms =
        time_ms([&] { serial_result = lemmalab::run_suite_reference(id, corpus); });
    const double parallel_ms =
        time_ms([&] { parallel_result = lemmalab::run_suite(id, corpus, {}, 0); });
    report("lemma " + lemmalab::to_string(id) + " randomized(" + std::to_string(count) + ")",
           serial_ms, parallel_ms, to_json(serial_result) == to_json(parallel_result));
}

void bench_upper_bound(int n, int m, int t) {
    search::SearchLimits serial_limits;
    serial_limits.threads = 1;
    search::SearchLimits parallel_limits;
    parallel_limits.threads = 0;
    search::SearchReport serial_result, parallel_result;
    const double serial_ms =
        time_ms([&] { serial_result = search::verify_upper_bound(n, m, t, serial_limits); });
    const double parallel_ms =
        time_ms([&] { parallel_result = search::verify_upper_bound(n, m, t, parallel_limits); });
    report("verify_upper_bound(" + std::to_string(n) + "," + std::to_string(m) + "," +
               std::to_string(t) + ")",
           serial_ms, parallel_ms, to_json(serial_result) == to_json(parallel_result));
}

void bench_formula_sweep() {
    // The formula layer is serial by design; this row is a throughput
    // baseline rather than a comparison.
    long long sink = 0;
    const double ms = time_ms([&] {
        for (long long n = 2; n <= 50; ++n)
            for (long long m = 3; m <= 400; ++m) sink += formula::ramsey_path_wheel(n, m).value;
    });
    std::printf("%-44s %10.1f %10s %8s   checksum %lld\n", "formula sweep n<=50 m<=400", ms, "-", "-",
                sink);
}

} // namespace

int main() {
    std::printf("%-44s %10s %10s %8s   %s\n", "workload", "serial ms", "parallel", "speedup",
                "results");
    bench_exhaustive_suite(lemmalab::LemmaId::L2_5, 6);
    bench_exhaustive_suite(lemmalab::LemmaId::L2_1, 6);
    bench_exhaustive_suite(lemmalab::LemmaId::L3, 6);
    bench_randomized_suite(lemmalab::LemmaId::L7, 400);
    bench_randomized_suite(lemmalab::LemmaId::L9, 400);
    bench_upper_bound(4, 9, 11);
    bench_upper_bound(4, 10, 13);
    bench_formula_sweep();
    return 0;
}
