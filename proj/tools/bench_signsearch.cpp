// Benchmark: existential sign search with the packed kernel versus the
// per-assignment reference path, on random complete factor families.
// Verifies that both produce identical verdicts while timing them.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "amphicheck/obstruction.hpp"
#include "test_support.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

using namespace amphicheck;
using Clock = std::chrono::steady_clock;

namespace {
double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}
}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Times the packed sign-search kernel against the serial reference."};
    int r = 3;
    int count = 25;
    std::uint64_t seed = 12345;
    int max_exp = 3;
    app.add_option("-r,--components", r, "component count (2..4 searched exhaustively)")
        ->check(CLI::Range(2, 4));
    app.add_option("-n,--families", count, "number of random families");
    app.add_option("-s,--seed", seed, "RNG seed");
    app.add_option("--max-exp", max_exp, "exponent range of the random factors");
    CLI11_PARSE(app, argc, argv);

    amphitest::Rng rng(seed);
    std::vector<SymmetricFactorFamily> families;
    families.reserve(count);
    for (int i = 0; i < count; ++i) families.push_back(amphitest::random_family(rng, r, max_exp));

    ParitySumOptions packed_options;
    packed_options.max_exists_r = r;
    ParitySumOptions serial_options = packed_options;
    serial_options.force_serial = true;

    double packed_ms = 0, serial_ms = 0;
    int passes = 0, fails = 0, mismatches = 0;
    for (const SymmetricFactorFamily& fam : families) {
        auto t0 = Clock::now();
        const Verdict fast = check_parity_sums(fam, SignMode::exists_mode(), packed_options);
        packed_ms += ms_since(t0);

        t0 = Clock::now();
        const Verdict slow = check_parity_sums(fam, SignMode::exists_mode(), serial_options);
        serial_ms += ms_since(t0);

        if (fast == slow)
            (fast.status == Status::PASS ? passes : fails)++;
        else
            ++mismatches;
    }

#if defined(_OPENMP)
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif

    std::printf("families: %d  components: %d  assignments each: 2^%zu\n", count, r,
                factor_subsets(r).size());
    std::printf("threads: %d\n", threads);
    std::printf("packed kernel:     %9.2f ms total  (%.3f ms/family)\n", packed_ms,
                packed_ms / count);
    std::printf("serial reference:  %9.2f ms total  (%.3f ms/family)\n", serial_ms,
                serial_ms / count);
    if (packed_ms > 0)
        std::printf("speedup: %.2fx\n", serial_ms / packed_ms);
    std::printf("verdicts: %d pass, %d fail, %d mismatches\n", passes, fails, mismatches);
    if (mismatches != 0) {
        std::printf("ERROR: kernels disagree\n");
        return 1;
    }
    return 0;
}
