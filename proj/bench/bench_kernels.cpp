// Serial reference vs OpenMP timings for the data-parallel kernels.
//
//   ndbound_bench [max_n] [reps]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include <omp.h>

#include "ndbound/averaging.hpp"
#include "ndbound/exact_expectation.hpp"
#include "ndbound/matrix.hpp"
#include "ndbound/simulator.hpp"
#include "ndbound/verify.hpp"

using namespace ndbound;

namespace {

template <class F>
double seconds(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <class F>
void compare(const char* name, F&& run) {
    double serial_value = 0.0;
    double parallel_value = 0.0;
    const double ts = seconds([&] { serial_value = run(Exec::Serial); });
    const double tp = seconds([&] { parallel_value = run(Exec::Parallel); });
    std::printf("%-34s serial %9.4f s  parallel %9.4f s  speedup %5.2fx  %s\n", name, ts, tp, ts / tp,
                serial_value == parallel_value ? "identical" : "DIFFERENT");
}

}  // namespace

int main(int argc, char** argv) {
    const std::size_t max_n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 22;
    const std::uint64_t reps = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 1000000;
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());

    for (std::size_t n = 16; n <= max_n; n += 2) {
        std::vector<double> values(n);
        for (std::size_t i = 0; i < n; ++i) values[i] = 0.05 + 0.9 * static_cast<double>(i) / n;
        const auto p = ProbabilityVector::validate(values);
        char label[64];
        std::snprintf(label, sizeof label, "inclusion-exclusion n=%zu", n);
        compare(label, [&](Exec e) { return expected_discovery_time(p, 30, e).value; });
        std::snprintf(label, sizeof label, "slotted inclusion-exclusion n=%zu", n);
        compare(label, [&](Exec e) { return slotted_expected_time(p, 30, e).value; });
    }

    const auto p = ProbabilityVector::validate({0.2, 0.5, 0.3, 0.7, 0.1, 0.9, 0.4, 0.6});
    compare("simulate exponential n=8", [&](Exec e) {
        return simulate_discovery(p, TimeModel::ContinuousExponential, reps, 42, e).mean;
    });
    compare("simulate slotted n=8", [&](Exec e) {
        return simulate_discovery(p, TimeModel::SlottedGeometric, reps, 42, e).mean;
    });

    const Matrix w = build_sweep(400).w.matrix();
    compare("W^8 product n=400", [&](Exec e) { return power(w, 8, e)(0, 0); });

    VerifyOptions options;
    options.instances = 200;
    compare("verification sweep 200 instances", [&](Exec e) {
        double sum = 0.0;
        for (const auto& r : run_verification(options, e)) sum += r.worst_margin;
        return sum;
    });
    return 0;
}
