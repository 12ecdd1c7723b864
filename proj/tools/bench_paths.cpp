// Throughput comparison of the OpenMP-parallel estimator against the serial
// reference on a medium survival workload, plus a bit-equality check.

#include <chrono>
#include <cstdio>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stablefluct/montecarlo.hpp"

using namespace stablefluct;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t n = 4000;
    int workers = 8;
    if (argc > 1) n = static_cast<std::size_t>(std::atoll(argv[1]));
    if (argc > 2) workers = std::atoi(argv[2]);

    mc::ExperimentConfig cfg;
    cfg.kind = mc::ExperimentKind::survival;
    cfg.params = StableParams{2, 1.0};
    cfg.x0 = Point{2.0, 0.0};
    cfg.r = 1.0;
    cfg.dt = 1e-3;
    const mc::SeedSpec seeds{42, 0};

#ifdef _OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif
    std::printf("survival benchmark: n=%zu workers=%d threads=%d dt=%g\n", n, workers, threads,
                cfg.dt);

    auto t0 = std::chrono::steady_clock::now();
    const mc::ExperimentResult serial = mc::estimate_serial(cfg, n, seeds, workers);
    const double t_serial = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const mc::ExperimentResult parallel = mc::estimate(cfg, n, seeds, workers);
    const double t_parallel = seconds_since(t0);

    std::printf("serial:   %8.3f s  estimate=%.9g stderr=%.3g\n", t_serial, serial.estimate.mean,
                serial.estimate.stderr_);
    std::printf("parallel: %8.3f s  estimate=%.9g stderr=%.3g\n", t_parallel,
                parallel.estimate.mean, parallel.estimate.stderr_);
    std::printf("speedup:  %8.2fx\n", t_serial / t_parallel);

    const bool identical =
        std::memcmp(&serial.estimate.mean, &parallel.estimate.mean, sizeof(double)) == 0 &&
        std::memcmp(&serial.estimate.stderr_, &parallel.estimate.stderr_, sizeof(double)) == 0 &&
        serial.estimate.n == parallel.estimate.n;
    std::printf("bit-identical results: %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
