// Compares the OpenMP restart loop against the serial reference on the
// same configs and checks they agree bit-for-bit.
#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gammalin/numsearch.hpp"

using Clock = std::chrono::steady_clock;

static double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both paths run serially\n");
#endif
    std::printf("%4s %4s %12s %12s %9s %6s\n", "n", "d", "serial[s]", "parallel[s]", "speedup",
                "match");
    struct Case {
        unsigned n, d;
    } cases[] = {{2, 2}, {3, 3}, {4, 4}, {5, 5}};
    for (const auto& c : cases) {
        gammalin::SearchConfig cfg;
        cfg.n = c.n;
        cfg.d = c.d;
        cfg.seed = 42;
        auto t0 = Clock::now();
        auto serial = gammalin::search_serial(cfg);
        auto t1 = Clock::now();
        auto parallel = gammalin::search(cfg);
        auto t2 = Clock::now();
        bool match = serial.best_residual == parallel.best_residual &&
                     serial.restart_index == parallel.restart_index;
        double ts = seconds(t0, t1), tp = seconds(t1, t2);
        std::printf("%4u %4u %12.3f %12.3f %8.2fx %6s\n", c.n, c.d, ts, tp, ts / tp,
                    match ? "yes" : "NO");
    }
    return 0;
}
