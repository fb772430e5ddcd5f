// Compares the serial and wavefront-parallel PDE solvers on a grid of sizes
// and verifies that they produce identical values.

#include <chrono>
#include <cstdio>
#include <vector>

#include "sigkern/experiments.hpp"
#include "sigkern/goursat.hpp"

using namespace sigkern;
using Clock = std::chrono::steady_clock;

static double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

int main() {
    const auto paths = sample_brownian(2, 12, 2, 42);
    std::printf("%10s %12s %12s %8s %10s\n", "refine", "serial[s]", "parallel[s]", "speedup",
                "max|diff|");
    for (int refine : {32, 64, 128, 256}) {
        const auto t0 = Clock::now();
        const auto a = solve_serial(paths[0], paths[1], Complex(1.0, 0.0), refine);
        const auto t1 = Clock::now();
        const auto b = solve(paths[0], paths[1], Complex(1.0, 0.0), refine);
        const auto t2 = Clock::now();
        double diff = 0;
        for (std::size_t i = 0; i < a.values.size(); ++i)
            diff = std::max(diff, std::abs(a.values[i] - b.values[i]));
        std::printf("%10d %12.4f %12.4f %8.2f %10.3e\n", refine, seconds(t0, t1),
                    seconds(t1, t2), seconds(t0, t1) / seconds(t1, t2), diff);
    }
    return 0;
}
