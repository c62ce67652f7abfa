// Compares the OpenMP suite runner against the serial reference path and
// checks that both produce identical reports.
#include "pact/parallel.hpp"
#include "pact/suites.hpp"

#include <chrono>
#include <cstdio>
#include <string>

using Clock = std::chrono::steady_clock;

namespace {

double run(pact::SuiteConfig cfg, bool parallel, std::string* digest) {
    cfg.parallel = parallel;
    auto t0 = Clock::now();
    auto reports = pact::run_property_suites(cfg, {"characterization"});
    auto t1 = Clock::now();
    *digest = reports.front().text();
    return std::chrono::duration<double>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    pact::SuiteConfig cfg;
    cfg.samples = argc > 1 ? std::atoi(argv[1]) : 40;
#ifdef _OPENMP
    std::printf("openmp: enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("openmp: not compiled in; both runs are serial\n");
#endif
    std::string serial_digest, parallel_digest;
    double ts = run(cfg, false, &serial_digest);
    double tp = run(cfg, true, &parallel_digest);
    std::printf("serial reference: %.3f s for %d samples\n", ts, cfg.samples);
    std::printf("parallel kernels: %.3f s for %d samples\n", tp, cfg.samples);
    std::printf("speedup: %.2fx\n", ts / (tp > 0 ? tp : 1e-9));
    if (serial_digest != parallel_digest) {
        std::printf("MISMATCH: serial and parallel reports differ\n");
        return 1;
    }
    std::printf("reports identical\n");
    return 0;
}
