// Compares the serial and OpenMP lattice-point counters on growing dilates.

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "polytrope/oracle.hpp"
#include "polytrope/tropical.hpp"

using namespace polytrope;

namespace {

double seconds(const std::chrono::steady_clock::time_point& t0) {
    auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration<double>(dt).count();
}

}  // namespace

int main(int argc, char** argv) {
    int max_k = argc > 1 ? std::atoi(argv[1]) : 24;
    // Kleene star of the hexagon example; dilates grow quadratically.
    WeightMatrix W(3, {0, 3, 2, 3, 0, 4, 5, 6, 0});
    std::cout << "threads available: " << omp_get_max_threads() << "\n";
    std::cout << "k\tcount\tserial(s)\tparallel(s)\n";
    for (int k = 4; k <= max_k; k += 4) {
        auto t0 = std::chrono::steady_clock::now();
        long long serial = count_lattice_points_serial(W, k);
        double ts = seconds(t0);
        t0 = std::chrono::steady_clock::now();
        long long parallel = count_lattice_points(W, k);
        double tp = seconds(t0);
        if (serial != parallel) {
            std::cerr << "mismatch at k=" << k << ": " << serial
                      << " != " << parallel << "\n";
            return 1;
        }
        std::cout << k << "\t" << serial << "\t" << ts << "\t" << tp << "\n";
    }
    return 0;
}
