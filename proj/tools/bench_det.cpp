// Benchmarks the exact-determinant kernels: serial Bareiss reference vs
// the OpenMP row-parallel variant, plus the real LU path, on cylindrical
// grid matrices of growing order.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gridmono/det.hpp"
#include "gridmono/grid.hpp"
#include "gridmono/kasteleyn.hpp"

using namespace gridmono;

namespace {

template <typename F>
double time_once(F&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

RatMatrix sample_matrix(int target) {
    // cylindrical [n, 2, 2] with n chosen to hit the target order
    int n = std::max(2, target / 4);
    GridSpec spec{{n, 2, 2}, Mode::Cylindrical, 1};
    WeightSpec w = WeightSpec::unit(3);
    w.x = 1;
    return build_K_from_graph(build_grid(spec), w).m;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> sizes{64, 128, 256};
    if (argc > 1) {
        sizes.clear();
        for (int i = 1; i < argc; ++i) sizes.push_back(std::stoi(argv[i]));
    }
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("%8s %14s %14s %10s %14s\n", "order", "serial [s]", "parallel [s]", "speedup",
                "real LU [s]");
    for (int target : sizes) {
        RatMatrix m = sample_matrix(target);
        Rational a, b;
        double ts = time_once([&] { a = det_exact_serial(m); });
        double tp = time_once([&] { b = det_exact_parallel(m); });
        double tr = time_once([&] { det_real(m); });
        if (a != b) {
            std::printf("order %d: serial and parallel determinants differ\n", m.order());
            return 1;
        }
        std::printf("%8d %14.4f %14.4f %9.2fx %14.4f\n", m.order(), ts, tp,
                    tp > 0 ? ts / tp : 0.0, tr);
    }
    return 0;
}
