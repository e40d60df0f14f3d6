// Timing comparison of the OpenMP lattice kernels against the serial
// reference implementations. Results are verified equal before printing.

#include "dtj/cjp.hpp"
#include "dtj/knots.hpp"
#include "dtj/takata.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

namespace {

using dtj::LaurentPoly;

double time_once(const std::function<LaurentPoly()>& fn, LaurentPoly& out) {
    const auto t0 = std::chrono::steady_clock::now();
    out = fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string& name, const std::function<LaurentPoly()>& serial,
         const std::function<LaurentPoly()>& parallel) {
    LaurentPoly a, b;
    const double ts = time_once(serial, a);
    const double tp = time_once(parallel, b);
    const bool equal = a == b;
    std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %5.2fx   %s\n", name.c_str(),
                ts, tp, tp > 0 ? ts / tp : 0.0, equal ? "equal" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel path falls back to serial\n");
#endif
    using namespace dtj;
    row("thm1 m=2 p=2 N=4", [] { return jones_thm1_serial(2, 2, 4); },
        [] { return jones_thm1(2, 2, 4); });
    row("thm1 m=2 p=2 N=6", [] { return jones_thm1_serial(2, 2, 6); },
        [] { return jones_thm1(2, 2, 6); });
    row("thm2 m=2 p=2 N=6", [] { return jones_thm2_serial(2, 2, 6); },
        [] { return jones_thm2(2, 2, 6); });
    row("takata l=21 t=17 N=6",
        [] { return takata_colored_jones_serial(TwoBridge(21, 17), 6); },
        [] { return takata_colored_jones(TwoBridge(21, 17), 6); });
    row("takata l=19 t=15 N=7",
        [] { return takata_colored_jones_serial(TwoBridge(19, 15), 7); },
        [] { return takata_colored_jones(TwoBridge(19, 15), 7); });
    row("thm2 m=2 p=2 N=8", [] { return jones_thm2_serial(2, 2, 8); },
        [] { return jones_thm2(2, 2, 8); });
    row("takata l=21 t=17 N=8",
        [] { return takata_colored_jones_serial(TwoBridge(21, 17), 8); },
        [] { return takata_colored_jones(TwoBridge(21, 17), 8); });
    return 0;
}
