// Zeros of P_q on the critical line, with the exhaustiveness check.

#include <cstdio>
#include <cstdlib>

#include "xiforge.hpp"

int main(int argc, char** argv) {
    using namespace xiforge;
    const unsigned q_max = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 12;
    for (unsigned q = 1; q <= q_max; ++q) {
        const auto report = verify_exhaustive(q);
        std::printf("q = %2u  %s  %u zeros, min gap %.3g\n", q, report.passed ? "complete  " : "INCOMPLETE",
                    report.count, report.min_gap);
        std::printf("   t =");
        for (const auto& z : report.zeros) std::printf(" %.6f", z.t);
        std::printf("\n");
    }
}
