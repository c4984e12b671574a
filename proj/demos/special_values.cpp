// zeta_{2q,0} at even and negative integers, printed as rational * (2 pi)^k.

#include <cstdio>

#include "xiforge.hpp"

int main() {
    using namespace xiforge;
    for (unsigned q = 0; q <= 3; ++q) {
        for (unsigned m = 1; m <= 3; ++m) {
            const auto v = special_value_even(q, m);
            std::printf("zeta_{%u,0}(%u)  = %s (2pi)^%u = %.15g\n", 2 * q, 2 * m, v.rational.str().c_str(),
                        v.two_pi_power, v.value());
        }
        for (unsigned n = 0; n <= 3; ++n) {
            const auto v = special_value_neg(q, n);
            std::printf("zeta_{%u,0}(%d) = %s\n", 2 * q, -static_cast<int>(n), v.rational.str().c_str());
        }
    }
}
