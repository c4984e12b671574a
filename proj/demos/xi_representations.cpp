// Evaluates xi at a few points through the split integrals and compares
// every representation with the closed form.

#include <cstdio>
#include <numbers>

#include "xiforge.hpp"

int main() {
    using namespace xiforge;
    const std::vector<ComplexValue> points = {{2.0, 0.0}, {0.5, 10.0}, {3.0, 1.5}};
    const std::vector<ComplexValue> splits = {1.0, 2.0, std::polar(1.0, std::numbers::pi / 6)};
    for (const ComplexValue s : points) {
        const auto report = representation_report(s, {0, 1, 2}, splits);
        std::printf("s = %g%+gi  xi = %.15g%+.15gi\n", s.real(), s.imag(), report.xi.real(), report.xi.imag());
        for (const auto& cell : report.cells) {
            if (!cell.result) {
                std::printf("  %-9s j=%u  error: %s\n", cell.label.c_str(), cell.j, cell.error.c_str());
                continue;
            }
            std::printf("  %-9s j=%u b=%.3f%+.3fi  deviation %.2e\n", cell.label.c_str(), cell.j, cell.b.real(),
                        cell.b.imag(), cell.deviation);
        }
        std::printf("  max pairwise deviation %.2e\n\n", report.max_pairwise_deviation);
    }
}
