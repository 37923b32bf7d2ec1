#include "mvfcm/stationarity.hpp"

#include <cmath>

#include "mvfcm/errors.hpp"

namespace mvfcm {

std::vector<SimplexBlock> simplex_blocks(WeightBlock block, std::span<const std::size_t> sizes) {
    std::vector<SimplexBlock> blocks;
    switch (block) {
        case WeightBlock::memberships:
            if (sizes.size() != 2) throw ValidationError("membership blocks need sizes {n, c}");
            for (std::size_t i = 0; i < sizes[0]; ++i) blocks.push_back({i * sizes[1], sizes[1]});
            break;
        case WeightBlock::view_weights:
            if (sizes.size() != 1) throw ValidationError("view weight block needs sizes {s}");
            blocks.push_back({0, sizes[0]});
            break;
        case WeightBlock::feature_weights: {
            std::size_t offset = 0;
            for (auto d : sizes) {
                blocks.push_back({offset, d});
                offset += d;
            }
            break;
        }
    }
    return blocks;
}

StationarityReport check_stationarity(const std::function<double(std::span<const double>)>& objective,
                                      std::span<const double> point,
                                      std::span<const SimplexBlock> blocks, double tolerance,
                                      double step) {
    std::vector<double> probe(point.begin(), point.end());
    const auto evaluate = [&] {
        const double v = objective(probe);
        if (!std::isfinite(v)) throw NumericalError("objective is non-finite at a probe point");
        return v;
    };

    StationarityReport report;
    for (const auto& block : blocks) {
        if (block.offset + block.length > point.size()) {
            throw ValidationError("simplex block exceeds the parameter vector");
        }
        for (std::size_t a = 0; a < block.length; ++a) {
            for (std::size_t b = a + 1; b < block.length; ++b) {
                const std::size_t ia = block.offset + a;
                const std::size_t ib = block.offset + b;
                probe[ia] += step;
                probe[ib] -= step;
                const double forward = evaluate();
                probe[ia] -= 2.0 * step;
                probe[ib] += 2.0 * step;
                const double backward = evaluate();
                probe[ia] = point[ia];
                probe[ib] = point[ib];
                report.max_abs_derivative =
                    std::max(report.max_abs_derivative, std::abs(forward - backward) / (2.0 * step));
            }
        }
    }
    report.stationary = report.max_abs_derivative <= tolerance;
    return report;
}

}  // namespace mvfcm
