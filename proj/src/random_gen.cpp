#include "credence/random_gen.hpp"

#include "credence/errors.hpp"

#include <algorithm>
#include <set>

namespace credence {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw ValidationError("uniform_below needs bound > 0");
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % bound;
}

Frame random_frame(std::mt19937_64& rng, int max_size) {
    const int n = 1 + static_cast<int>(uniform_below(rng, max_size));
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
    return Frame(std::move(labels));
}

MassFunction random_mass(std::mt19937_64& rng, const Frame& frame,
                         int max_focal, int weight_grid) {
    const std::uint32_t nonempty = (std::uint32_t{1} << frame.size()) - 1;
    const int cap = std::min<std::uint32_t>(nonempty, max_focal);
    const int k = 1 + static_cast<int>(uniform_below(rng, cap));

    std::set<std::uint32_t> picked;
    while (static_cast<int>(picked.size()) < k)
        picked.insert(1 + static_cast<std::uint32_t>(
                              uniform_below(rng, nonempty)));

    std::vector<Rational> weights;
    Rational total = 0;
    for (int i = 0; i < k; ++i) {
        weights.emplace_back(1 + uniform_below(rng, weight_grid));
        total += weights.back();
    }

    std::map<SubsetMask, Rational> assignments;
    int i = 0;
    for (std::uint32_t bits : picked)
        assignments[SubsetMask::of_bits(frame.size(), bits)] =
            weights[i++] / total;
    return {frame, std::move(assignments), WorldMode::Closed};
}

SubsetMask random_subset(std::mt19937_64& rng, const Frame& frame) {
    return SubsetMask::of_bits(
        frame.size(), static_cast<std::uint32_t>(uniform_below(
                          rng, std::uint64_t{1} << frame.size())));
}

SubsetMask random_nonempty_subset(std::mt19937_64& rng, const Frame& frame) {
    return SubsetMask::of_bits(
        frame.size(),
        1 + static_cast<std::uint32_t>(uniform_below(
                rng, (std::uint64_t{1} << frame.size()) - 1)));
}

MultivaluedSource random_source(std::mt19937_64& rng, int max_sources,
                                int max_frame_size) {
    const Frame target = random_frame(rng, max_frame_size);
    const int k = 1 + static_cast<int>(uniform_below(rng, max_sources));

    std::vector<std::string> labels;
    std::vector<Rational> weights;
    std::vector<SubsetMask> images;
    Rational total = 0;
    for (int i = 0; i < k; ++i) {
        labels.push_back("x" + std::to_string(i + 1));
        weights.emplace_back(1 + uniform_below(rng, 16));
        total += weights.back();
        images.push_back(random_subset(rng, target));
    }
    for (auto& w : weights) w /= total;
    return {std::move(labels), std::move(weights), target, std::move(images)};
}

} // namespace credence
