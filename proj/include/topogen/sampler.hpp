#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "topogen/rng.hpp"

namespace topogen {

// Fenwick-indexed weight store: O(log n) roulette-wheel draws and
// single-entry updates. Entries with weight 0 are never drawn.
class WeightedSampler {
public:
    explicit WeightedSampler(std::size_t n);
    explicit WeightedSampler(std::span<const double> weights);

    std::size_t size() const { return n_; }
    double total() const;
    double get(std::size_t i) const { return raw_[i]; }
    void set(std::size_t i, double w);

    // Index whose cumulative weight bracket contains u * total(), u in [0,1).
    // Throws std::logic_error when no positive weight remains.
    std::size_t sample(double u) const;

private:
    std::size_t n_;
    std::vector<double> raw_;  // current weights
    std::vector<double> tree_; // 1-based Fenwick partial sums
};

// `count` distinct candidates drawn sequentially without replacement, each
// draw proportional to the weights still in play. Throws
// std::invalid_argument when count exceeds the candidates, the spans
// disagree in length, or any weight is non-positive.
std::vector<std::uint32_t> sample_distinct(std::span<const std::uint32_t> candidates,
                                           std::span<const double> weights,
                                           std::size_t count, Rng& rng);

} // namespace topogen
