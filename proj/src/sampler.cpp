#include "topogen/sampler.hpp"

#include <bit>
#include <stdexcept>

namespace topogen {

WeightedSampler::WeightedSampler(std::size_t n)
    : n_(n), raw_(n, 0.0), tree_(n + 1, 0.0) {}

WeightedSampler::WeightedSampler(std::span<const double> weights)
    : n_(weights.size()), raw_(weights.begin(), weights.end()), tree_(weights.size() + 1) {
    for (std::size_t i = 1; i <= n_; ++i) tree_[i] = raw_[i - 1];
    for (std::size_t i = 1; i <= n_; ++i) {
        std::size_t parent = i + (i & (~i + 1));
        if (parent <= n_) tree_[parent] += tree_[i];
    }
}

double WeightedSampler::total() const {
    double sum = 0.0;
    for (std::size_t i = n_; i > 0; i -= i & (~i + 1)) sum += tree_[i];
    return sum;
}

void WeightedSampler::set(std::size_t i, double w) {
    const double delta = w - raw_[i];
    raw_[i] = w;
    for (std::size_t j = i + 1; j <= n_; j += j & (~j + 1)) tree_[j] += delta;
}

std::size_t WeightedSampler::sample(double u) const {
    const double sum = total();
    if (!(sum > 0.0))
        throw std::logic_error("weighted sample with no positive weight left");
    double target = u * sum;
    std::size_t idx = 0;
    for (std::size_t step = std::bit_floor(n_); step > 0; step >>= 1) {
        std::size_t next = idx + step;
        if (next <= n_ && tree_[next] <= target) {
            idx = next;
            target -= tree_[next];
        }
    }
    // idx = number of leading entries whose cumulative weight is <= target,
    // so the hit is the 0-based entry idx. Rounding at the very top of the
    // wheel can push past the end or onto a zeroed entry; walk to the
    // nearest positive weight.
    if (idx >= n_) idx = n_ - 1;
    while (idx > 0 && raw_[idx] <= 0.0) --idx;
    while (idx + 1 < n_ && raw_[idx] <= 0.0) ++idx;
    if (raw_[idx] <= 0.0)
        throw std::logic_error("weighted sample found no positive weight");
    return idx;
}

std::vector<std::uint32_t> sample_distinct(std::span<const std::uint32_t> candidates,
                                           std::span<const double> weights,
                                           std::size_t count, Rng& rng) {
    if (candidates.size() != weights.size())
        throw std::invalid_argument("candidates and weights differ in length");
    if (count > candidates.size())
        throw std::invalid_argument("asked for " + std::to_string(count) + " draws from " +
                                    std::to_string(candidates.size()) + " candidates");
    for (double w : weights)
        if (!(w > 0.0)) throw std::invalid_argument("candidate weights must be positive");

    WeightedSampler sampler(weights);
    std::vector<std::uint32_t> picked;
    picked.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t idx = sampler.sample(uniform_unit(rng));
        picked.push_back(candidates[idx]);
        sampler.set(idx, 0.0);
    }
    return picked;
}

} // namespace topogen
