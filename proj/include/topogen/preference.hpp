#pragma once

#include <cstdint>
#include <vector>

namespace topogen {

enum class PreferenceKind {
    linear,            // weight k
    fixed_exponent,    // weight k^alpha
    positive_feedback, // weight k^(1 + delta*log10 k)
};

// Attachment kernel. Weights are unnormalized; normalization happens in the
// sampler as it divides by the running total.
struct PreferenceScheme {
    PreferenceKind kind = PreferenceKind::linear;
    double alpha = 1.15;  // fixed_exponent only
    double delta = 0.048; // positive_feedback only

    static PreferenceScheme linear();
    static PreferenceScheme fixed_exponent(double alpha);
    static PreferenceScheme positive_feedback(double delta);

    // fixed_exponent requires alpha > 1, positive_feedback requires
    // delta in [0, 1]; throws std::invalid_argument otherwise.
    void validate() const;
};

const char* to_string(PreferenceKind kind);

// Kernel value for one degree. Candidates always have degree >= 1 (every
// node attaches at birth); k <= 0 throws std::domain_error.
double preference_weight(std::int64_t k, const PreferenceScheme& scheme);

// Degrees are small dense integers, so kernel values are evaluated once per
// distinct degree and cached.
class PreferenceWeights {
public:
    explicit PreferenceWeights(PreferenceScheme scheme);
    double operator()(std::uint32_t k);

private:
    PreferenceScheme scheme_;
    std::vector<double> table_; // index = degree, 0 slot unused
};

} // namespace topogen
