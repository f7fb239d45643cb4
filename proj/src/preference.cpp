#include "topogen/preference.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace topogen {

// Unused kernel parameters keep their conventional defaults so configs
// serialize with sensible values either way.
PreferenceScheme PreferenceScheme::linear() {
    return {PreferenceKind::linear, 1.15, 0.048};
}

PreferenceScheme PreferenceScheme::fixed_exponent(double alpha) {
    return {PreferenceKind::fixed_exponent, alpha, 0.048};
}

PreferenceScheme PreferenceScheme::positive_feedback(double delta) {
    return {PreferenceKind::positive_feedback, 1.15, delta};
}

void PreferenceScheme::validate() const {
    switch (kind) {
    case PreferenceKind::linear:
        return;
    case PreferenceKind::fixed_exponent:
        if (!(alpha > 1.0))
            throw std::invalid_argument("fixed-exponent kernel needs alpha > 1, got " +
                                        std::to_string(alpha));
        return;
    case PreferenceKind::positive_feedback:
        if (!(delta >= 0.0 && delta <= 1.0))
            throw std::invalid_argument("positive-feedback kernel needs delta in [0,1], got " +
                                        std::to_string(delta));
        return;
    }
    throw std::invalid_argument("unknown preference kind");
}

const char* to_string(PreferenceKind kind) {
    switch (kind) {
    case PreferenceKind::linear: return "linear";
    case PreferenceKind::fixed_exponent: return "fixed_exponent";
    case PreferenceKind::positive_feedback: return "positive_feedback";
    }
    return "?";
}

double preference_weight(std::int64_t k, const PreferenceScheme& scheme) {
    if (k <= 0)
        throw std::domain_error("preference weight asked for degree " + std::to_string(k) +
                                "; candidates always have degree >= 1");
    const double kd = static_cast<double>(k);
    switch (scheme.kind) {
    case PreferenceKind::linear:
        return kd;
    case PreferenceKind::fixed_exponent:
        return std::pow(kd, scheme.alpha);
    case PreferenceKind::positive_feedback:
        return std::pow(kd, 1.0 + scheme.delta * std::log10(kd));
    }
    throw std::domain_error("unknown preference kind");
}

PreferenceWeights::PreferenceWeights(PreferenceScheme scheme) : scheme_(scheme) {
    table_.reserve(64);
    table_.push_back(0.0); // degree 0 never queried
}

double PreferenceWeights::operator()(std::uint32_t k) {
    while (table_.size() <= k)
        table_.push_back(preference_weight(static_cast<std::int64_t>(table_.size()), scheme_));
    return table_[k];
}

} // namespace topogen
