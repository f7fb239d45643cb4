#include "topogen/series.hpp"

#include <algorithm>
#include <map>

namespace topogen {

const char* to_string(DistributionSeries::Kind kind) {
    switch (kind) {
    case DistributionSeries::Kind::pdf: return "pdf";
    case DistributionSeries::Kind::ccdf: return "ccdf";
    case DistributionSeries::Kind::rank: return "rank";
    case DistributionSeries::Kind::richclub: return "richclub";
    case DistributionSeries::Kind::per_degree_mean: return "per_degree_mean";
    }
    return "?";
}

double DistributionSeries::at(double x, double fallback) const {
    auto it = std::lower_bound(points.begin(), points.end(), x,
                               [](const auto& p, double v) { return p.first < v; });
    if (it != points.end() && it->first == x) return it->second;
    return fallback;
}

DistributionSeries make_ccdf(std::vector<double> values) {
    DistributionSeries s;
    s.kind = DistributionSeries::Kind::ccdf;
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    for (std::size_t i = 0; i < values.size();) {
        std::size_t j = i;
        while (j < values.size() && values[j] == values[i]) ++j;
        s.points.emplace_back(values[i], static_cast<double>(values.size() - i) / n);
        i = j;
    }
    return s;
}

DistributionSeries per_degree_mean(const std::vector<std::uint32_t>& degrees,
                                   const std::vector<double>& values) {
    std::map<std::uint32_t, std::pair<double, std::uint64_t>> acc;
    for (std::size_t v = 0; v < degrees.size(); ++v) {
        auto& slot = acc[degrees[v]];
        slot.first += values[v];
        slot.second += 1;
    }
    DistributionSeries s;
    s.kind = DistributionSeries::Kind::per_degree_mean;
    for (const auto& [k, slot] : acc)
        s.points.emplace_back(static_cast<double>(k),
                              slot.first / static_cast<double>(slot.second));
    return s;
}

} // namespace topogen
