#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace topogen {

// Generic (x, y) series with strictly increasing x; the plot-ready unit every
// metric hands out.
struct DistributionSeries {
    enum class Kind { pdf, ccdf, rank, richclub, per_degree_mean };

    Kind kind = Kind::pdf;
    std::vector<std::pair<double, double>> points;

    // y at the given x, or the fallback when x is absent.
    double at(double x, double fallback = 0.0) const;
};

const char* to_string(DistributionSeries::Kind kind);

// Fraction of values >= x, one point per distinct value; starts at y = 1.
DistributionSeries make_ccdf(std::vector<double> values);

// Mean of `values` over nodes of equal degree, one point per observed degree.
DistributionSeries per_degree_mean(const std::vector<std::uint32_t>& degrees,
                                   const std::vector<double>& values);

} // namespace topogen
