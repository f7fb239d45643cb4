#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "topogen/metrics.hpp"

namespace topogen {

// Inclusive acceptance band for one report field.
struct ToleranceBand {
    double lo = 0.0;
    double hi = 0.0;
    bool contains(double v) const { return v >= lo && v <= hi; }
};

using ToleranceTable = std::map<std::string, ToleranceBand>;

// Published summary statistics for the measured AS graph and the three
// growth models at N = 11122, keyed "as", "pfp", "ig", "ba".
const std::map<std::string, MetricsReport>& builtin_references();

// Default acceptance bands per built-in reference. Fields without a band are
// reported but not judged.
const std::map<std::string, ToleranceTable>& builtin_tolerances();

// "field lo hi" rows; '#' comments and blank lines ignored.
ToleranceTable parse_tolerance_file(std::istream& in);

} // namespace topogen
