#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "topogen/metrics.hpp"
#include "topogen/series.hpp"

namespace topogen {

// Fixed report schema, in emission order.
inline constexpr std::array<const char*, 17> report_keys = {
    "n",      "links",  "mean_degree", "gamma",  "phi_1pct", "k_max",
    "p_k1",   "p_k2",   "p_k3",        "l_star", "mean_kt",  "max_kt",
    "mean_kq", "max_kq", "mean_knn",   "mean_cb", "max_cb",
};

enum class ReportFormat { json, csv };

// JSON carries the 17 schema keys plus the gamma fit window
// (fit_kmin/fit_kupper); CSV is exactly the 17 schema columns.
// All numbers round-trip in full double precision, locale-independent.
void write_report(const MetricsReport& report, ReportFormat format, std::ostream& out);
MetricsReport read_report(std::istream& in, ReportFormat format);

// Format guessed from the extension (.csv => csv, anything else json).
MetricsReport read_report_file(const std::string& path);

// Two-column "x y" rows in x order under a "# <kind>" header line.
void write_series(const DistributionSeries& series, std::ostream& out);

// Shortest round-trip decimal form, locale-independent ("nan" for NaN).
std::string format_double(double value);

} // namespace topogen
