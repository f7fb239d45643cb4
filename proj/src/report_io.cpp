#include "topogen/report_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace topogen {

namespace {

using ordered_json = nlohmann::ordered_json;

double get_field(MetricsReport& r, std::size_t index) {
    switch (index) {
    case 0: return static_cast<double>(r.n);
    case 1: return static_cast<double>(r.links);
    case 2: return r.mean_degree;
    case 3: return r.gamma;
    case 4: return r.phi_1pct;
    case 5: return static_cast<double>(r.k_max);
    case 6: return r.p_k1;
    case 7: return r.p_k2;
    case 8: return r.p_k3;
    case 9: return r.l_star;
    case 10: return r.mean_kt;
    case 11: return static_cast<double>(r.max_kt);
    case 12: return r.mean_kq;
    case 13: return static_cast<double>(r.max_kq);
    case 14: return r.mean_knn;
    case 15: return r.mean_cb;
    case 16: return r.max_cb;
    }
    throw std::out_of_range("report field index");
}

void set_field(MetricsReport& r, std::size_t index, double v) {
    switch (index) {
    case 0: r.n = static_cast<std::int64_t>(v); return;
    case 1: r.links = static_cast<std::int64_t>(v); return;
    case 2: r.mean_degree = v; return;
    case 3: r.gamma = v; return;
    case 4: r.phi_1pct = v; return;
    case 5: r.k_max = static_cast<std::int64_t>(v); return;
    case 6: r.p_k1 = v; return;
    case 7: r.p_k2 = v; return;
    case 8: r.p_k3 = v; return;
    case 9: r.l_star = v; return;
    case 10: r.mean_kt = v; return;
    case 11: r.max_kt = static_cast<std::int64_t>(v); return;
    case 12: r.mean_kq = v; return;
    case 13: r.max_kq = static_cast<std::int64_t>(v); return;
    case 14: r.mean_knn = v; return;
    case 15: r.mean_cb = v; return;
    case 16: r.max_cb = v; return;
    }
    throw std::out_of_range("report field index");
}

bool integer_field(std::size_t index) {
    return index == 0 || index == 1 || index == 5 || index == 11 || index == 13;
}

} // namespace

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
    return std::string(buf, end);
}

void write_report(const MetricsReport& report, ReportFormat format, std::ostream& out) {
    MetricsReport r = report;
    if (format == ReportFormat::json) {
        ordered_json j;
        for (std::size_t i = 0; i < report_keys.size(); ++i) {
            if (integer_field(i))
                j[report_keys[i]] = static_cast<std::int64_t>(get_field(r, i));
            else
                j[report_keys[i]] = get_field(r, i); // NaN serializes as null
        }
        j["fit_kmin"] = r.fit_kmin;
        j["fit_kupper"] = r.fit_kupper;
        out << j.dump(2) << '\n';
    } else {
        for (std::size_t i = 0; i < report_keys.size(); ++i)
            out << report_keys[i] << (i + 1 < report_keys.size() ? ',' : '\n');
        for (std::size_t i = 0; i < report_keys.size(); ++i) {
            if (integer_field(i))
                out << static_cast<std::int64_t>(get_field(r, i));
            else
                out << format_double(get_field(r, i));
            out << (i + 1 < report_keys.size() ? ',' : '\n');
        }
    }
    if (!out) throw std::runtime_error("report write failed");
}

MetricsReport read_report(std::istream& in, ReportFormat format) {
    MetricsReport r;
    if (format == ReportFormat::json) {
        ordered_json j = ordered_json::parse(in);
        for (std::size_t i = 0; i < report_keys.size(); ++i) {
            const auto it = j.find(report_keys[i]);
            if (it == j.end() || it->is_null())
                set_field(r, i, std::numeric_limits<double>::quiet_NaN());
            else
                set_field(r, i, it->get<double>());
        }
        if (j.contains("fit_kmin") && j["fit_kmin"].is_number())
            r.fit_kmin = j["fit_kmin"].get<double>();
        if (j.contains("fit_kupper") && j["fit_kupper"].is_number())
            r.fit_kupper = j["fit_kupper"].get<double>();
    } else {
        std::string header, row;
        if (!std::getline(in, header) || !std::getline(in, row))
            throw std::runtime_error("csv report needs a header and a data row");
        auto split = [](const std::string& line) {
            std::vector<std::string> cells;
            std::stringstream ss(line);
            std::string cell;
            while (std::getline(ss, cell, ',')) {
                if (!cell.empty() && cell.back() == '\r') cell.pop_back();
                cells.push_back(cell);
            }
            return cells;
        };
        const auto names = split(header);
        const auto cells = split(row);
        if (names.size() != report_keys.size() || cells.size() != report_keys.size())
            throw std::runtime_error("csv report must have exactly the 17 schema columns");
        for (std::size_t i = 0; i < report_keys.size(); ++i) {
            if (names[i] != report_keys[i])
                throw std::runtime_error("csv report column '" + names[i] +
                                         "' does not match schema key '" + report_keys[i] + "'");
            if (cells[i] == "nan") {
                set_field(r, i, std::numeric_limits<double>::quiet_NaN());
                continue;
            }
            double value = 0.0;
            auto [end, ec] =
                std::from_chars(cells[i].data(), cells[i].data() + cells[i].size(), value);
            if (ec != std::errc{} || end != cells[i].data() + cells[i].size())
                throw std::runtime_error("csv report cell '" + cells[i] + "' is not a number");
            set_field(r, i, value);
        }
    }
    return r;
}

MetricsReport read_report_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open report " + path);
    const bool csv = path.size() > 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
    return read_report(in, csv ? ReportFormat::csv : ReportFormat::json);
}

void write_series(const DistributionSeries& series, std::ostream& out) {
    out << "# " << to_string(series.kind) << '\n';
    for (const auto& [x, y] : series.points)
        out << format_double(x) << ' ' << format_double(y) << '\n';
    if (!out) throw std::runtime_error("series write failed");
}

} // namespace topogen
