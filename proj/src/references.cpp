#include "topogen/references.hpp"

#include <charconv>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace topogen {

namespace {

MetricsReport make_report(std::int64_t links, double mean_degree, double gamma, double phi,
                          std::int64_t k_max, double p1, double p2, double p3, double l_star,
                          double mean_kt, std::int64_t max_kt, double mean_kq,
                          std::int64_t max_kq, double mean_knn, double mean_cb, double max_cb) {
    MetricsReport r;
    r.n = 11122;
    r.links = links;
    r.mean_degree = mean_degree;
    r.gamma = gamma;
    r.phi_1pct = phi;
    r.k_max = k_max;
    r.p_k1 = p1;
    r.p_k2 = p2;
    r.p_k3 = p3;
    r.l_star = l_star;
    r.mean_kt = mean_kt;
    r.max_kt = max_kt;
    r.mean_kq = mean_kq;
    r.max_kq = max_kq;
    r.mean_knn = mean_knn;
    r.mean_cb = mean_cb;
    r.max_cb = max_cb;
    return r;
}

} // namespace

const std::map<std::string, MetricsReport>& builtin_references() {
    static const std::map<std::string, MetricsReport> refs = {
        {"as", make_report(30054, 5.4, 2.22, 0.27, 2839, 0.26, 0.38, 0.14, 3.13, 12.7, 7482,
                           277.0, 9648, 660.0, 4.13, 3237.0)},
        {"pfp", make_report(30151, 5.4, 2.22, 0.30, 2785, 0.28, 0.36, 0.12, 3.14, 12.0, 8611,
                            247.0, 9431, 482.0, 4.14, 3419.0)},
        {"ig", make_report(33349, 6.0, 2.22, 0.32, 700, 0.26, 0.34, 0.11, 3.6, 10.4, 4123,
                           105.4, 8780, 103.0, 4.6, 1002.0)},
        {"ba", make_report(33349, 6.0, 3.0, 0.045, 292, 0.0, 0.0, 0.40, 4.3, 0.1, 64, 1.3, 527,
                           20.0, 5.3, 1064.0)},
    };
    return refs;
}

const std::map<std::string, ToleranceTable>& builtin_tolerances() {
    static const std::map<std::string, ToleranceTable> tables = {
        {"pfp",
         {
             {"links", {29700, 30600}},
             {"gamma", {2.14, 2.30}},
             {"phi_1pct", {0.25, 0.35}},
             {"k_max", {2000, 3600}},
             {"l_star", {2.94, 3.34}},
             {"mean_kt", {8, 16}},
             {"mean_kq", {167, 327}},
             {"mean_cb", {3.89, 4.39}},
         }},
        {"ig",
         {
             {"links", {33250, 33450}},
             {"gamma", {2.12, 2.32}},
             {"k_max", {300, 1400}},
         }},
        {"ba",
         {
             {"gamma", {2.85, 3.15}},
             {"phi_1pct", {0.025, 0.065}},
             {"k_max", {150, 600}},
             {"p_k1", {0.0, 0.0}},
             {"p_k2", {0.0, 0.0}},
             {"p_k3", {0.35, 0.45}},
         }},
        {"as",
         {
             {"links", {29500, 30600}},
             {"gamma", {2.14, 2.30}},
             {"phi_1pct", {0.22, 0.32}},
             {"k_max", {2300, 3400}},
             {"l_star", {2.93, 3.33}},
             {"mean_kt", {8.7, 16.7}},
             {"mean_kq", {197, 357}},
             {"mean_cb", {3.88, 4.38}},
         }},
    };
    return tables;
}

ToleranceTable parse_tolerance_file(std::istream& in) {
    ToleranceTable table;
    std::string line;
    std::uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream row(line);
        std::string field;
        if (!(row >> field) || field[0] == '#') continue;
        double lo = 0, hi = 0;
        if (!(row >> lo >> hi) || hi < lo)
            throw std::runtime_error("tolerance file line " + std::to_string(line_no) +
                                     ": expected 'field lo hi'");
        table[field] = {lo, hi};
    }
    return table;
}

} // namespace topogen
