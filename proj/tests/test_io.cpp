#include <cmath>
#include <sstream>
#include <stdexcept>

#include <doctest.h>

#include "oracle/brute_force.hpp"
#include "topogen/config_io.hpp"
#include "topogen/edge_list.hpp"
#include "topogen/references.hpp"
#include "topogen/report_io.hpp"

using namespace topogen;

TEST_CASE("edge list reading") {
    std::istringstream in("0 1\n1 2\n");
    const auto loaded = read_edge_list(in);
    CHECK(loaded.graph.node_count() == 3);
    CHECK(loaded.graph.edge_count() == 2);
    CHECK(loaded.graph.has_edge(0, 1));
    CHECK(loaded.graph.has_edge(1, 2));

    std::istringstream comments("# a comment\n\n  0 1\n# trailing\n2 1\n");
    CHECK(read_edge_list(comments).graph.edge_count() == 2);

    // node count is max id + 1 even with gaps
    std::istringstream gap("0 5\n");
    CHECK(read_edge_list(gap).graph.node_count() == 6);
}

TEST_CASE("edge list strict errors name the line") {
    std::istringstream self("0 0\n");
    CHECK_THROWS_WITH_AS(read_edge_list(self), doctest::Contains("line 1"),
                         std::runtime_error);

    std::istringstream dup("0 1\n1 0\n");
    CHECK_THROWS_WITH_AS(read_edge_list(dup), doctest::Contains("line 2"),
                         std::runtime_error);

    std::istringstream alpha("0 x\n");
    CHECK_THROWS_WITH_AS(read_edge_list(alpha), doctest::Contains("non-integer"),
                         std::runtime_error);

    std::istringstream negative("-1 2\n");
    CHECK_THROWS_WITH_AS(read_edge_list(negative), doctest::Contains("negative"),
                         std::runtime_error);

    std::istringstream triple("0 1 2\n");
    CHECK_THROWS_AS(read_edge_list(triple), std::runtime_error);

    std::istringstream lonely("7\n");
    CHECK_THROWS_AS(read_edge_list(lonely), std::runtime_error);
}

TEST_CASE("lenient mode skips and counts bad edges") {
    std::istringstream in("0 0\n0 1\n1 0\n1 2\n");
    const auto loaded = read_edge_list(in, {.lenient = true});
    CHECK(loaded.graph.edge_count() == 2);
    CHECK(loaded.skipped_lines == 2);
}

TEST_CASE("edge list writing is canonical") {
    Graph p3(3);
    p3.add_edge(1, 2);
    p3.add_edge(1, 0);
    std::ostringstream out;
    write_edge_list(p3, out);
    CHECK(out.str() == "0 1\n1 2\n");

    Graph k3(3);
    k3.add_edge(2, 0);
    k3.add_edge(2, 1);
    k3.add_edge(1, 0);
    std::ostringstream k3_out;
    write_edge_list(k3, k3_out, {"three nodes"});
    CHECK(k3_out.str() == "# three nodes\n0 1\n0 2\n1 2\n");
}

TEST_CASE("edge list round trip preserves the edge set") {
    Rng rng(3);
    for (int i = 0; i < 25; ++i) {
        const Graph g = oracle::random_connected_graph(4, 16, rng);
        std::ostringstream out;
        write_edge_list(g, out);
        std::istringstream in(out.str());
        const auto back = read_edge_list(in);
        CHECK(back.graph.edges() == g.edges());

        // byte stability
        std::ostringstream again;
        write_edge_list(g, again);
        CHECK(again.str() == out.str());
    }
}

TEST_CASE("mapped reading compacts sparse ids in first-appearance order") {
    std::istringstream in("100 7\n7 3\n");
    const auto loaded = read_edge_list_mapped(in);
    CHECK(loaded.graph.node_count() == 3);
    CHECK(loaded.external_ids == std::vector<std::uint64_t>{100, 7, 3});
    CHECK(loaded.graph.has_edge(0, 1));
    CHECK(loaded.graph.has_edge(1, 2));

    std::ostringstream map_out;
    write_id_map(loaded.external_ids, map_out);
    CHECK(map_out.str() == "# external dense\n100 0\n7 1\n3 2\n");
}

namespace {

MetricsReport sample_report() {
    MetricsReport r;
    r.n = 4;
    r.links = 6;
    r.mean_degree = 3.0;
    r.gamma = 2.215678901234;
    r.phi_1pct = 1.0;
    r.k_max = 3;
    r.p_k1 = 0.0;
    r.p_k2 = 0.0;
    r.p_k3 = 1.0;
    r.l_star = 1.0;
    r.mean_kt = 3.0;
    r.max_kt = 3;
    r.mean_kq = 0.125;
    r.max_kq = 2;
    r.mean_knn = 3.0;
    r.mean_cb = 1.5;
    r.max_cb = 1.5000000001;
    r.fit_kmin = 1.0;
    r.fit_kupper = 42.0;
    return r;
}

bool reports_equal(const MetricsReport& a, const MetricsReport& b) {
    return a.n == b.n && a.links == b.links && a.mean_degree == b.mean_degree &&
           a.gamma == b.gamma && a.phi_1pct == b.phi_1pct && a.k_max == b.k_max &&
           a.p_k1 == b.p_k1 && a.p_k2 == b.p_k2 && a.p_k3 == b.p_k3 &&
           a.l_star == b.l_star && a.mean_kt == b.mean_kt && a.max_kt == b.max_kt &&
           a.mean_kq == b.mean_kq && a.max_kq == b.max_kq && a.mean_knn == b.mean_knn &&
           a.mean_cb == b.mean_cb && a.max_cb == b.max_cb;
}

} // namespace

TEST_CASE("report json round trip is exact") {
    const auto r = sample_report();
    std::ostringstream out;
    write_report(r, ReportFormat::json, out);
    CHECK(out.str().find("\"l_star\": 1.0") != std::string::npos);
    std::istringstream in(out.str());
    const auto back = read_report(in, ReportFormat::json);
    CHECK(reports_equal(r, back));
    CHECK(back.fit_kupper == 42.0);
}

TEST_CASE("report csv has exactly the 17 schema columns, round trips") {
    const auto r = sample_report();
    std::ostringstream out;
    write_report(r, ReportFormat::csv, out);
    std::istringstream lines(out.str());
    std::string header;
    std::getline(lines, header);
    CHECK(header ==
          "n,links,mean_degree,gamma,phi_1pct,k_max,p_k1,p_k2,p_k3,l_star,mean_kt,max_kt,"
          "mean_kq,max_kq,mean_knn,mean_cb,max_cb");
    std::istringstream in(out.str());
    const auto back = read_report(in, ReportFormat::csv);
    CHECK(reports_equal(r, back));
}

TEST_CASE("NaN gamma serializes as json null / csv nan") {
    auto r = sample_report();
    r.gamma = std::nan("");
    std::ostringstream json_out;
    write_report(r, ReportFormat::json, json_out);
    CHECK(json_out.str().find("\"gamma\": null") != std::string::npos);
    std::istringstream json_in(json_out.str());
    CHECK(std::isnan(read_report(json_in, ReportFormat::json).gamma));

    std::ostringstream csv_out;
    write_report(r, ReportFormat::csv, csv_out);
    CHECK(csv_out.str().find("nan") != std::string::npos);
    std::istringstream csv_in(csv_out.str());
    CHECK(std::isnan(read_report(csv_in, ReportFormat::csv).gamma));
}

TEST_CASE("series files") {
    DistributionSeries pdf;
    pdf.kind = DistributionSeries::Kind::pdf;
    pdf.points = {{3.0, 1.0}};
    std::ostringstream out;
    write_series(pdf, out);
    CHECK(out.str() == "# pdf\n3 1\n");

    DistributionSeries ccdf;
    ccdf.kind = DistributionSeries::Kind::ccdf;
    ccdf.points = {{1.0, 1.0}, {2.5, 0.125}};
    std::ostringstream c;
    write_series(ccdf, c);
    CHECK(c.str() == "# ccdf\n1 1\n2.5 0.125\n");
}

TEST_CASE("growth config round trips through the flat format") {
    GrowthConfig c = GrowthConfig::defaults_for(GrowthModel::test_star);
    c.target_n = 4321;
    c.rng_seed = 99;
    c.scheme.alpha = 1.2;
    std::ostringstream out;
    write_growth_config(c, out);

    std::istringstream in(out.str());
    const GrowthConfig back = parse_growth_config(in);
    CHECK(back.model == c.model);
    CHECK(back.target_n == c.target_n);
    CHECK(back.m == c.m);
    CHECK(back.p == c.p);
    CHECK(back.q == c.q);
    CHECK(back.scheme.kind == c.scheme.kind);
    CHECK(back.scheme.alpha == c.scheme.alpha);
    CHECK(back.seed_nodes == c.seed_nodes);
    CHECK(back.seed_extra_edges == c.seed_extra_edges);
    CHECK(back.rng_seed == c.rng_seed);
    CHECK(config_fingerprint(back) == config_fingerprint(c));
}

TEST_CASE("config parsing applies model before kernel parameters") {
    std::istringstream in("delta = 0.07\nmodel = pfp\n");
    const auto c = parse_growth_config(in, GrowthConfig::defaults_for(GrowthModel::ba));
    CHECK(c.model == GrowthModel::pfp);
    CHECK(c.scheme.kind == PreferenceKind::positive_feedback);
    CHECK(c.scheme.delta == 0.07);

    std::istringstream bad("modle = pfp\n");
    CHECK_THROWS_AS(parse_growth_config(bad), std::invalid_argument);
}

TEST_CASE("manifest round trip carries the config") {
    RunManifest m;
    m.command = "generate";
    m.config = GrowthConfig::defaults_for(GrowthModel::ig);
    m.config->rng_seed = 5;
    m.inputs = {};
    m.outputs = {"a.edges"};
    m.version = "1.0.0";
    m.duration_seconds = 0.25;

    std::ostringstream out;
    write_manifest(m, out);
    std::istringstream in(out.str());
    const auto back = read_manifest(in);
    CHECK(back.command == "generate");
    REQUIRE(back.config.has_value());
    CHECK(back.config->model == GrowthModel::ig);
    CHECK(back.config->rng_seed == 5);
    CHECK(back.outputs == m.outputs);
}

TEST_CASE("tolerance files") {
    std::istringstream in("# bands\ngamma 2.14 2.30\nk_max 2000 3600\n");
    const auto table = parse_tolerance_file(in);
    CHECK(table.at("gamma").contains(2.22));
    CHECK_FALSE(table.at("gamma").contains(2.31));
    CHECK(table.at("k_max").contains(2000));

    std::istringstream bad("gamma 3 2\n");
    CHECK_THROWS_AS(parse_tolerance_file(bad), std::runtime_error);
}

TEST_CASE("builtin references cover the four columns") {
    const auto& refs = builtin_references();
    CHECK(refs.at("as").k_max == 2839);
    CHECK(refs.at("pfp").links == 30151);
    CHECK(refs.at("ig").gamma == 2.22);
    CHECK(refs.at("ba").gamma == 3.0);
    for (const auto& [name, table] : builtin_tolerances())
        CHECK(refs.count(name) == 1);
    // the pfp bands accept the published pfp column itself
    const auto& pfp = refs.at("pfp");
    const auto& bands = builtin_tolerances().at("pfp");
    CHECK(bands.at("links").contains(double(pfp.links)));
    CHECK(bands.at("gamma").contains(pfp.gamma));
    CHECK(bands.at("mean_cb").contains(pfp.mean_cb));
}
