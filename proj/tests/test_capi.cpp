#include "latsched/latsched.h"

#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>

TEST_CASE("status names and kinds")
{
    CHECK(std::string(latsched_status_name(LATSCHED_OK)) == "ok");
    CHECK(std::string(latsched_version()) == "1.0.0");
    latsched_kind kind = LATSCHED_HEX;
    CHECK(latsched_parse_kind("square", &kind) == LATSCHED_OK);
    CHECK(kind == LATSCHED_SQUARE);
    CHECK(latsched_parse_kind("octagon", &kind) == LATSCHED_ERR_INVALID_ARGUMENT);
    CHECK(std::strlen(latsched_last_error()) > 0);
    CHECK(latsched_parse_kind(nullptr, &kind) == LATSCHED_ERR_INVALID_ARGUMENT);
    CHECK(std::string(latsched_kind_name(LATSCHED_HEX)) == "hex");
}

TEST_CASE("geometry and slots")
{
    int32_t d = 0;
    CHECK(latsched_graph_distance(LATSCHED_HEX, 0, 0, 2, -1, &d) == LATSCHED_OK);
    CHECK(d == 3);
    CHECK(latsched_bfs_distance(LATSCHED_SQUARE, 0, 0, 2, 3, 6, &d) == LATSCHED_OK);
    CHECK(d == 5);
    CHECK(latsched_bfs_distance(LATSCHED_SQUARE, 0, 0, 9, 0, 2, &d) == LATSCHED_ERR_ORACLE);
    CHECK(latsched_slot(LATSCHED_SQUARE, 3, 1, 2, &d) == LATSCHED_OK);
    CHECK(d == 3);
    CHECK(latsched_frame_length(LATSCHED_HEX, 2, &d) == LATSCHED_OK);
    CHECK(d == 9);
    CHECK(latsched_frame_length(LATSCHED_HEX, 0, &d) == LATSCHED_ERR_INVALID_ARGUMENT);
    CHECK(latsched_slot(LATSCHED_HEX, 2, 0, 0, nullptr) == LATSCHED_ERR_INVALID_ARGUMENT);
}

TEST_CASE("extents")
{
    const latsched_extent e = latsched_extent_with_nodes(4000);
    uint64_t n = 0;
    CHECK(latsched_extent_size(&e, &n) == LATSCHED_OK);
    CHECK(n == 4000);
    CHECK(e.x1 == 63);
    const latsched_extent f = latsched_extent_from_dims(5, 3);
    CHECK(latsched_extent_size(&f, &n) == LATSCHED_OK);
    CHECK(n == 15);
}

TEST_CASE("schedule lifecycle and verification")
{
    const latsched_extent e = latsched_extent_from_dims(6, 6);
    latsched_schedule* s = nullptr;
    REQUIRE(latsched_schedule_build(LATSCHED_HEX, 2, &e, &s) == LATSCHED_OK);
    CHECK(latsched_schedule_size(s) == 36);
    int32_t x = 0, y = 0, slot = 0;
    CHECK(latsched_schedule_entry(s, 7, &x, &y, &slot) == LATSCHED_OK);
    CHECK(x == 1);
    CHECK(y == 1);
    CHECK(slot == 4);
    CHECK(latsched_schedule_entry(s, 36, &x, &y, &slot) == LATSCHED_ERR_INVALID_ARGUMENT);

    latsched_verify_report* r = nullptr;
    REQUIRE(latsched_verify(s, &e, &r) == LATSCHED_OK);
    CHECK(latsched_verify_report_count(r) == 0);
    latsched_verify_report_destroy(r);

    const char* path = "capi_schedule.csv";
    CHECK(latsched_schedule_write_csv(s, &e, path) == LATSCHED_OK);
    latsched_schedule* back = nullptr;
    latsched_extent read_extent{};
    int has_extent = 0;
    REQUIRE(latsched_schedule_read_csv(path, &back, &read_extent, &has_extent) == LATSCHED_OK);
    CHECK(has_extent == 1);
    CHECK(read_extent.x1 == 5);
    CHECK(latsched_schedule_size(back) == 36);
    latsched_schedule_destroy(back);
    std::remove(path);

    // Missing node -> coverage violation.
    {
        std::ofstream out(path);
        out << "# kind=hex\n# k=2\n# extent=0,0,1,0\nx,y,slot\n0,0,0\n";
    }
    REQUIRE(latsched_schedule_read_csv(path, &back, &read_extent, &has_extent) == LATSCHED_OK);
    REQUIRE(latsched_verify(back, &read_extent, &r) == LATSCHED_OK);
    REQUIRE(latsched_verify_report_count(r) == 1);
    latsched_violation v{};
    CHECK(latsched_verify_report_get(r, 0, &v) == LATSCHED_OK);
    CHECK(std::string(v.reason) == "coverage");
    CHECK(v.has_b == 0);
    CHECK(v.ax == 1);
    latsched_verify_report_destroy(r);
    latsched_schedule_destroy(back);
    std::remove(path);

    CHECK(latsched_schedule_read_csv("does/not/exist.csv", &back, nullptr, nullptr) == LATSCHED_ERR_IO);
    CHECK(back == nullptr);
    latsched_schedule_destroy(s);
    latsched_schedule_destroy(nullptr);
}

TEST_CASE("clique reports")
{
    latsched_clique_report* r = nullptr;
    REQUIRE(latsched_clique(LATSCHED_HEX, 2, nullptr, 200, &r) == LATSCHED_OK);
    latsched_clique_summary s{};
    CHECK(latsched_clique_report_summary(r, &s) == LATSCHED_OK);
    CHECK(s.formula == 7);
    CHECK(s.brute_force == 7);
    CHECK(s.ratio_num == 9);
    CHECK(s.ratio_den == 7);
    CHECK(latsched_clique_report_witness_size(r) == 7);
    latsched_clique_report_destroy(r);

    const latsched_extent big = latsched_extent_from_dims(40, 40);
    REQUIRE(latsched_clique(LATSCHED_SQUARE, 3, &big, 200, &r) == LATSCHED_OK);
    CHECK(latsched_clique_report_summary(r, &s) == LATSCHED_OK);
    CHECK(s.skipped_budget == 1);
    CHECK(s.brute_force == -1);
    CHECK(s.formula == 8);
    CHECK(s.ratio_num == 1);
    CHECK(s.ratio_den == 1);
    latsched_clique_report_destroy(r);
}

TEST_CASE("sinr analysis")
{
    latsched_region region{};
    CHECK(latsched_feasibility(LATSCHED_HEX, 1.0, 4.0, 2, &region) == LATSCHED_OK);
    CHECK(region.dd_max == doctest::Approx(1.5));
    CHECK(region.feasible == 1);
    CHECK(latsched_feasibility(LATSCHED_HEX, 1.0, 2.0, 2, &region) == LATSCHED_ERR_DOMAIN);

    latsched_sinr_params p{1.0, 4.0, 1.0, 2, 1.0, 1.0, 1.0};
    double value = 0.0;
    CHECK(latsched_power_threshold(LATSCHED_HEX, &p, &value) == LATSCHED_OK);
    CHECK(value == doctest::Approx(81.0 / 65.0));
    p.D = 1.6;
    CHECK(latsched_power_threshold(LATSCHED_HEX, &p, &value) == LATSCHED_ERR_INFEASIBLE);
    p.D = 1.0;
    CHECK(latsched_interference_bound(LATSCHED_HEX, &p, &value) == LATSCHED_OK);
    CHECK(value == doctest::Approx(16.0 / 81.0));
    CHECK(latsched_exact_interference(LATSCHED_HEX, &p, 1, &value) == LATSCHED_OK);
    CHECK(value == doctest::Approx(0.375));

    latsched_operating_point op{};
    CHECK(latsched_operating_point_at(LATSCHED_HEX, 4.0, 2, 0.5, &op) == LATSCHED_OK);
    CHECK(op.status == LATSCHED_POINT_INTERIOR);
    CHECK(op.beta == doctest::Approx(81.0 / 32.0));
    CHECK(latsched_operating_point_at(LATSCHED_HEX, 4.0, 2, 1.0, &op) == LATSCHED_OK);
    CHECK(op.status == LATSCHED_POINT_BOUNDARY);
}

TEST_CASE("deployment and evaluation")
{
    const latsched_extent e = latsched_extent_from_dims(10, 10);
    latsched_deployment* dep = nullptr;
    REQUIRE(latsched_deployment_generate(LATSCHED_SQUARE, &e, 1.2, 4, &dep) == LATSCHED_OK);
    CHECK(latsched_deployment_size(dep) == 100);
    int32_t x = 0, y = 0;
    double px = 0, py = 0;
    CHECK(latsched_deployment_position(dep, 12, &x, &y, &px, &py) == LATSCHED_OK);
    CHECK(x == 2);
    CHECK(y == 1);

    latsched_schedule* s = nullptr;
    REQUIRE(latsched_schedule_build(LATSCHED_SQUARE, 2, &e, &s) == LATSCHED_OK);
    latsched_sinr_params p{0.5, 3.0, 1.0, 2, 1.0, 1.0, 5.0};
    latsched_rho_report* rep = nullptr;
    REQUIRE(latsched_evaluate(dep, s, &p, &rep) == LATSCHED_OK);
    latsched_rho_summary sum{};
    CHECK(latsched_rho_report_summary(rep, &sum) == LATSCHED_OK);
    CHECK(sum.records == 2 * (9 * 10) * 2);
    latsched_rho_record rec{};
    CHECK(latsched_rho_report_record(rep, 0, &rec) == LATSCHED_OK);
    CHECK(rec.rho == doctest::Approx(rec.sinr / 0.5));
    latsched_rho_report_destroy(rep);

    latsched_deployment_destroy(dep);
    latsched_schedule_destroy(s);
}

TEST_CASE("simulation handle")
{
    latsched_sim_config c = latsched_sim_config_default();
    CHECK(c.k == 2);
    CHECK(c.gamma == 3.0);
    c.extent = latsched_extent_with_nodes(400);
    latsched_simulation* sim = nullptr;
    REQUIRE(latsched_simulate(&c, &sim) == LATSCHED_OK);
    latsched_sim_summary s{};
    CHECK(latsched_simulation_summary(sim, &s) == LATSCHED_OK);
    CHECK(s.rho.min_rho >= 1.0);
    CHECK(s.point.status == LATSCHED_POINT_INTERIOR);
    CHECK(latsched_deployment_size(latsched_simulation_deployment(sim)) == 400);
    latsched_rho_summary again{};
    CHECK(latsched_rho_report_summary(latsched_simulation_report(sim), &again) == LATSCHED_OK);
    CHECK(again.min_rho == s.rho.min_rho);
    latsched_simulation_destroy(sim);

    c.f = 1.0;
    sim = nullptr;
    CHECK(latsched_simulate(&c, &sim) == LATSCHED_ERR_INFEASIBLE);
    CHECK(sim == nullptr);
    CHECK(latsched_simulate(nullptr, &sim) == LATSCHED_ERR_INVALID_ARGUMENT);
}
