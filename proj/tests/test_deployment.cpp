#include "latsched/deployment.hpp"
#include "latsched/error.hpp"
#include "latsched/simulation.hpp"

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <limits>

using namespace latsched;

namespace {

constexpr auto Hex = LatticeKind::Hexagonal;
constexpr auto Sq = LatticeKind::SquareGrid;

}  // namespace

TEST_CASE("rng is deterministic and in range")
{
    Rng a(42), b(42), c(43);
    bool differs = false;
    for (int i = 0; i < 1000; ++i) {
        const double x = a.uniform01();
        CHECK(x == b.uniform01());
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
        differs = differs || x != c.uniform01();
    }
    CHECK(differs);
    // First output of mt19937_64 seeded with 5489 is 14514284786278117030.
    Rng d(5489);
    CHECK(d.uniform01() == static_cast<double>(14514284786278117030ULL >> 11) * 0x1.0p-53);
}

TEST_CASE("displacement geometry")
{
    CHECK(max_displacement_radius(1.0) == 0.0);
    CHECK(max_displacement_radius(2.0) == doctest::Approx(1.0 / 6.0));
    CHECK(nominal_spacing_for(2.0) == doctest::Approx(2.0 / 3.0));
    CHECK_THROWS_AS(max_displacement_radius(0.9), Error);
}

TEST_CASE("regular placement when dd is one")
{
    const auto ext = NetworkExtent::from_dims(7, 5);
    for (auto kind : {Hex, Sq}) {
        const auto dep = generate(kind, ext, 1.0, 3);
        CHECK(dep.nominal_spacing == 1.0);
        for (std::size_t i = 0; i < ext.size(); ++i) {
            const Point e = embed(kind, ext.node(i), 1.0);
            CHECK(dep.positions[i].x == e.x);
            CHECK(dep.positions[i].y == e.y);
        }
        const auto range = dep.realized_neighbor_range();
        CHECK(range.min == doctest::Approx(1.0));
        CHECK(range.max == doctest::Approx(1.0));
    }
}

TEST_CASE("same seed gives identical positions")
{
    const auto ext = NetworkExtent::from_dims(20, 20);
    const auto a = generate(Hex, ext, 1.3, 9);
    const auto b = generate(Hex, ext, 1.3, 9);
    const auto c = generate(Hex, ext, 1.3, 10);
    CHECK(a.positions.size() == b.positions.size());
    bool all_equal = true, any_diff = false;
    for (std::size_t i = 0; i < a.positions.size(); ++i) {
        all_equal = all_equal && a.positions[i].x == b.positions[i].x && a.positions[i].y == b.positions[i].y;
        any_diff = any_diff || a.positions[i].x != c.positions[i].x;
    }
    CHECK(all_equal);
    CHECK(any_diff);
}

TEST_CASE("empirical displacement radius approaches one sixth at dd = 2")
{
    const auto ext = NetworkExtent::with_node_count(100000);
    const auto dep = generate(Sq, ext, 2.0, 1);
    double largest = 0.0;
    for (std::size_t i = 0; i < ext.size(); ++i) {
        const Point base = embed(Sq, ext.node(i), dep.nominal_spacing);
        largest = std::max(largest, euclidean_distance(base, dep.positions[i]));
    }
    CHECK(largest <= 1.0 / 6.0 + 1e-15);
    CHECK(largest > 1.0 / 6.0 - 1e-3);
}

TEST_CASE("realized neighbor distances stay inside the analytic envelope")
{
    for (auto kind : {Hex, Sq}) {
        for (double dd : {1.1, 1.5, 2.0}) {
            for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                const auto dep = generate(kind, NetworkExtent::from_dims(30, 30), dd, seed);
                const auto range = dep.realized_neighbor_range();
                CHECK(range.max <= 1.0 + 1e-12);
                CHECK(range.min >= (3.0 - dd) / (dd + 1.0) - 1e-12);
                CHECK(range.min > 0.0);
            }
        }
    }
}

TEST_CASE("summarize")
{
    RhoReport r;
    for (double rho : {1.5, 0.5, 2.0, 1.0})
        r.records.push_back({0, {0, 0}, {1, 0}, rho, rho});
    summarize(r);
    CHECK_FALSE(r.empty);
    CHECK(r.min_rho == 0.5);
    CHECK(r.avg_rho == 1.25);
    CHECK(r.violations == 1);

    RhoReport none;
    summarize(none);
    CHECK(none.empty);

    CompensatedSum s;
    s.add(1.0);
    for (int i = 0; i < 10; ++i)
        s.add(1e-16);
    CHECK(s.value() == 1.0 + 1e-15);
}

TEST_CASE("evaluation matches a direct SINR computation")
{
    const auto ext = NetworkExtent::from_dims(12, 12);
    const InterferenceK k(2);
    const auto dep = generate(Hex, ext, 1.2, 4);
    const auto sched = build_schedule(Hex, k, ext);
    SinrParams p;
    p.beta = 0.7;
    p.gamma = 3.0;
    p.k = k;
    p.P = 3.0;
    p.eta = 0.4;
    const auto report = evaluate(dep, sched, p);
    REQUIRE_FALSE(report.empty);

    std::size_t expected_records = 0;
    for (LatticeCoord t : ext.nodes())
        expected_records += neighbors(Hex, t, ext).size();
    CHECK(report.records.size() == expected_records);

    for (std::size_t i = 0; i < report.records.size(); i += 37) {
        const RhoRecord& rec = report.records[i];
        std::vector<Point> others;
        for (LatticeCoord q : ext.nodes()) {
            if (q != rec.tx && *sched.slot_of(q) == rec.slot)
                others.push_back(dep.position(q));
        }
        const double sinr = sinr_at(dep.position(rec.rx), dep.position(rec.tx), others, p);
        CHECK(rec.sinr == doctest::Approx(sinr).epsilon(1e-12));
        CHECK(rec.rho == doctest::Approx(sinr / p.beta).epsilon(1e-12));
        CHECK(graph_distance(Hex, rec.tx, rec.rx) == 1);
    }
}

TEST_CASE("degenerate extents")
{
    SinrParams p;
    p.beta = 0.5;
    p.gamma = 3.0;
    p.eta = 2.0;
    p.P = 4.0;
    const auto one = NetworkExtent::from_dims(1, 1);
    const auto single = evaluate(generate(Hex, one, 1.0, 1), build_schedule(Hex, InterferenceK(1), one), p);
    CHECK(single.empty);
    CHECK(single.records.empty());

    // Two nodes in different slots: each transmits alone to the other.
    const auto two = NetworkExtent::from_dims(2, 1);
    const auto dep = generate(Hex, two, 1.4, 8);
    const auto report = evaluate(dep, build_schedule(Hex, InterferenceK(2), two), p);
    REQUIRE(report.records.size() == 2);
    const double dist = euclidean_distance(dep.positions[0], dep.positions[1]);
    for (const RhoRecord& r : report.records)
        CHECK(r.rho == doctest::Approx(p.P * std::pow(dist, -p.gamma) / (p.eta * p.beta)).epsilon(1e-13));
}

TEST_CASE("regular placement at the power threshold meets the threshold")
{
    for (auto kind : {Hex, Sq}) {
        for (double gamma : {3.0, 4.0}) {
            const InterferenceK k(2);
            SinrParams p;
            p.gamma = gamma;
            p.k = k;
            p.beta = 0.5 * beta_max(kind, gamma, k);
            p.d = p.D = 1.0;
            p.P = *power_threshold(kind, p);
            const auto ext = NetworkExtent::from_dims(30, 30);
            const auto report = evaluate(generate(kind, ext, 1.0, 1), build_schedule(kind, k, ext), p);
            CHECK(report.min_rho >= 1.0);
            CHECK(report.violations == 0);
        }
    }
}

TEST_CASE("operating points")
{
    const auto zero = operating_point(Hex, 4.0, InterferenceK(2), 0.0);
    CHECK(zero.status == OperatingPoint::Status::Degenerate);
    CHECK(zero.dd == 1.0);
    CHECK(zero.beta == 0.0);

    const auto full = operating_point(Hex, 4.0, InterferenceK(2), 1.0);
    CHECK(full.status == OperatingPoint::Status::Boundary);
    CHECK(full.beta == doctest::Approx(81.0 / 16.0));
    CHECK(full.dd == doctest::Approx(1.0));

    const auto half = operating_point(Hex, 4.0, InterferenceK(2), 0.5);
    CHECK(half.interior());
    CHECK(half.beta == doctest::Approx(81.0 / 32.0).epsilon(1e-14));
    // dd_max(81/32) = (3 sqrt3 / 2) (1/(9 * 81/32))^(1/4) = 2^(1/4)
    const double expected_dd_max = 3.0 * std::sqrt(3.0) / 2.0 * std::pow(1.0 / (9.0 * 81.0 / 32.0), 0.25);
    CHECK(half.dd_max_at_beta == doctest::Approx(expected_dd_max).epsilon(1e-14));
    CHECK(half.dd_max_at_beta == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-14));
    CHECK(half.dd == doctest::Approx(1.0 + 0.5 * (expected_dd_max - 1.0)).epsilon(1e-14));

    CHECK_THROWS_AS(operating_point(Hex, 4.0, InterferenceK(2), 1.5), Error);
    CHECK_THROWS_AS(operating_point(Hex, 2.0, InterferenceK(2), 0.5), Error);
}

TEST_CASE("simulation pipeline")
{
    SimulationConfig cfg;
    cfg.kind = Sq;
    cfg.extent = NetworkExtent::with_node_count(600);
    cfg.seed = 5;
    const auto a = simulate(cfg);
    const auto b = simulate(cfg);
    CHECK(a.report.records.size() == b.report.records.size());
    CHECK(std::memcmp(&a.report.min_rho, &b.report.min_rho, sizeof(double)) == 0);
    CHECK(std::memcmp(&a.report.avg_rho, &b.report.avg_rho, sizeof(double)) == 0);
    CHECK(a.power == doctest::Approx(*power_threshold(Sq, a.params) * (1.0 + 1e-3)).epsilon(1e-15));
    CHECK(a.params.D == 1.0);
    CHECK(a.params.d == doctest::Approx(1.0 / a.dd));
    CHECK(a.report.violations == 0);

    cfg.f = 0.0;
    CHECK_THROWS_AS(simulate(cfg), Error);
    cfg.f = 1.0;
    CHECK_THROWS_AS(simulate(cfg), Error);

    cfg.f = 0.5;
    cfg.fixed_beta = 0.2;
    cfg.fixed_dd = 1.05;
    const auto fixed = simulate(cfg);
    CHECK(fixed.beta == 0.2);
    CHECK(fixed.dd == 1.05);
}
