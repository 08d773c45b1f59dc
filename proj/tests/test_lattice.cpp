#include "latsched/error.hpp"
#include "latsched/lattice.hpp"
#include "latsched/scheduler.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

using namespace latsched;

namespace {

constexpr auto Hex = LatticeKind::Hexagonal;
constexpr auto Sq = LatticeKind::SquareGrid;

std::set<LatticeCoord> as_set(const std::vector<LatticeCoord>& v) { return {v.begin(), v.end()}; }

int expect_code(ErrorCode code, auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        CHECK(e.code() == code);
        return 1;
    }
    FAIL("expected an error");
    return 0;
}

}  // namespace

TEST_CASE("graph distance examples")
{
    CHECK(graph_distance(Hex, {0, 0}, {1, 1}) == 1);
    CHECK(graph_distance(Hex, {3, 5}, {3, 5}) == 0);
    CHECK(graph_distance(Hex, {0, 0}, {2, -1}) == 3);
    CHECK(graph_distance(Sq, {0, 0}, {2, 3}) == 5);
    CHECK(graph_distance(Hex, {0, 0}, {-2, 1}) == 3);
}

TEST_CASE("bfs distance examples and oracle failure")
{
    CHECK(bfs_distance(Hex, {0, 0}, {1, 1}, 4) == 1);
    CHECK(bfs_distance(Hex, {0, 0}, {-2, 1}, 4) == 3);
    CHECK(bfs_distance(Sq, {1, 1}, {1, 1}, 0) == 0);
    CHECK(bfs_distance(Hex, {0, 0}, {2, -1}, 5) == 3);
    CHECK(bfs_distance(Sq, {0, 0}, {2, 3}, 5) == 5);
    expect_code(ErrorCode::OracleFailure, [] { bfs_distance(Sq, {0, 0}, {9, 0}, 3); });
}

TEST_CASE("closed-form distance matches BFS on random pairs")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coord(-12, 12);
    for (auto kind : {Hex, Sq}) {
        for (int i = 0; i < 500; ++i) {
            const LatticeCoord a{coord(rng), coord(rng)};
            const LatticeCoord b{coord(rng), coord(rng)};
            // The box must allow detours for square paths; 2 * max span is ample.
            CHECK(graph_distance(kind, a, b) == bfs_distance(kind, a, b, 50));
            CHECK(graph_distance(kind, a, b) == graph_distance(kind, b, a));
        }
    }
}

TEST_CASE("neighbors")
{
    CHECK(neighbors(Hex, {0, 0}) ==
          std::vector<LatticeCoord>{{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}});
    CHECK(as_set(neighbors(Sq, {2, 2})) == std::set<LatticeCoord>{{3, 2}, {1, 2}, {2, 3}, {2, 1}});
    const auto ext = NetworkExtent::from_dims(6, 6);
    CHECK(as_set(neighbors(Hex, {5, 5}, ext)) == std::set<LatticeCoord>{{4, 5}, {5, 4}, {4, 4}});
    for (auto kind : {Hex, Sq}) {
        for (LatticeCoord q : neighbors(kind, {4, -3}))
            CHECK(graph_distance(kind, {4, -3}, q) == 1);
    }
}

TEST_CASE("embedding")
{
    const Point p = embed(Hex, {1, 1}, 1.0);
    CHECK(std::hypot(p.x, p.y) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::hypot(embed(Hex, {5, 0}, 0.7).x, embed(Hex, {5, 0}, 0.7).y) == doctest::Approx(3.5));
    const Point s = embed(Sq, {3, 4}, 1.0);
    CHECK(std::hypot(s.x, s.y) == doctest::Approx(5.0));
    for (auto kind : {Hex, Sq}) {
        for (LatticeCoord q : neighbors(kind, {2, 3})) {
            const double dist = euclidean_distance(embed(kind, {2, 3}, 1.3), embed(kind, q, 1.3));
            CHECK(dist == doctest::Approx(1.3).epsilon(1e-14));
        }
    }
    expect_code(ErrorCode::InvalidArgument, [] { embed(Hex, {0, 0}, 0.0); });
    expect_code(ErrorCode::InvalidArgument, [] { embed(Sq, {0, 0}, -1.0); });
}

TEST_CASE("extents")
{
    const auto e = NetworkExtent::with_node_count(4000);
    CHECK(e.size() == 4000);
    CHECK(e.width() == 64);
    CHECK(e.height() == 63);
    CHECK(e.node(3999) == LatticeCoord{31, 62});
    CHECK_FALSE(e.contains({32, 62}));
    CHECK(e.contains({63, 61}));
    CHECK(NetworkExtent::with_node_count(0).empty());
    CHECK(NetworkExtent::from_dims(0, 5).empty());
    const auto box = NetworkExtent::box(-2, -1, 1, 1);
    CHECK(box.size() == 12);
    for (std::size_t i = 0; i < box.size(); ++i)
        CHECK(box.index_of(box.node(i)) == i);
    CHECK(box.truncated(5).size() == 5);
    CHECK(box.truncated(100).size() == 12);
    expect_code(ErrorCode::InvalidArgument, [&] { box.node(12); });
}

TEST_CASE("section ring points")
{
    const auto rhombus = BasisSection::rhombus(3);
    CHECK(as_set(ring_points(rhombus, 1)) == std::set<LatticeCoord>{{0, 1}, {1, 1}, {1, 0}});
    const auto rhomboid = BasisSection::rhomboid(3, 2);
    CHECK(as_set(ring_points(rhomboid, 1)) == std::set<LatticeCoord>{{0, 1}, {1, 0}});
    for (const auto& s : {rhombus, rhomboid, BasisSection::rectangle(4, 2, {3, -1})})
        CHECK(ring_points(s, 0) == std::vector<LatticeCoord>{s.origin});
}

TEST_CASE("section points agree with containment")
{
    for (const auto& s : {BasisSection::rhombus(2, {1, 1}), BasisSection::rhomboid(3, 2, {-1, 0}),
                          BasisSection::rectangle(3, 2, {0, 4})}) {
        const auto pts = s.points();
        CHECK(pts.size() == s.point_count());
        CHECK(as_set(pts).size() == pts.size());
        int inside = 0;
        for (int y = -10; y <= 10; ++y) {
            for (int x = -10; x <= 10; ++x)
                inside += s.contains({x, y}) ? 1 : 0;
        }
        CHECK(inside == static_cast<int>(pts.size()));
        for (LatticeCoord p : pts)
            CHECK(s.contains(p));
    }
}

TEST_CASE("tilings cover the lattice exactly once")
{
    // Brute force: every replica overlapping a window, counted per point.
    const std::vector<SectionTiling> tilings{SectionTiling::rhombus(2), SectionTiling::rhombus(3),
                                             SectionTiling::rhomboid(3, 2), SectionTiling::rhomboid(4, 3),
                                             SectionTiling::shifted_rectangles(3, 2, 2),
                                             SectionTiling::shifted_rectangles(2, 2, 2)};
    const auto window = NetworkExtent::box(-9, -9, 9, 9);
    for (const auto& t : tilings) {
        std::map<LatticeCoord, int> hits;
        std::set<LatticeCoord> origins;
        for (LatticeCoord p : window.nodes()) {
            const auto place = t.locate(p);
            CHECK(place.origin + place.offset == p);
            CHECK(t.replica_at(place.origin).contains(p));
            origins.insert(place.origin);
        }
        for (LatticeCoord o : origins) {
            for (LatticeCoord q : t.replica_at(o).points())
                ++hits[q];
        }
        for (LatticeCoord p : window.nodes())
            CHECK(hits[p] == 1);
        // Every origin maps to itself with a zero offset.
        for (LatticeCoord o : origins)
            CHECK(t.locate(o).offset == LatticeCoord{0, 0});
    }
}

TEST_CASE("schedule slot equals position inside the basis section")
{
    for (auto kind : {Hex, Sq}) {
        for (int k = 1; k <= 6; ++k) {
            const auto tiling = SectionTiling::for_schedule(kind, k);
            for (LatticeCoord p : NetworkExtent::box(-8, -8, 8, 8).nodes()) {
                const LatticeCoord off = tiling.locate(p).offset;
                CHECK(slot_of(kind, p, InterferenceK(k)) == off.x + (k + 1) * off.y);
            }
        }
    }
}

TEST_CASE("nodes at the same section position are far enough apart")
{
    // Translating a basis section never brings two copies of the same offset within k
    // hops of each other's neighborhoods.
    for (auto kind : {Hex, Sq}) {
        for (int k = 1; k <= 5; ++k) {
            const auto tiling = SectionTiling::for_schedule(kind, k);
            const auto ext = NetworkExtent::box(-6, -6, 6, 6);
            std::map<LatticeCoord, std::vector<LatticeCoord>> groups;
            for (LatticeCoord p : ext.nodes())
                groups[tiling.locate(p).offset].push_back(p);
            for (const auto& [off, members] : groups) {
                for (std::size_t i = 0; i < members.size(); ++i) {
                    for (std::size_t j = i + 1; j < members.size(); ++j)
                        CHECK(graph_distance(kind, members[i], members[j]) > k);
                }
            }
        }
    }
}

TEST_CASE("coset")
{
    const auto ext = NetworkExtent::from_dims(6, 6);
    CHECK(as_set(coset(Hex, 2, {0, 0}, ext)) == std::set<LatticeCoord>{{0, 0}, {3, 0}, {0, 3}, {3, 3}});
    const auto sq_ext = NetworkExtent::from_dims(8, 4);
    std::set<LatticeCoord> slot0;
    for (LatticeCoord p : sq_ext.nodes()) {
        if (square_slot(p, InterferenceK(3)) == 0)
            slot0.insert(p);
    }
    CHECK(as_set(coset(Sq, 3, {0, 0}, sq_ext)) == slot0);
    const auto single = NetworkExtent::box(4, 7, 4, 7);
    for (auto kind : {Hex, Sq})
        CHECK(coset(kind, 2, {4, 7}, single) == std::vector<LatticeCoord>{{4, 7}});
}

TEST_CASE("kind parsing")
{
    CHECK(parse_kind("hex") == Hex);
    CHECK(parse_kind("square") == Sq);
    CHECK_FALSE(parse_kind("triangle").has_value());
    CHECK(to_string(Hex) == "hex");
}
