#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace latsched {

enum class LatticeKind { Hexagonal, SquareGrid };

std::string_view to_string(LatticeKind kind);
/// Accepts "hex"/"hexagonal" and "square"/"squaregrid".
std::optional<LatticeKind> parse_kind(std::string_view text);

/// Integer lattice address. Ordered row-major (y first, then x).
struct LatticeCoord {
    int x = 0;
    int y = 0;

    friend constexpr bool operator==(const LatticeCoord&, const LatticeCoord&) = default;
    friend constexpr std::strong_ordering operator<=>(const LatticeCoord& a, const LatticeCoord& b)
    {
        if (auto c = a.y <=> b.y; c != 0)
            return c;
        return a.x <=> b.x;
    }
};

constexpr LatticeCoord operator+(LatticeCoord a, LatticeCoord b) { return {a.x + b.x, a.y + b.y}; }
constexpr LatticeCoord operator-(LatticeCoord a, LatticeCoord b) { return {a.x - b.x, a.y - b.y}; }

/// Point in the plane, in the same length units as the embedding spacing.
struct Point {
    double x = 0.0;
    double y = 0.0;
};

double euclidean_distance(Point a, Point b);

/// Nonnegative remainder, result in [0, m) for m > 0.
constexpr int floor_mod(int a, int m)
{
    const int r = a % m;
    return r < 0 ? r + m : r;
}

/// Floor division consistent with floor_mod.
constexpr int floor_div(int a, int m) { return (a - floor_mod(a, m)) / m; }

/// Unit-distance neighbor offsets: six for the hexagonal lattice, four for the square grid.
std::span<const LatticeCoord> unit_offsets(LatticeKind kind);

/// Closed-form hop distance: MAX{|dx|,|dy|,|dx-dy|} (hexagonal) or |dx|+|dy| (square).
int graph_distance(LatticeKind kind, LatticeCoord a, LatticeCoord b);

/// Breadth-first hop distance over the unit-offset graph, restricted to the box of
/// Chebyshev radius `search_radius` around `a`. Throws ErrorCode::OracleFailure when
/// `b` is not reached inside that box.
int bfs_distance(LatticeKind kind, LatticeCoord a, LatticeCoord b, int search_radius);

class NetworkExtent;

std::vector<LatticeCoord> neighbors(LatticeKind kind, LatticeCoord p);
std::vector<LatticeCoord> neighbors(LatticeKind kind, LatticeCoord p, const NetworkExtent& extent);

/// Planar embedding. Hexagonal uses e1 = (1,0), e2 at angle 2*pi/3 from e1, so all six unit
/// neighbors sit at Euclidean distance `spacing`. Square is the orthonormal grid.
Point embed(LatticeKind kind, LatticeCoord p, double spacing);

/// Finite node set: an axis-aligned box [x0..x1] x [y0..y1] in lattice coordinates,
/// optionally truncated to the first `node_limit` nodes in row-major order.
class NetworkExtent {
public:
    NetworkExtent() = default;

    static NetworkExtent box(int x0, int y0, int x1, int y1);
    /// [0..width-1] x [0..height-1]; either dimension may be zero (empty extent).
    static NetworkExtent from_dims(int width, int height);
    /// Near-square box with width ceil(sqrt(n)) holding exactly n nodes; the last row
    /// is partially filled when n is not a multiple of the width.
    static NetworkExtent with_node_count(std::size_t n);

    /// Same box, keeping only the first n nodes in row-major order.
    NetworkExtent truncated(std::size_t n) const;

    int x0() const { return x0_; }
    int y0() const { return y0_; }
    int x1() const { return x1_; }
    int y1() const { return y1_; }
    int width() const { return width_; }
    int height() const { return height_; }

    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }
    bool contains(LatticeCoord p) const { return index_of(p).has_value(); }
    /// Row-major index in [0, size()), or nullopt when p is outside.
    std::optional<std::size_t> index_of(LatticeCoord p) const;
    LatticeCoord node(std::size_t index) const;
    std::vector<LatticeCoord> nodes() const;

private:
    int x0_ = 0, y0_ = 0, x1_ = -1, y1_ = -1;
    int width_ = 0, height_ = 0;
    std::size_t count_ = 0;
};

// ---------------------------------------------------------------------------
// Basis lattice sections and the tilings built from their replicas.
// ---------------------------------------------------------------------------

enum class SectionShape {
    Rhombus,    ///< {0 <= x <= i, 0 <= y <= i}, hexagonal lattice
    Rhomboid,   ///< {0 <= y < rows, 0 <= x + y <= i}, square lattice
    Rectangle,  ///< {0 <= x <= i, 0 <= y < rows}, square lattice
};

/// A basis lattice section anchored at `origin`. `length` counts edges along X, so every
/// row holds length + 1 points.
struct BasisSection {
    SectionShape shape = SectionShape::Rhombus;
    int length = 0;
    int rows = 1;
    LatticeCoord origin{};

    static BasisSection rhombus(int side, LatticeCoord origin = {});
    static BasisSection rhomboid(int length, int rows, LatticeCoord origin = {});
    static BasisSection rectangle(int length, int rows, LatticeCoord origin = {});

    LatticeKind lattice() const;
    bool contains(LatticeCoord q) const;
    std::size_t point_count() const;
    std::vector<LatticeCoord> points() const;
};

/// Points of the section at graph distance exactly `l` from its origin.
std::vector<LatticeCoord> ring_points(const BasisSection& section, int l);

/// A tessellation of the whole lattice by translated replicas of one section.
class SectionTiling {
public:
    struct Placement {
        LatticeCoord origin;  ///< origin of the replica containing the point
        LatticeCoord offset;  ///< point relative to that origin
    };

    /// Rhombus replicas at (n(i+1), m(i+1)).
    static SectionTiling rhombus(int side);
    /// Rhomboid replicas at n(i+1, 0) + m(-rows, rows).
    static SectionTiling rhomboid(int length, int rows);
    /// Rectangles stacked in bands of `rows`; odd bands are shifted left by `shift`.
    static SectionTiling shifted_rectangles(int length, int rows, int shift);
    /// The tiling whose relative coordinates enumerate the slots of the k-hop schedule.
    static SectionTiling for_schedule(LatticeKind kind, int k);

    const BasisSection& prototype() const { return prototype_; }
    Placement locate(LatticeCoord p) const;
    BasisSection replica_at(LatticeCoord origin) const;
    /// Origins of every replica that intersects the extent.
    std::vector<LatticeCoord> replicas_covering(const NetworkExtent& extent) const;

private:
    explicit SectionTiling(BasisSection prototype, int shift = 0) : prototype_(prototype), shift_(shift) {}
    BasisSection prototype_;
    int shift_ = 0;
};

/// All extent nodes sharing p's relative coordinate under SectionTiling::for_schedule(kind, k).
std::vector<LatticeCoord> coset(LatticeKind kind, int k, LatticeCoord p, const NetworkExtent& extent);

}  // namespace latsched
