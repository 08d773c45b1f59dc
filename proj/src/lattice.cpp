#include "latsched/lattice.hpp"

#include "latsched/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <numbers>
#include <set>
#include <string>

namespace latsched {

namespace {

constexpr std::array<LatticeCoord, 6> kHexOffsets{{{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}};
constexpr std::array<LatticeCoord, 4> kSquareOffsets{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};

int ceil_half(int n) { return (n + 1) / 2; }

}  // namespace

std::string_view to_string(LatticeKind kind)
{
    return kind == LatticeKind::Hexagonal ? "hex" : "square";
}

std::optional<LatticeKind> parse_kind(std::string_view text)
{
    if (text == "hex" || text == "hexagonal")
        return LatticeKind::Hexagonal;
    if (text == "square" || text == "squaregrid" || text == "square-grid")
        return LatticeKind::SquareGrid;
    return std::nullopt;
}

double euclidean_distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

std::span<const LatticeCoord> unit_offsets(LatticeKind kind)
{
    if (kind == LatticeKind::Hexagonal)
        return kHexOffsets;
    return kSquareOffsets;
}

int graph_distance(LatticeKind kind, LatticeCoord a, LatticeCoord b)
{
    const int dx = b.x - a.x;
    const int dy = b.y - a.y;
    if (kind == LatticeKind::Hexagonal)
        return std::max({std::abs(dx), std::abs(dy), std::abs(dx - dy)});
    return std::abs(dx) + std::abs(dy);
}

int bfs_distance(LatticeKind kind, LatticeCoord a, LatticeCoord b, int search_radius)
{
    if (search_radius < 0)
        fail(ErrorCode::InvalidArgument, "bfs_distance: search radius must be nonnegative");
    if (a == b)
        return 0;

    const int side = 2 * search_radius + 1;
    auto slot = [&](LatticeCoord p) -> std::optional<std::size_t> {
        const int rx = p.x - a.x + search_radius;
        const int ry = p.y - a.y + search_radius;
        if (rx < 0 || ry < 0 || rx >= side || ry >= side)
            return std::nullopt;
        return static_cast<std::size_t>(ry) * side + rx;
    };

    std::vector<int> dist(static_cast<std::size_t>(side) * side, -1);
    std::deque<LatticeCoord> frontier{a};
    dist[*slot(a)] = 0;
    while (!frontier.empty()) {
        const LatticeCoord p = frontier.front();
        frontier.pop_front();
        const int here = dist[*slot(p)];
        for (LatticeCoord off : unit_offsets(kind)) {
            const LatticeCoord q = p + off;
            const auto s = slot(q);
            if (!s || dist[*s] >= 0)
                continue;
            dist[*s] = here + 1;
            if (q == b)
                return here + 1;
            frontier.push_back(q);
        }
    }
    fail(ErrorCode::OracleFailure, "bfs_distance: target not reached within search radius " +
                                       std::to_string(search_radius));
}

std::vector<LatticeCoord> neighbors(LatticeKind kind, LatticeCoord p)
{
    std::vector<LatticeCoord> out;
    for (LatticeCoord off : unit_offsets(kind))
        out.push_back(p + off);
    return out;
}

std::vector<LatticeCoord> neighbors(LatticeKind kind, LatticeCoord p, const NetworkExtent& extent)
{
    std::vector<LatticeCoord> out;
    for (LatticeCoord off : unit_offsets(kind)) {
        if (extent.contains(p + off))
            out.push_back(p + off);
    }
    return out;
}

Point embed(LatticeKind kind, LatticeCoord p, double spacing)
{
    if (!(spacing > 0.0))
        fail(ErrorCode::InvalidArgument, "embed: spacing must be positive");
    if (kind == LatticeKind::Hexagonal) {
        // e2 = (cos 2pi/3, sin 2pi/3)
        constexpr double e2x = -0.5;
        constexpr double e2y = std::numbers::sqrt3 / 2.0;
        return {spacing * (p.x + p.y * e2x), spacing * (p.y * e2y)};
    }
    return {spacing * p.x, spacing * p.y};
}

// --- NetworkExtent ----------------------------------------------------------

NetworkExtent NetworkExtent::box(int x0, int y0, int x1, int y1)
{
    NetworkExtent e;
    e.x0_ = x0;
    e.y0_ = y0;
    e.x1_ = x1;
    e.y1_ = y1;
    e.width_ = std::max(0, x1 - x0 + 1);
    e.height_ = std::max(0, y1 - y0 + 1);
    if (e.width_ == 0 || e.height_ == 0) {
        e.width_ = e.height_ = 0;
        e.x1_ = x0 - 1;
        e.y1_ = y0 - 1;
    }
    e.count_ = static_cast<std::size_t>(e.width_) * static_cast<std::size_t>(e.height_);
    return e;
}

NetworkExtent NetworkExtent::from_dims(int width, int height)
{
    if (width < 0 || height < 0)
        fail(ErrorCode::InvalidArgument, "extent dimensions must be nonnegative");
    return box(0, 0, width - 1, height - 1);
}

NetworkExtent NetworkExtent::with_node_count(std::size_t n)
{
    if (n == 0)
        return from_dims(0, 0);
    auto width = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    while (width * width < n)
        ++width;
    const std::size_t height = (n + width - 1) / width;
    NetworkExtent e = box(0, 0, static_cast<int>(width) - 1, static_cast<int>(height) - 1);
    e.count_ = n;
    return e;
}

NetworkExtent NetworkExtent::truncated(std::size_t n) const
{
    NetworkExtent e = *this;
    e.count_ = std::min(n, count_);
    return e;
}

std::optional<std::size_t> NetworkExtent::index_of(LatticeCoord p) const
{
    if (p.x < x0_ || p.x > x1_ || p.y < y0_ || p.y > y1_)
        return std::nullopt;
    const std::size_t idx = static_cast<std::size_t>(p.y - y0_) * width_ + static_cast<std::size_t>(p.x - x0_);
    if (idx >= count_)
        return std::nullopt;
    return idx;
}

LatticeCoord NetworkExtent::node(std::size_t index) const
{
    if (index >= count_)
        fail(ErrorCode::InvalidArgument, "extent node index out of range");
    return {x0_ + static_cast<int>(index % width_), y0_ + static_cast<int>(index / width_)};
}

std::vector<LatticeCoord> NetworkExtent::nodes() const
{
    std::vector<LatticeCoord> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < count_; ++i)
        out.push_back(node(i));
    return out;
}

// --- BasisSection -----------------------------------------------------------

BasisSection BasisSection::rhombus(int side, LatticeCoord origin)
{
    if (side < 0)
        fail(ErrorCode::InvalidArgument, "rhombus side must be nonnegative");
    return {SectionShape::Rhombus, side, side + 1, origin};
}

BasisSection BasisSection::rhomboid(int length, int rows, LatticeCoord origin)
{
    if (length < 0 || rows < 1)
        fail(ErrorCode::InvalidArgument, "rhomboid needs length >= 0 and rows >= 1");
    return {SectionShape::Rhomboid, length, rows, origin};
}

BasisSection BasisSection::rectangle(int length, int rows, LatticeCoord origin)
{
    if (length < 0 || rows < 1)
        fail(ErrorCode::InvalidArgument, "rectangle needs length >= 0 and rows >= 1");
    return {SectionShape::Rectangle, length, rows, origin};
}

LatticeKind BasisSection::lattice() const
{
    return shape == SectionShape::Rhombus ? LatticeKind::Hexagonal : LatticeKind::SquareGrid;
}

bool BasisSection::contains(LatticeCoord q) const
{
    const LatticeCoord r = q - origin;
    if (r.y < 0 || r.y >= rows)
        return false;
    switch (shape) {
    case SectionShape::Rhombus:
    case SectionShape::Rectangle:
        return r.x >= 0 && r.x <= length;
    case SectionShape::Rhomboid:
        return r.x + r.y >= 0 && r.x + r.y <= length;
    }
    return false;
}

std::size_t BasisSection::point_count() const
{
    return static_cast<std::size_t>(length + 1) * static_cast<std::size_t>(rows);
}

std::vector<LatticeCoord> BasisSection::points() const
{
    std::vector<LatticeCoord> out;
    out.reserve(point_count());
    for (int r = 0; r < rows; ++r) {
        const int start = shape == SectionShape::Rhomboid ? -r : 0;
        for (int c = 0; c <= length; ++c)
            out.push_back(origin + LatticeCoord{start + c, r});
    }
    return out;
}

std::vector<LatticeCoord> ring_points(const BasisSection& section, int l)
{
    if (l < 0)
        fail(ErrorCode::InvalidArgument, "ring_points: l must be nonnegative");
    std::vector<LatticeCoord> out;
    for (LatticeCoord q : section.points()) {
        if (graph_distance(section.lattice(), section.origin, q) == l)
            out.push_back(q);
    }
    return out;
}

// --- SectionTiling ----------------------------------------------------------

SectionTiling SectionTiling::rhombus(int side) { return SectionTiling(BasisSection::rhombus(side)); }

SectionTiling SectionTiling::rhomboid(int length, int rows)
{
    return SectionTiling(BasisSection::rhomboid(length, rows));
}

SectionTiling SectionTiling::shifted_rectangles(int length, int rows, int shift)
{
    return SectionTiling(BasisSection::rectangle(length, rows), shift);
}

SectionTiling SectionTiling::for_schedule(LatticeKind kind, int k)
{
    if (k < 1)
        fail(ErrorCode::InvalidArgument, "k must be at least 1");
    if (kind == LatticeKind::Hexagonal)
        return rhombus(k);
    const int h = ceil_half(k + 1);
    return shifted_rectangles(k, h, h);
}

SectionTiling::Placement SectionTiling::locate(LatticeCoord p) const
{
    const int period = prototype_.length + 1;
    const int rows = prototype_.rows;
    LatticeCoord origin{};
    switch (prototype_.shape) {
    case SectionShape::Rhombus:
        origin = {floor_div(p.x, period) * period, floor_div(p.y, period) * period};
        break;
    case SectionShape::Rhomboid: {
        // Translations (period, 0) and (-rows, rows); the second preserves x + y.
        const int m = floor_div(p.y, rows);
        const int n = floor_div(p.x + p.y, period);
        origin = {n * period - m * rows, m * rows};
        break;
    }
    case SectionShape::Rectangle: {
        const int m = floor_div(p.y, rows);
        const int shift = floor_mod(m, 2) * shift_;
        const int n = floor_div(p.x + shift, period);
        origin = {n * period - shift, m * rows};
        break;
    }
    }
    return {origin, p - origin};
}

BasisSection SectionTiling::replica_at(LatticeCoord origin) const
{
    BasisSection s = prototype_;
    s.origin = origin;
    return s;
}

std::vector<LatticeCoord> SectionTiling::replicas_covering(const NetworkExtent& extent) const
{
    std::set<LatticeCoord> origins;
    for (std::size_t i = 0; i < extent.size(); ++i)
        origins.insert(locate(extent.node(i)).origin);
    return {origins.begin(), origins.end()};
}

std::vector<LatticeCoord> coset(LatticeKind kind, int k, LatticeCoord p, const NetworkExtent& extent)
{
    const SectionTiling tiling = SectionTiling::for_schedule(kind, k);
    const LatticeCoord target = tiling.locate(p).offset;
    std::vector<LatticeCoord> out;
    for (std::size_t i = 0; i < extent.size(); ++i) {
        const LatticeCoord q = extent.node(i);
        if (tiling.locate(q).offset == target)
            out.push_back(q);
    }
    return out;
}

}  // namespace latsched
