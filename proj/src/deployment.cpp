#include "latsched/deployment.hpp"

#include "latsched/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <string>

namespace latsched {

double max_displacement_radius(double dd_target)
{
    if (!(dd_target >= 1.0))
        fail(ErrorCode::InvalidArgument, "D/d target must be >= 1");
    return (dd_target - 1.0) / (2.0 * (dd_target + 1.0));
}

double nominal_spacing_for(double dd_target) { return 1.0 - 2.0 * max_displacement_radius(dd_target); }

Point Deployment::position(LatticeCoord p) const
{
    const auto idx = extent.index_of(p);
    if (!idx)
        fail(ErrorCode::InvalidArgument, "node outside the deployment extent");
    return positions[*idx];
}

Deployment::NeighborRange Deployment::realized_neighbor_range() const
{
    NeighborRange range{std::numeric_limits<double>::infinity(), 0.0};
    for (std::size_t i = 0; i < extent.size(); ++i) {
        const LatticeCoord p = extent.node(i);
        for (LatticeCoord q : neighbors(kind, p, extent)) {
            if (q < p)
                continue;
            const double dist = euclidean_distance(positions[i], position(q));
            range.min = std::min(range.min, dist);
            range.max = std::max(range.max, dist);
        }
    }
    if (range.max == 0.0)
        range.min = 0.0;
    return range;
}

Deployment generate(LatticeKind kind, const NetworkExtent& extent, double dd_target, std::uint64_t seed)
{
    Deployment dep;
    dep.kind = kind;
    dep.extent = extent;
    dep.dd_target = dd_target;
    dep.seed = seed;
    dep.nominal_spacing = nominal_spacing_for(dd_target);
    dep.positions.reserve(extent.size());

    Rng rng(seed);
    for (std::size_t i = 0; i < extent.size(); ++i) {
        const double u = rng.uniform(0.0, dd_target - 1.0);
        const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const double radius = u / (2.0 * (2.0 + u));
        const Point base = embed(kind, extent.node(i), dep.nominal_spacing);
        dep.positions.push_back({base.x + radius * std::cos(angle), base.y + radius * std::sin(angle)});
    }
    return dep;
}

void CompensatedSum::add(double value)
{
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value))
        compensation_ += (sum_ - t) + value;
    else
        compensation_ += (value - t) + sum_;
    sum_ = t;
}

void summarize(RhoReport& report)
{
    report.empty = report.records.empty();
    report.violations = 0;
    if (report.empty) {
        report.min_rho = report.avg_rho = 0.0;
        return;
    }
    CompensatedSum sum;
    double lowest = std::numeric_limits<double>::infinity();
    for (const RhoRecord& r : report.records) {
        sum.add(r.rho);
        lowest = std::min(lowest, r.rho);
        if (r.rho < 1.0)
            ++report.violations;
    }
    report.min_rho = lowest;
    report.avg_rho = sum.value() / static_cast<double>(report.records.size());
}

RhoReport evaluate(const Deployment& deployment, const Schedule& schedule, const SinrParams& params)
{
    params.validate();
    if (deployment.kind != schedule.kind())
        fail(ErrorCode::InvalidArgument, "deployment and schedule use different lattices");

    std::map<int, std::vector<LatticeCoord>> by_slot;
    for (const SlotAssignment& a : schedule.assignments()) {
        if (deployment.extent.contains(a.node))
            by_slot[a.slot].push_back(a.node);
    }

    const double half_gamma = params.gamma / 2.0;
    auto gain_sq = [&](Point a, Point b) {
        const double dx = a.x - b.x;
        const double dy = a.y - b.y;
        const double d2 = dx * dx + dy * dy;
        if (!(d2 > 0.0))
            fail(ErrorCode::Domain, "coincident transmitter and receiver positions");
        return std::pow(d2, -half_gamma);
    };

    RhoReport report;
    std::vector<Point> tx_pos;
    for (auto& [slot, group] : by_slot) {
        std::sort(group.begin(), group.end());
        group.erase(std::unique(group.begin(), group.end()), group.end());
        tx_pos.clear();
        for (LatticeCoord t : group)
            tx_pos.push_back(deployment.position(t));

        for (std::size_t a = 0; a < group.size(); ++a) {
            for (LatticeCoord r : neighbors(deployment.kind, group[a], deployment.extent)) {
                const Point rp = deployment.position(r);
                const double signal = params.P * gain_sq(tx_pos[a], rp);
                double interference = 0.0;
                for (std::size_t b = 0; b < group.size(); ++b) {
                    if (b != a)
                        interference += gain_sq(tx_pos[b], rp);
                }
                const double sinr = signal / (params.P * interference + params.eta);
                report.records.push_back({slot, group[a], r, sinr, sinr / params.beta});
            }
        }
    }
    summarize(report);
    return report;
}

std::string_view to_string(OperatingPoint::Status status)
{
    switch (status) {
    case OperatingPoint::Status::Interior: return "interior";
    case OperatingPoint::Status::Degenerate: return "degenerate";
    case OperatingPoint::Status::Boundary: return "boundary";
    }
    return "unknown";
}

OperatingPoint operating_point(LatticeKind kind, double gamma, InterferenceK k, double f)
{
    if (!(gamma > 2.0))
        fail(ErrorCode::Domain, "path-loss exponent gamma must exceed 2");
    if (!(f >= 0.0 && f <= 1.0))
        fail(ErrorCode::InvalidArgument, "operating fraction f must lie in [0, 1]");

    OperatingPoint op;
    op.f = f;
    op.beta_max = beta_max(kind, gamma, k);
    op.beta = f * op.beta_max;
    if (f == 0.0) {
        op.status = OperatingPoint::Status::Degenerate;
        op.dd = 1.0;
        op.dd_max_at_beta = std::numeric_limits<double>::infinity();
        return op;
    }
    op.dd_max_at_beta = dd_max(kind, op.beta, gamma, k);
    if (f == 1.0) {
        op.status = OperatingPoint::Status::Boundary;
        op.dd = 1.0;
        op.dd_max_at_beta = 1.0;
        return op;
    }
    op.dd = 1.0 + f * (op.dd_max_at_beta - 1.0);
    op.status = op.dd_max_at_beta > 1.0 ? OperatingPoint::Status::Interior : OperatingPoint::Status::Boundary;
    return op;
}

}  // namespace latsched
