#include "latsched/scheduler.hpp"

#include "latsched/error.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <string>

namespace latsched {

InterferenceK::InterferenceK(int k) : k_(k)
{
    if (k < 1)
        fail(ErrorCode::InvalidArgument, "interference hop count k must be >= 1 (got " + std::to_string(k) + ")");
}

int hex_slot(LatticeCoord p, InterferenceK k)
{
    const int period = k.value() + 1;
    const int u = floor_mod(p.x, period);
    const int v = floor_mod(p.y, period);
    return u + period * v;
}

int square_slot(LatticeCoord p, InterferenceK k)
{
    const int period = k.value() + 1;
    const int h = (period + 1) / 2;
    const int b = floor_mod(floor_div(p.y, h), 2);
    const int u = floor_mod(p.x + b * h, period);
    const int v = floor_mod(p.y, h);
    return u + period * v;
}

int slot_of(LatticeKind kind, LatticeCoord p, InterferenceK k)
{
    return kind == LatticeKind::Hexagonal ? hex_slot(p, k) : square_slot(p, k);
}

int frame_length(LatticeKind kind, InterferenceK k)
{
    const int period = k.value() + 1;
    if (kind == LatticeKind::Hexagonal)
        return period * period;
    return period * ((period + 1) / 2);
}

Schedule::Schedule(LatticeKind kind, InterferenceK k, int frame_length, std::vector<SlotAssignment> assignments)
    : kind_(kind), k_(k), frame_length_(frame_length), assignments_(std::move(assignments))
{
    if (frame_length < 1)
        fail(ErrorCode::InvalidArgument, "frame length must be positive");
    order_.resize(assignments_.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [this](std::size_t a, std::size_t b) {
        return assignments_[a].node < assignments_[b].node;
    });
}

std::optional<int> Schedule::slot_of(LatticeCoord p) const
{
    auto it = std::lower_bound(order_.begin(), order_.end(), p,
                               [this](std::size_t i, LatticeCoord q) { return assignments_[i].node < q; });
    if (it == order_.end() || assignments_[*it].node != p)
        return std::nullopt;
    return assignments_[*it].slot;
}

Schedule build_schedule(LatticeKind kind, InterferenceK k, const NetworkExtent& extent)
{
    std::vector<SlotAssignment> assignments;
    assignments.reserve(extent.size());
    for (std::size_t i = 0; i < extent.size(); ++i) {
        const LatticeCoord p = extent.node(i);
        assignments.push_back({p, slot_of(kind, p, k)});
    }
    return Schedule(kind, k, frame_length(kind, k), std::move(assignments));
}

namespace {

int min_receiver_distance(LatticeKind kind, LatticeCoord transmitter, LatticeCoord other)
{
    int best = std::numeric_limits<int>::max();
    for (LatticeCoord r : neighbors(kind, transmitter))
        best = std::min(best, graph_distance(kind, r, other));
    return best;
}

}  // namespace

ConflictKind classify_conflict(LatticeKind kind, InterferenceK k, LatticeCoord a, LatticeCoord b)
{
    if (a == b)
        return ConflictKind::None;
    if (k.value() == 1 && graph_distance(kind, a, b) == 1)
        return ConflictKind::Primary;
    if (min_receiver_distance(kind, a, b) < k.value() || min_receiver_distance(kind, b, a) < k.value())
        return ConflictKind::KHop;
    return ConflictKind::None;
}

bool transmitters_conflict(LatticeKind kind, InterferenceK k, LatticeCoord a, LatticeCoord b)
{
    return classify_conflict(kind, k, a, b) != ConflictKind::None;
}

std::string_view to_string(Violation::Reason reason)
{
    switch (reason) {
    case Violation::Reason::KHop: return "k-hop";
    case Violation::Reason::Primary: return "primary";
    case Violation::Reason::Coverage: return "coverage";
    case Violation::Reason::Duplicate: return "duplicate";
    case Violation::Reason::SlotRange: return "slot-range";
    }
    return "unknown";
}

std::size_t VerificationReport::count(Violation::Reason reason) const
{
    return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                  [reason](const Violation& v) { return v.reason == reason; }));
}

VerificationReport verify_schedule(const Schedule& schedule, const NetworkExtent& extent)
{
    VerificationReport report;
    const int frame = schedule.frame_length();

    // Coverage: every extent node exactly once, with a slot inside the frame.
    std::vector<int> seen(extent.size(), 0);
    std::map<int, std::vector<LatticeCoord>> by_slot;
    for (const SlotAssignment& a : schedule.assignments()) {
        if (a.slot < 0 || a.slot >= frame) {
            report.violations.push_back({Violation::Reason::SlotRange, a.slot, a.node, std::nullopt});
            continue;
        }
        if (const auto idx = extent.index_of(a.node)) {
            if (++seen[*idx] == 2)
                report.violations.push_back({Violation::Reason::Duplicate, a.slot, a.node, std::nullopt});
            if (seen[*idx] >= 2)
                continue;
        }
        by_slot[a.slot].push_back(a.node);
    }
    for (std::size_t i = 0; i < extent.size(); ++i) {
        if (seen[i] == 0)
            report.violations.push_back({Violation::Reason::Coverage, -1, extent.node(i), std::nullopt});
    }

    for (auto& [slot, group] : by_slot) {
        std::sort(group.begin(), group.end());
        for (std::size_t i = 0; i < group.size(); ++i) {
            for (std::size_t j = i + 1; j < group.size(); ++j) {
                if (group[i] == group[j]) {
                    report.violations.push_back({Violation::Reason::Duplicate, slot, group[i], group[j]});
                    continue;
                }
                switch (classify_conflict(schedule.kind(), schedule.k(), group[i], group[j])) {
                case ConflictKind::None: break;
                case ConflictKind::KHop:
                    report.violations.push_back({Violation::Reason::KHop, slot, group[i], group[j]});
                    break;
                case ConflictKind::Primary:
                    report.violations.push_back({Violation::Reason::Primary, slot, group[i], group[j]});
                    break;
                }
            }
        }
    }
    return report;
}

std::vector<LatticeCoord> concurrent_set(const Schedule& schedule, int slot, const NetworkExtent& extent)
{
    if (slot < 0 || slot >= schedule.frame_length())
        fail(ErrorCode::InvalidArgument, "slot " + std::to_string(slot) + " outside frame of length " +
                                             std::to_string(schedule.frame_length()));
    std::vector<LatticeCoord> out;
    for (const SlotAssignment& a : schedule.assignments()) {
        if (a.slot == slot && extent.contains(a.node))
            out.push_back(a.node);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace latsched
