#pragma once

#include "latsched/lattice.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace latsched {

/// Hop radius of the k-hop interference model; always >= 1.
class InterferenceK {
public:
    explicit InterferenceK(int k);
    int value() const { return k_; }
    friend bool operator==(InterferenceK, InterferenceK) = default;

private:
    int k_;
};

/// t = (x mod (k+1)) + (k+1) (y mod (k+1)).
int hex_slot(LatticeCoord p, InterferenceK k);

/// With h = ceil((k+1)/2): b = floor(y/h) mod 2, u = (x + b h) mod (k+1), v = y mod h,
/// t = u + (k+1) v.
int square_slot(LatticeCoord p, InterferenceK k);

int slot_of(LatticeKind kind, LatticeCoord p, InterferenceK k);

/// (k+1)^2 for hexagonal, (k+1) ceil((k+1)/2) for square.
int frame_length(LatticeKind kind, InterferenceK k);

struct SlotAssignment {
    LatticeCoord node;
    int slot = 0;
};

/// Node-to-slot map for one frame. Assignments are kept in insertion order so that
/// schedules loaded from files can carry duplicates into verification.
class Schedule {
public:
    Schedule(LatticeKind kind, InterferenceK k, int frame_length, std::vector<SlotAssignment> assignments);

    LatticeKind kind() const { return kind_; }
    InterferenceK k() const { return k_; }
    int frame_length() const { return frame_length_; }
    const std::vector<SlotAssignment>& assignments() const { return assignments_; }
    std::size_t size() const { return assignments_.size(); }

    /// Slot of the first assignment for p.
    std::optional<int> slot_of(LatticeCoord p) const;

private:
    LatticeKind kind_;
    InterferenceK k_;
    int frame_length_;
    std::vector<SlotAssignment> assignments_;
    std::vector<std::size_t> order_;  // indices into assignments_, sorted by node
};

Schedule build_schedule(LatticeKind kind, InterferenceK k, const NetworkExtent& extent);

/// The pairwise rule shared by verification and the interference graph: two distinct
/// concurrent transmitters collide if some lattice neighbor of one (a potential receiver)
/// is fewer than k hops from the other. For k = 1 adjacency is flagged as a primary conflict.
/// Every lattice neighbor counts as a receiver, whether or not it lies in a given extent.
enum class ConflictKind { None, KHop, Primary };
ConflictKind classify_conflict(LatticeKind kind, InterferenceK k, LatticeCoord a, LatticeCoord b);
bool transmitters_conflict(LatticeKind kind, InterferenceK k, LatticeCoord a, LatticeCoord b);

struct Violation {
    enum class Reason { KHop, Primary, Coverage, Duplicate, SlotRange };
    Reason reason;
    int slot = -1;  ///< -1 when the node has no slot (coverage)
    LatticeCoord a{};
    std::optional<LatticeCoord> b;
};

std::string_view to_string(Violation::Reason reason);

struct VerificationReport {
    std::vector<Violation> violations;
    bool valid() const { return violations.empty(); }
    std::size_t count(Violation::Reason reason) const;
};

/// Checks NSP coverage (every extent node exactly once, slots in range) and the pairwise
/// interference rule within every slot.
VerificationReport verify_schedule(const Schedule& schedule, const NetworkExtent& extent);

/// Extent nodes scheduled in `slot`, in row-major order.
std::vector<LatticeCoord> concurrent_set(const Schedule& schedule, int slot, const NetworkExtent& extent);

}  // namespace latsched
