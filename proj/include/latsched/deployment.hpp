#pragma once

#include "latsched/lattice.hpp"
#include "latsched/scheduler.hpp"
#include "latsched/sinr.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace latsched {

/// Seedable generator with a fixed, documented output sequence: std::mt19937_64, with
/// uniform doubles taken from the top 53 bits of each 64-bit draw. Standard library
/// distributions are avoided because their algorithms differ between implementations.
class Rng {
public:
    static constexpr std::string_view kName = "mt19937_64/u53";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform on [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

private:
    std::mt19937_64 engine_;
};

/// Largest displacement radius for a target D/d: (dd-1) / (2(dd+1)).
double max_displacement_radius(double dd_target);
/// Lattice spacing that puts the largest realizable neighbor distance at D = 1: 1 - 2 r_max.
double nominal_spacing_for(double dd_target);

/// Lattice nodes at randomly perturbed physical positions, in normalized units (D = 1).
struct Deployment {
    LatticeKind kind = LatticeKind::Hexagonal;
    NetworkExtent extent;
    double nominal_spacing = 1.0;
    double dd_target = 1.0;
    std::uint64_t seed = 0;
    std::vector<Point> positions;  ///< indexed like extent.node(i)

    Point position(LatticeCoord p) const;

    struct NeighborRange {
        double min = 0.0;
        double max = 0.0;
    };
    /// Shortest and longest realized distance over all neighboring pairs in the extent.
    NeighborRange realized_neighbor_range() const;
};

/// Each node is moved off its embedded lattice point by radius u/(2(2+u)) at a uniform
/// angle, with u ~ Uniform[0, dd_target - 1]. Draw order per node: u, then the angle.
Deployment generate(LatticeKind kind, const NetworkExtent& extent, double dd_target, std::uint64_t seed);

struct RhoRecord {
    int slot = 0;
    LatticeCoord tx;
    LatticeCoord rx;
    double sinr = 0.0;
    double rho = 0.0;
};

struct RhoReport {
    std::vector<RhoRecord> records;
    double min_rho = 0.0;
    double avg_rho = 0.0;
    std::size_t violations = 0;  ///< records with rho < 1
    bool empty = true;           ///< no transmitter had a receiver
};

/// Neumaier-compensated summation.
class CompensatedSum {
public:
    void add(double value);
    double value() const { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

/// Recomputes min, mean (compensated, in record order) and the violation count.
void summarize(RhoReport& report);

/// SINR at every lattice neighbor (inside the extent) of every scheduled transmitter, with
/// interference from all other transmitters of the same slot at their perturbed positions.
/// Uses params.P, beta, gamma and eta.
RhoReport evaluate(const Deployment& deployment, const Schedule& schedule, const SinrParams& params);

struct OperatingPoint {
    enum class Status { Interior, Degenerate, Boundary };
    Status status = Status::Degenerate;
    double f = 0.0;
    double beta = 0.0;        ///< f * beta_max
    double dd = 1.0;          ///< 1 + f ((D/d)_max at beta - 1)
    double beta_max = 0.0;
    double dd_max_at_beta = 1.0;

    bool interior() const { return status == Status::Interior; }
};

std::string_view to_string(OperatingPoint::Status status);

/// Operating point parameterized by the fraction f in [0, 1] of the feasibility region.
/// f = 0 is the degenerate regular/no-threshold point and f = 1 lies on the boundary.
OperatingPoint operating_point(LatticeKind kind, double gamma, InterferenceK k, double f);

}  // namespace latsched
