#pragma once

#include "latsched/deployment.hpp"

#include <cstdint>
#include <optional>

namespace latsched {

/// One point of the evaluation pipeline: operating point -> power -> schedule ->
/// perturbed deployment -> per-receiver SINR.
struct SimulationConfig {
    LatticeKind kind = LatticeKind::Hexagonal;
    InterferenceK k{2};
    double gamma = 3.0;
    double f = 0.5;
    double eta = 1.0;
    NetworkExtent extent = NetworkExtent::with_node_count(4000);
    std::uint64_t seed = 1;
    double power_margin = 1e-3;  ///< P = threshold * (1 + power_margin)

    /// When both are set, (beta, D/d) are held at these values instead of being derived
    /// from f; used for k sweeps at a fixed physical operating point.
    std::optional<double> fixed_beta;
    std::optional<double> fixed_dd;
};

struct SimulationResult {
    OperatingPoint point;  ///< derived from f, even when a fixed point overrides it
    double beta = 0.0;
    double dd = 1.0;
    double power = 0.0;
    SinrParams params;
    Deployment deployment;
    Deployment::NeighborRange realized;
    RhoReport report;
};

/// Throws ErrorCode::Infeasible when the operating point is degenerate, on the boundary,
/// or admits no finite transmit power.
SimulationResult simulate(const SimulationConfig& config);

}  // namespace latsched
