#pragma once

#include "latsched/lattice.hpp"
#include "latsched/scheduler.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace latsched {

/// Conflict graph over a finite node set: an edge joins two nodes that cannot share a slot
/// under the k-hop rule (see transmitters_conflict). Irreflexive and symmetric.
class InterferenceGraph {
public:
    InterferenceGraph(std::vector<LatticeCoord> nodes, std::vector<std::uint8_t> adjacency);

    std::size_t size() const { return nodes_.size(); }
    const std::vector<LatticeCoord>& nodes() const { return nodes_; }
    bool conflicts(std::size_t i, std::size_t j) const { return adjacency_[i * nodes_.size() + j] != 0; }
    std::size_t degree(std::size_t i) const;
    std::size_t edge_count() const;

private:
    std::vector<LatticeCoord> nodes_;
    std::vector<std::uint8_t> adjacency_;
};

InterferenceGraph build_interference_graph(LatticeKind kind, InterferenceK k, const NetworkExtent& extent);

/// Closed-form clique number of the interference graph.
///   hex, even k:    3(k/2)^2 + 3(k/2) + 1
///   hex, odd k:     1 + sum_{i=1}^{(k-1)/2} 6i + 3(k+1)/2 - 1
///   square, even k: k^2/2 + k + 1
///   square, odd k:  (k+1)^2/2
int clique_number_formula(LatticeKind kind, InterferenceK k);

/// Smallest box around the origin that contains a maximum clique: [-k, k]^2.
NetworkExtent clique_witness_extent(InterferenceK k);

struct CliqueResult {
    std::size_t size = 0;
    std::vector<LatticeCoord> witness;
};

constexpr std::size_t kDefaultCliqueBudget = 200;

/// Exact maximum clique by branch and bound with greedy-colouring bounds.
/// Throws ErrorCode::BudgetExceeded when the graph has more than `node_budget` nodes.
CliqueResult brute_force_max_clique(const InterferenceGraph& graph, std::size_t node_budget = kDefaultCliqueBudget);

/// Exact nonnegative rational, always stored in lowest terms.
class Ratio {
public:
    Ratio(std::int64_t num, std::int64_t den);
    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend bool operator==(const Ratio&, const Ratio&) = default;
    friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b)
    {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

private:
    std::int64_t num_;
    std::int64_t den_;
};

/// frame_length / clique_number_formula.
Ratio approximation_ratio(LatticeKind kind, InterferenceK k);

}  // namespace latsched
