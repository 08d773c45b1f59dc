#include "latsched/interference.hpp"

#include "latsched/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace latsched {

InterferenceGraph::InterferenceGraph(std::vector<LatticeCoord> nodes, std::vector<std::uint8_t> adjacency)
    : nodes_(std::move(nodes)), adjacency_(std::move(adjacency))
{
    if (adjacency_.size() != nodes_.size() * nodes_.size())
        fail(ErrorCode::InvalidArgument, "adjacency matrix size does not match node count");
}

std::size_t InterferenceGraph::degree(std::size_t i) const
{
    std::size_t d = 0;
    for (std::size_t j = 0; j < size(); ++j)
        d += conflicts(i, j) ? 1 : 0;
    return d;
}

std::size_t InterferenceGraph::edge_count() const
{
    std::size_t total = 0;
    for (std::size_t i = 0; i < size(); ++i)
        total += degree(i);
    return total / 2;
}

InterferenceGraph build_interference_graph(LatticeKind kind, InterferenceK k, const NetworkExtent& extent)
{
    if (extent.empty())
        fail(ErrorCode::InvalidArgument, "interference graph needs a non-empty extent");
    std::vector<LatticeCoord> nodes = extent.nodes();
    const std::size_t n = nodes.size();
    std::vector<std::uint8_t> adj(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (transmitters_conflict(kind, k, nodes[i], nodes[j]))
                adj[i * n + j] = adj[j * n + i] = 1;
        }
    }
    return InterferenceGraph(std::move(nodes), std::move(adj));
}

int clique_number_formula(LatticeKind kind, InterferenceK kk)
{
    const int k = kk.value();
    if (kind == LatticeKind::Hexagonal) {
        if (k % 2 == 0) {
            const int m = k / 2;
            return 3 * m * m + 3 * m + 1;
        }
        int total = 1;
        for (int i = 1; i <= (k - 1) / 2; ++i)
            total += 6 * i;
        return total + 3 * (k + 1) / 2 - 1;
    }
    if (k % 2 == 0)
        return k * k / 2 + k + 1;
    return (k + 1) * (k + 1) / 2;
}

NetworkExtent clique_witness_extent(InterferenceK k)
{
    return NetworkExtent::box(-k.value(), -k.value(), k.value(), k.value());
}

namespace {

// Bitset-based MCQ-style search (Tomita & Seki). Vertices are re-coloured greedily at each
// level; a branch is cut when |current| + colour bound cannot beat the incumbent.
class CliqueSearch {
public:
    explicit CliqueSearch(const InterferenceGraph& g) : n_(g.size()), words_((n_ + 63) / 64), adj_(n_ * words_, 0)
    {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (g.conflicts(i, j))
                    adj_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    }

    std::vector<std::size_t> run()
    {
        Bits all(words_, 0);
        for (std::size_t i = 0; i < n_; ++i)
            all[i / 64] |= std::uint64_t{1} << (i % 64);
        current_.clear();
        best_.clear();
        expand(all);
        return best_;
    }

private:
    using Bits = std::vector<std::uint64_t>;

    static bool any(const Bits& b)
    {
        return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
    }

    static bool test(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1u; }
    static void reset(Bits& b, std::size_t i) { b[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

    const std::uint64_t* row(std::size_t v) const { return adj_.data() + v * words_; }

    // Greedy sequential colouring; returns vertices in colour order with their colour numbers.
    void colour(const Bits& candidates, std::vector<std::size_t>& order, std::vector<std::size_t>& colours) const
    {
        order.clear();
        colours.clear();
        Bits uncoloured = candidates;
        std::size_t colour_number = 0;
        while (any(uncoloured)) {
            ++colour_number;
            Bits available = uncoloured;
            while (any(available)) {
                std::size_t v = 0;
                for (std::size_t w = 0; w < words_; ++w) {
                    if (available[w]) {
                        v = w * 64 + static_cast<std::size_t>(std::countr_zero(available[w]));
                        break;
                    }
                }
                reset(available, v);
                reset(uncoloured, v);
                const std::uint64_t* nv = row(v);
                for (std::size_t w = 0; w < words_; ++w)
                    available[w] &= ~nv[w];
                order.push_back(v);
                colours.push_back(colour_number);
            }
        }
    }

    void expand(Bits candidates)
    {
        std::vector<std::size_t> order;
        std::vector<std::size_t> colours;
        colour(candidates, order, colours);
        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (current_.size() + colours[idx] <= best_.size())
                return;
            const std::size_t v = order[idx];
            current_.push_back(v);
            Bits next(words_);
            const std::uint64_t* nv = row(v);
            for (std::size_t w = 0; w < words_; ++w)
                next[w] = candidates[w] & nv[w];
            if (any(next))
                expand(next);
            else if (current_.size() > best_.size())
                best_ = current_;
            current_.pop_back();
            reset(candidates, v);
        }
    }

    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_;
};

}  // namespace

CliqueResult brute_force_max_clique(const InterferenceGraph& graph, std::size_t node_budget)
{
    if (graph.size() > node_budget)
        fail(ErrorCode::BudgetExceeded, "max-clique search refused: " + std::to_string(graph.size()) +
                                            " nodes exceeds budget of " + std::to_string(node_budget));
    CliqueResult result;
    if (graph.size() == 0)
        return result;
    CliqueSearch search(graph);
    const std::vector<std::size_t> best = search.run();
    result.size = best.size();
    for (std::size_t v : best)
        result.witness.push_back(graph.nodes()[v]);
    std::sort(result.witness.begin(), result.witness.end());
    return result;
}

Ratio::Ratio(std::int64_t num, std::int64_t den)
{
    if (den <= 0 || num < 0)
        fail(ErrorCode::InvalidArgument, "ratio needs num >= 0 and den > 0");
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Ratio approximation_ratio(LatticeKind kind, InterferenceK k)
{
    return Ratio(frame_length(kind, k), clique_number_formula(kind, k));
}

}  // namespace latsched
