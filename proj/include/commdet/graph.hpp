#ifndef COMMDET_GRAPH_HPP
#define COMMDET_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace commdet {

using NodeId = std::uint32_t;

// One adjacency-row entry: `count` is the adjacency matrix element A_ij,
// i.e. the number of parallel edges to `node`, except on the diagonal where
// each self-edge contributes 2 (so k_i is always the plain row sum).
struct NeighborEntry {
    NodeId node;
    std::int64_t count;
};

// Immutable undirected multigraph. Self-edges and multiedges are first-class;
// all edge statistics are exact integers. Safe for concurrent reads.
class Graph {
public:
    // Builds from unordered node-index pairs. A pair (i,i) is one self-edge:
    // it adds 2 to A_ii and k_i, and 1 to m. `n` must cover every index used;
    // nodes that appear in no pair are isolated. `names`, when given, carries
    // the original string ids (size n).
    Graph(NodeId n, std::span<const std::pair<NodeId, NodeId>> edge_pairs,
          std::vector<std::string> names = {});

    NodeId node_count() const { return n_; }
    std::int64_t edge_count() const { return m_; }
    std::int64_t degree(NodeId i) const { return degree_[i]; }
    const std::vector<std::int64_t>& degrees() const { return degree_; }

    // A_ij (diagonal doubled). O(log deg).
    std::int64_t adjacency_count(NodeId i, NodeId j) const;

    // Row of nonzero A_ij entries, sorted by neighbor index.
    std::span<const NeighborEntry> neighbors(NodeId i) const {
        return {nbr_.data() + row_[i], nbr_.data() + row_[i + 1]};
    }

    bool has_names() const { return !names_.empty(); }
    std::string node_name(NodeId i) const {
        return names_.empty() ? std::to_string(i) : names_[i];
    }

    // Each edge once, i <= j, with multiplicity (self-edges at count
    // A_ii / 2). Canonical listing used by the edge-list writer and by
    // determinism checks.
    std::vector<std::pair<std::pair<NodeId, NodeId>, std::int64_t>> edge_multiset() const;

private:
    NodeId n_ = 0;
    std::int64_t m_ = 0;
    std::vector<std::int64_t> degree_;
    std::vector<std::size_t> row_;    // CSR offsets, size n_ + 1
    std::vector<NeighborEntry> nbr_;  // rows sorted by neighbor
    std::vector<std::string> names_;
};

// Graph from a bare pair list: n is inferred as max index + 1.
// Errors: empty input -> "empty graph".
Graph build_graph(std::span<const std::pair<NodeId, NodeId>> edge_pairs);
Graph build_graph(const std::vector<std::pair<NodeId, NodeId>>& edge_pairs);

}  // namespace commdet

#endif  // COMMDET_GRAPH_HPP
