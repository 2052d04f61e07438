#ifndef COMMDET_PARTITION_HPP
#define COMMDET_PARTITION_HPP

#include <cstdint>
#include <vector>

#include "commdet/graph.hpp"

namespace commdet {

using GroupId = std::uint32_t;

// Node-to-group assignment with cached group statistics: degree sums kappa_r,
// group sizes, and the full block edge-count matrix m_rs (m_rr holds in-group
// edges, self-edges included). All statistics are exact integers and are
// maintained incrementally under node moves; a from-scratch recount always
// agrees. q is an upper bound on occupied groups — empty groups are fine.
//
// Single-writer: concurrent searches each own a Partition over the shared
// Graph (the Graph is only read).
class Partition {
public:
    Partition(const Graph& graph, std::vector<GroupId> assignment, GroupId q);

    // Everyone in group 0.
    static Partition single_group(const Graph& graph, GroupId q = 1);

    // Moves one node; O(degree). No-op when target equals the current group.
    void move(NodeId node, GroupId target);

    GroupId group_of(NodeId node) const { return assignment_[node]; }
    GroupId group_count() const { return q_; }
    const std::vector<GroupId>& assignment() const { return assignment_; }
    const Graph& graph() const { return *graph_; }

    std::int64_t kappa(GroupId r) const { return kappa_[r]; }
    std::int64_t group_size(GroupId r) const { return size_[r]; }
    std::int64_t block_edges(GroupId r, GroupId s) const { return block_[index(r, s)]; }
    std::int64_t in_group_edges() const { return m_in_; }
    std::int64_t between_group_edges() const { return graph_->edge_count() - m_in_; }

    std::int64_t kappa_square_sum() const;            // sum_r kappa_r^2
    std::int64_t size_pair_sum() const;               // sum_r n_r (n_r - 1)
    GroupId occupied_groups() const;                  // groups with at least one node
    GroupId occupied_degree_groups() const;           // groups with kappa_r > 0

    // Edges from `node` to every group, self-edges excluded; `out` has q slots.
    void edges_to_groups(NodeId node, std::vector<std::int64_t>& out) const;
    // Same for a single group; O(degree).
    std::int64_t edges_to_group(NodeId node, GroupId r) const;

    // Assignment with groups relabeled in first-appearance order; equal for
    // any two partitions that differ only by a group permutation.
    std::vector<GroupId> canonical_assignment() const;

private:
    std::size_t index(GroupId r, GroupId s) const {
        return static_cast<std::size_t>(r) * q_ + s;
    }
    void block_add(GroupId r, GroupId s, std::int64_t delta);
    void recount();

    const Graph* graph_;
    std::vector<GroupId> assignment_;
    GroupId q_;
    std::vector<std::int64_t> kappa_;
    std::vector<std::int64_t> size_;
    std::vector<std::int64_t> block_;  // dense q x q, mirrored
    std::int64_t m_in_ = 0;
};

}  // namespace commdet

#endif  // COMMDET_PARTITION_HPP
