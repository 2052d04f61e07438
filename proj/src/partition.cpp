#include "commdet/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace commdet {

Partition::Partition(const Graph& graph, std::vector<GroupId> assignment, GroupId q)
    : graph_(&graph), assignment_(std::move(assignment)), q_(q) {
    if (q_ == 0) throw std::invalid_argument("group count must be positive");
    if (assignment_.size() != graph.node_count())
        throw std::invalid_argument("assignment length does not match node count");
    for (GroupId g : assignment_)
        if (g >= q_) throw std::invalid_argument("group index out of range");
    recount();
}

Partition Partition::single_group(const Graph& graph, GroupId q) {
    return Partition(graph, std::vector<GroupId>(graph.node_count(), 0), q);
}

void Partition::recount() {
    kappa_.assign(q_, 0);
    size_.assign(q_, 0);
    block_.assign(static_cast<std::size_t>(q_) * q_, 0);
    m_in_ = 0;
    const Graph& g = *graph_;
    for (NodeId i = 0; i < g.node_count(); ++i) {
        kappa_[assignment_[i]] += g.degree(i);
        ++size_[assignment_[i]];
        for (const auto& e : g.neighbors(i)) {
            if (e.node < i) continue;
            std::int64_t edges = (e.node == i) ? e.count / 2 : e.count;
            block_add(assignment_[i], assignment_[e.node], edges);
        }
    }
}

void Partition::block_add(GroupId r, GroupId s, std::int64_t delta) {
    block_[index(r, s)] += delta;
    if (r != s) {
        block_[index(s, r)] += delta;
    } else {
        m_in_ += delta;
    }
}

void Partition::move(NodeId node, GroupId target) {
    if (node >= assignment_.size()) throw std::invalid_argument("node index out of range");
    if (target >= q_) throw std::invalid_argument("group index out of range");
    const GroupId from = assignment_[node];
    if (from == target) return;

    const Graph& g = *graph_;
    for (const auto& e : g.neighbors(node)) {
        if (e.node == node) {
            std::int64_t self_edges = e.count / 2;
            block_add(from, from, -self_edges);
            block_add(target, target, self_edges);
        } else {
            const GroupId other = assignment_[e.node];
            block_add(from, other, -e.count);
            block_add(target, other, e.count);
        }
    }
    kappa_[from] -= g.degree(node);
    kappa_[target] += g.degree(node);
    --size_[from];
    ++size_[target];
    assignment_[node] = target;
}

std::int64_t Partition::kappa_square_sum() const {
    std::int64_t total = 0;
    for (std::int64_t k : kappa_) total += k * k;
    return total;
}

std::int64_t Partition::size_pair_sum() const {
    std::int64_t total = 0;
    for (std::int64_t s : size_) total += s * (s - 1);
    return total;
}

GroupId Partition::occupied_groups() const {
    GroupId count = 0;
    for (std::int64_t s : size_)
        if (s > 0) ++count;
    return count;
}

GroupId Partition::occupied_degree_groups() const {
    GroupId count = 0;
    for (std::int64_t k : kappa_)
        if (k > 0) ++count;
    return count;
}

void Partition::edges_to_groups(NodeId node, std::vector<std::int64_t>& out) const {
    out.assign(q_, 0);
    for (const auto& e : graph_->neighbors(node)) {
        if (e.node == node) continue;
        out[assignment_[e.node]] += e.count;
    }
}

std::int64_t Partition::edges_to_group(NodeId node, GroupId r) const {
    std::int64_t total = 0;
    for (const auto& e : graph_->neighbors(node)) {
        if (e.node == node) continue;
        if (assignment_[e.node] == r) total += e.count;
    }
    return total;
}

std::vector<GroupId> Partition::canonical_assignment() const {
    std::vector<GroupId> relabel(q_, q_);  // q_ marks "unseen"
    std::vector<GroupId> canonical(assignment_.size());
    GroupId next = 0;
    for (std::size_t i = 0; i < assignment_.size(); ++i) {
        GroupId g = assignment_[i];
        if (relabel[g] == q_) relabel[g] = next++;
        canonical[i] = relabel[g];
    }
    return canonical;
}

}  // namespace commdet
