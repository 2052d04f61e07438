#include "commdet/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace commdet {

Graph::Graph(NodeId n, std::span<const std::pair<NodeId, NodeId>> edge_pairs,
             std::vector<std::string> names)
    : n_(n), names_(std::move(names)) {
    if (n == 0) throw std::invalid_argument("empty graph");
    if (!names_.empty() && names_.size() != n_)
        throw std::invalid_argument("name table size does not match node count");

    // Count directed row entries first, then fill CSR and merge duplicates.
    std::vector<std::size_t> fill(n_ + 1, 0);
    for (const auto& [a, b] : edge_pairs) {
        if (a >= n_ || b >= n_) throw std::invalid_argument("edge endpoint out of range");
        ++fill[a + 1];
        if (a != b) ++fill[b + 1];
    }
    row_.assign(n_ + 1, 0);
    for (NodeId i = 0; i < n_; ++i) row_[i + 1] = row_[i] + fill[i + 1];

    std::vector<NodeId> targets(row_[n_]);
    std::fill(fill.begin(), fill.end(), 0);
    for (const auto& [a, b] : edge_pairs) {
        targets[row_[a] + fill[a]++] = b;
        if (a != b) targets[row_[b] + fill[b]++] = a;
    }

    degree_.assign(n_, 0);
    nbr_.clear();
    nbr_.reserve(targets.size());
    std::vector<std::size_t> compact_row(n_ + 1, 0);
    for (NodeId i = 0; i < n_; ++i) {
        auto begin = targets.begin() + static_cast<std::ptrdiff_t>(row_[i]);
        auto end = targets.begin() + static_cast<std::ptrdiff_t>(row_[i + 1]);
        std::sort(begin, end);
        for (auto it = begin; it != end;) {
            auto run_end = std::find_if(it, end, [&](NodeId t) { return t != *it; });
            std::int64_t mult = run_end - it;
            std::int64_t count = (*it == i) ? 2 * mult : mult;  // A_ii = 2 per self-edge
            nbr_.push_back({*it, count});
            degree_[i] += count;
            it = run_end;
        }
        compact_row[i + 1] = nbr_.size();
    }
    row_ = std::move(compact_row);
    m_ = static_cast<std::int64_t>(edge_pairs.size());
}

std::int64_t Graph::adjacency_count(NodeId i, NodeId j) const {
    auto rowspan = neighbors(i);
    auto it = std::lower_bound(rowspan.begin(), rowspan.end(), j,
                               [](const NeighborEntry& e, NodeId v) { return e.node < v; });
    if (it != rowspan.end() && it->node == j) return it->count;
    return 0;
}

std::vector<std::pair<std::pair<NodeId, NodeId>, std::int64_t>> Graph::edge_multiset() const {
    std::vector<std::pair<std::pair<NodeId, NodeId>, std::int64_t>> out;
    for (NodeId i = 0; i < n_; ++i) {
        for (const auto& e : neighbors(i)) {
            if (e.node < i) continue;
            out.push_back({{i, e.node}, e.node == i ? e.count / 2 : e.count});
        }
    }
    return out;
}

Graph build_graph(std::span<const std::pair<NodeId, NodeId>> edge_pairs) {
    if (edge_pairs.empty()) throw std::invalid_argument("empty graph");
    NodeId n = 0;
    for (const auto& [a, b] : edge_pairs) n = std::max({n, a + 1, b + 1});
    return Graph(n, edge_pairs);
}

Graph build_graph(const std::vector<std::pair<NodeId, NodeId>>& edge_pairs) {
    return build_graph(std::span<const std::pair<NodeId, NodeId>>(edge_pairs));
}

}  // namespace commdet
