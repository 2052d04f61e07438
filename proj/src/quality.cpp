#include "commdet/quality.hpp"

#include <cmath>
#include <stdexcept>

namespace commdet {

BlockMatrix::BlockMatrix(GroupId q, std::vector<double> values)
    : q_(q), values_(std::move(values)) {
    if (q_ == 0) throw std::invalid_argument("block matrix needs at least one group");
    if (values_.size() != static_cast<std::size_t>(q_) * q_)
        throw std::invalid_argument("block matrix size does not match group count");
    for (GroupId r = 0; r < q_; ++r)
        for (GroupId s = r + 1; s < q_; ++s)
            if (at(r, s) != at(s, r))
                throw std::invalid_argument("block matrix must be symmetric");
}

BlockMatrix BlockMatrix::planted(GroupId q, double omega_in, double omega_out) {
    std::vector<double> values(static_cast<std::size_t>(q) * q, omega_out);
    for (GroupId r = 0; r < q; ++r) values[static_cast<std::size_t>(r) * q + r] = omega_in;
    return BlockMatrix(q, std::move(values));
}

namespace {

void require_edges(const Partition& partition) {
    if (partition.graph().edge_count() == 0) throw std::invalid_argument("empty graph");
}

double null_term(const Partition& partition, NullModel null) {
    const auto& g = partition.graph();
    const double two_m = 2.0 * static_cast<double>(g.edge_count());
    switch (null) {
        case NullModel::configuration:
            return static_cast<double>(partition.kappa_square_sum()) / (two_m * two_m);
        case NullModel::uniform: {
            const auto n = static_cast<std::int64_t>(g.node_count());
            if (n < 2) throw std::invalid_argument("uniform null model needs at least two nodes");
            return static_cast<double>(partition.size_pair_sum()) /
                   static_cast<double>(n * (n - 1));
        }
    }
    throw std::logic_error("unknown null model");
}

}  // namespace

double modularity(const Partition& partition, double gamma, NullModel null) {
    require_edges(partition);
    const double m = static_cast<double>(partition.graph().edge_count());
    return static_cast<double>(partition.in_group_edges()) / m - gamma * null_term(partition, null);
}

double delta_modularity(const Partition& partition, NodeId node, GroupId target,
                        double gamma, NullModel null) {
    require_edges(partition);
    const GroupId from = partition.group_of(node);
    if (from == target) return 0.0;

    const auto& g = partition.graph();
    const double m = static_cast<double>(g.edge_count());

    std::int64_t to_from = 0, to_target = 0;
    for (const auto& e : g.neighbors(node)) {
        if (e.node == node) continue;  // self-edges move with the node
        const GroupId other = partition.group_of(e.node);
        if (other == from) to_from += e.count;
        else if (other == target) to_target += e.count;
    }
    const double gain_edges = static_cast<double>(to_target - to_from) / m;

    switch (null) {
        case NullModel::configuration: {
            const double k = static_cast<double>(g.degree(node));
            const double kappa_shift =
                static_cast<double>(partition.kappa(target) - partition.kappa(from)) + k;
            return gain_edges - gamma * k * kappa_shift / (2.0 * m * m);
        }
        case NullModel::uniform: {
            const auto n = static_cast<std::int64_t>(g.node_count());
            if (n < 2) throw std::invalid_argument("uniform null model needs at least two nodes");
            const double size_shift = 2.0 * static_cast<double>(partition.group_size(target) -
                                                                partition.group_size(from) + 1);
            return gain_edges - gamma * size_shift / static_cast<double>(n * (n - 1));
        }
    }
    throw std::logic_error("unknown null model");
}

namespace {

// Shared block-sum core of the two likelihoods:
//   sum_{r<=s} m_rs log w_rs  -  (1/2) sum_{r,s} weight_r weight_s w_rs * scale
// with weight = kappa, scale = 1/2m for the degree-corrected model and
// weight = group size, scale = 1 for the plain one.
double block_log_likelihood(const Partition& partition, const BlockMatrix& rates,
                            bool degree_corrected) {
    if (rates.group_count() != partition.group_count())
        throw std::invalid_argument("block matrix group count does not match partition");
    const GroupId q = partition.group_count();

    double edge_term = 0.0;
    for (GroupId r = 0; r < q; ++r) {
        for (GroupId s = r; s < q; ++s) {
            const std::int64_t edges = partition.block_edges(r, s);
            if (edges == 0) continue;
            const double w = rates.at(r, s);
            if (w <= 0.0) throw std::invalid_argument("zero-rate block with observed edges");
            edge_term += static_cast<double>(edges) * std::log(w);
        }
    }

    double expected_term = 0.0;
    for (GroupId r = 0; r < q; ++r) {
        const double wr = degree_corrected ? static_cast<double>(partition.kappa(r))
                                           : static_cast<double>(partition.group_size(r));
        if (wr == 0.0) continue;
        for (GroupId s = 0; s < q; ++s) {
            const double ws = degree_corrected ? static_cast<double>(partition.kappa(s))
                                               : static_cast<double>(partition.group_size(s));
            expected_term += wr * ws * rates.at(r, s);
        }
    }
    const double scale =
        degree_corrected ? 1.0 / (2.0 * static_cast<double>(partition.graph().edge_count())) : 1.0;
    return edge_term - 0.5 * expected_term * scale;
}

}  // namespace

double dcsbm_log_likelihood(const Partition& partition, const BlockMatrix& rates) {
    require_edges(partition);
    return block_log_likelihood(partition, rates, true);
}

double sbm_log_likelihood(const Partition& partition, const BlockMatrix& rates) {
    return block_log_likelihood(partition, rates, false);
}

double pp_log_likelihood(const Partition& partition, const PlantedPartitionParams& params) {
    require_edges(partition);
    if (params.omega_in <= 0.0) throw std::invalid_argument("omega_in must be positive");
    if (params.omega_out < 0.0) throw std::invalid_argument("omega_out must be nonnegative");
    return dcsbm_log_likelihood(
        partition,
        BlockMatrix::planted(partition.group_count(), params.omega_in, params.omega_out));
}

EquivalenceConstants equivalence_constants(const PlantedPartitionParams& params,
                                           std::int64_t edge_count) {
    if (params.omega_in <= 0.0 || params.omega_out <= 0.0)
        throw std::invalid_argument("rates must be positive");
    if (params.omega_in == params.omega_out)
        throw std::invalid_argument("degenerate: likelihood independent of partition");
    const double m = static_cast<double>(edge_count);
    const double log_ratio = std::log(params.omega_in / params.omega_out);
    EquivalenceConstants constants;
    constants.b = m * log_ratio;
    constants.gamma = (params.omega_in - params.omega_out) /
                      (std::log(params.omega_in) - std::log(params.omega_out));
    constants.c = m * (std::log(params.omega_out) - params.omega_out);
    return constants;
}

}  // namespace commdet
