#ifndef COMMDET_QUALITY_HPP
#define COMMDET_QUALITY_HPP

#include <cstdint>
#include <vector>

#include "commdet/partition.hpp"

namespace commdet {

// Null model for the randomized-edge term of modularity.
//   configuration: P_ij = k_i k_j / 2m  (degree preserving)
//   uniform:       P_ij = m / C(n,2)    (every slot equally likely, i != j)
enum class NullModel { configuration, uniform };

// Symmetric q x q matrix of Poisson rates for the block models.
class BlockMatrix {
public:
    BlockMatrix(GroupId q, std::vector<double> values);

    // Two-valued planted-partition form: omega_in on the diagonal,
    // omega_out off it.
    static BlockMatrix planted(GroupId q, double omega_in, double omega_out);

    GroupId group_count() const { return q_; }
    double at(GroupId r, GroupId s) const {
        return values_[static_cast<std::size_t>(r) * q_ + s];
    }

private:
    GroupId q_;
    std::vector<double> values_;
};

struct PlantedPartitionParams {
    double omega_in = 0.0;
    double omega_out = 0.0;

    bool assortative() const { return omega_in > omega_out; }
};

// The constants of logL(g) = B * Q(gamma) + C for the degree-corrected
// planted partition model:
//   B     = m log(omega_in / omega_out)
//   gamma = (omega_in - omega_out) / (log omega_in - log omega_out)
//   C     = m (log omega_out - omega_out)
struct EquivalenceConstants {
    double b = 0.0;
    double c = 0.0;
    double gamma = 0.0;
};

// Generalized modularity
//   Q(gamma) = (1/2m) sum_ij (A_ij - gamma P_ij) delta(g_i, g_j),
// evaluated from cached group statistics:
//   configuration: m_in/m - gamma sum_r (kappa_r / 2m)^2
//   uniform:       m_in/m - gamma sum_r n_r (n_r - 1) / (n (n-1))
// gamma = 1 with the configuration null is the classic modularity.
double modularity(const Partition& partition, double gamma,
                  NullModel null = NullModel::configuration);

// Q(after moving node to target) - Q(before); O(degree). Exact to 1e-12
// against two full evaluations.
double delta_modularity(const Partition& partition, NodeId node, GroupId target,
                        double gamma, NullModel null = NullModel::configuration);

// Degree-corrected block-model log-likelihood (constant terms dropped):
//   (1/2) sum_ij (A_ij log w[g_i][g_j] - (k_i k_j / 2m) w[g_i][g_j])
double dcsbm_log_likelihood(const Partition& partition, const BlockMatrix& rates);

// Plain block-model log-likelihood (constant terms dropped):
//   (1/2) sum_ij (A_ij log w[g_i][g_j] - w[g_i][g_j])
double sbm_log_likelihood(const Partition& partition, const BlockMatrix& rates);

// Degree-corrected planted-partition log-likelihood: dcsbm_log_likelihood
// with the two-valued rate matrix. omega_out = 0 is allowed only when the
// partition has no between-group edges.
double pp_log_likelihood(const Partition& partition, const PlantedPartitionParams& params);

// B, C, gamma for given rates; requires omega_in != omega_out (otherwise the
// likelihood does not depend on the partition and B = 0).
EquivalenceConstants equivalence_constants(const PlantedPartitionParams& params,
                                           std::int64_t edge_count);

}  // namespace commdet

#endif  // COMMDET_QUALITY_HPP
