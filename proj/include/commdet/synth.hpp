#ifndef COMMDET_SYNTH_HPP
#define COMMDET_SYNTH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "commdet/quality.hpp"

namespace commdet {

// Planted-partition experiment family: q equal groups, expected within-group
// degree d_in per node and d_out to each other group.
struct SyntheticSpec {
    GroupId q = 2;
    NodeId group_size = 250;
    double d_in = 16.0;
    double d_out = 8.0;
    std::uint64_t seed = 1;

    NodeId node_count() const { return q * group_size; }
    double mean_degree() const { return d_in + d_out * (q - 1); }
};

// Raw Poisson rates (expected edge count per node pair):
//   omega_in = d_in / group_size, omega_out = d_out / group_size.
PlantedPartitionParams spec_to_rates(const SyntheticSpec& spec);

// The same rates on the configuration-normalized scale used by the
// degree-corrected estimators: omega_dc = omega_raw * 2m / mean_degree^2,
// which for this family is d * q / mean_degree.
PlantedPartitionParams spec_to_dc_rates(const SyntheticSpec& spec);

// Resolution parameter the rate estimators should recover on this family:
// the logarithmic mean of the configuration-normalized rates. Equals
// q / ((q+1) ln 2) when d_in = 2 d_out.
double true_gamma(const SyntheticSpec& spec);

struct PlantedSample {
    Graph graph;
    std::vector<GroupId> truth;  // planted assignment, groups of consecutive nodes
};

// Poisson multigraph sample: each unordered pair (i, j) gets a Poisson number
// of edges with mean omega[g_i][g_j], each node a Poisson number of
// self-edges with mean omega[g_i][g_i] / 2. Sampled block-by-block (total
// count, then endpoints), which matches that distribution exactly in O(m).
// Deterministic given the seed.
PlantedSample generate_planted_partition(const SyntheticSpec& spec);

// Degree-corrected variant: pair rate (k_i k_j / 2m) * omega[g_i][g_j] with
// k taken from target_degrees and m = sum(k)/2, half that for self-edges.
// Rates on the configuration-normalized scale.
Graph generate_dc_planted_partition(std::span<const double> target_degrees,
                                    std::span<const GroupId> assignment,
                                    const PlantedPartitionParams& params, std::uint64_t seed);

}  // namespace commdet

#endif  // COMMDET_SYNTH_HPP
