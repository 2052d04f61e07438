#include "commdet/synth.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "commdet/rng.hpp"

namespace commdet {

namespace {

void validate(const SyntheticSpec& spec) {
    if (spec.q < 2) throw std::invalid_argument("need at least two groups");
    if (spec.group_size < 1) throw std::invalid_argument("group size must be positive");
    if (spec.d_in < 0.0 || spec.d_out < 0.0)
        throw std::invalid_argument("expected degrees must be nonnegative");
}

double log_mean(double a, double b) {
    if (std::fabs(a - b) < 1e-12 * std::max(a, b)) return a;
    return (a - b) / (std::log(a) - std::log(b));
}

// Index below the cumulative-weight bracket containing u * total.
std::size_t pick_weighted(const std::vector<double>& cumulative, double u) {
    const double x = u * cumulative.back();
    std::size_t lo = 0, hi = cumulative.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (cumulative[mid] <= x) lo = mid + 1;
        else hi = mid;
    }
    return lo;
}

}  // namespace

PlantedPartitionParams spec_to_rates(const SyntheticSpec& spec) {
    validate(spec);
    return {spec.d_in / static_cast<double>(spec.group_size),
            spec.d_out / static_cast<double>(spec.group_size)};
}

PlantedPartitionParams spec_to_dc_rates(const SyntheticSpec& spec) {
    validate(spec);
    const double mean_degree = spec.mean_degree();
    if (mean_degree <= 0.0) throw std::invalid_argument("expected degree is zero");
    return {spec.d_in * spec.q / mean_degree, spec.d_out * spec.q / mean_degree};
}

double true_gamma(const SyntheticSpec& spec) {
    const PlantedPartitionParams dc = spec_to_dc_rates(spec);
    if (dc.omega_out <= 0.0) throw std::invalid_argument("gamma undefined: omega_out = 0");
    return log_mean(dc.omega_in, dc.omega_out);
}

PlantedSample generate_planted_partition(const SyntheticSpec& spec) {
    validate(spec);
    const PlantedPartitionParams rates = spec_to_rates(spec);
    const NodeId n = spec.node_count();
    const double size = static_cast<double>(spec.group_size);

    rng::Generator gen(spec.seed);
    std::vector<std::pair<NodeId, NodeId>> pairs;
    pairs.reserve(static_cast<std::size_t>(0.5 * n * spec.mean_degree() * 1.1) + 16);

    for (GroupId r = 0; r < spec.q; ++r) {
        const NodeId base_r = r * spec.group_size;
        // Diagonal block: total rate omega_in * size^2 / 2 with uniformly
        // random ordered endpoints reproduces rate omega_in per unordered
        // pair and omega_in / 2 per self-edge.
        const std::int64_t in_block = gen.poisson(rates.omega_in * size * size / 2.0);
        for (std::int64_t e = 0; e < in_block; ++e) {
            const NodeId i = base_r + static_cast<NodeId>(gen.uniform_below(spec.group_size));
            const NodeId j = base_r + static_cast<NodeId>(gen.uniform_below(spec.group_size));
            pairs.emplace_back(i, j);
        }
        for (GroupId s = r + 1; s < spec.q; ++s) {
            const NodeId base_s = s * spec.group_size;
            const std::int64_t between = gen.poisson(rates.omega_out * size * size);
            for (std::int64_t e = 0; e < between; ++e) {
                const NodeId i = base_r + static_cast<NodeId>(gen.uniform_below(spec.group_size));
                const NodeId j = base_s + static_cast<NodeId>(gen.uniform_below(spec.group_size));
                pairs.emplace_back(i, j);
            }
        }
    }

    std::vector<GroupId> truth(n);
    for (NodeId i = 0; i < n; ++i) truth[i] = i / spec.group_size;
    return {Graph(n, pairs), std::move(truth)};
}

Graph generate_dc_planted_partition(std::span<const double> target_degrees,
                                    std::span<const GroupId> assignment,
                                    const PlantedPartitionParams& params, std::uint64_t seed) {
    if (target_degrees.size() != assignment.size())
        throw std::invalid_argument("degree and assignment lengths differ");
    if (target_degrees.empty()) throw std::invalid_argument("empty graph");
    if (params.omega_in < 0.0 || params.omega_out < 0.0)
        throw std::invalid_argument("rates must be nonnegative");
    for (double k : target_degrees)
        if (k < 0.0) throw std::invalid_argument("target degrees must be nonnegative");

    const double degree_total = std::accumulate(target_degrees.begin(), target_degrees.end(), 0.0);
    if (degree_total <= 0.0) throw std::invalid_argument("zero total degree");
    const double two_m = degree_total;

    GroupId q = 0;
    for (GroupId g : assignment) q = std::max(q, g + 1);

    std::vector<std::vector<NodeId>> members(q);
    std::vector<std::vector<double>> weights(q);  // cumulative degree weights
    std::vector<double> group_degree(q, 0.0);
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        const GroupId g = assignment[i];
        group_degree[g] += target_degrees[i];
        if (target_degrees[i] > 0.0) {
            members[g].push_back(static_cast<NodeId>(i));
            const double previous = weights[g].empty() ? 0.0 : weights[g].back();
            weights[g].push_back(previous + target_degrees[i]);
        }
    }

    rng::Generator gen(seed);
    std::vector<std::pair<NodeId, NodeId>> pairs;
    auto pick_node = [&](GroupId g) {
        return members[g][pick_weighted(weights[g], gen.uniform01())];
    };

    for (GroupId r = 0; r < q; ++r) {
        if (group_degree[r] <= 0.0) continue;
        // Diagonal rate kappa_r^2 / 4m with degree-weighted ordered endpoints
        // gives (k_i k_j / 2m) per unordered pair and half that per self-edge.
        const double diag_rate = params.omega_in * group_degree[r] * group_degree[r] / (2.0 * two_m);
        const std::int64_t in_block = gen.poisson(diag_rate);
        for (std::int64_t e = 0; e < in_block; ++e) pairs.emplace_back(pick_node(r), pick_node(r));
        for (GroupId s = r + 1; s < q; ++s) {
            if (group_degree[s] <= 0.0) continue;
            const double rate = params.omega_out * group_degree[r] * group_degree[s] / two_m;
            const std::int64_t between = gen.poisson(rate);
            for (std::int64_t e = 0; e < between; ++e) pairs.emplace_back(pick_node(r), pick_node(s));
        }
    }
    return Graph(static_cast<NodeId>(assignment.size()), pairs);
}

}  // namespace commdet
