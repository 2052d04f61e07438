#include "commdet/resolution.hpp"

#include <cmath>
#include <stdexcept>

#include "commdet/rng.hpp"

namespace commdet {

PlantedPartitionParams estimate_omegas(const Partition& partition) {
    const std::int64_t m = partition.graph().edge_count();
    if (m == 0) throw std::invalid_argument("empty graph");

    const double two_m = 2.0 * static_cast<double>(m);
    const double kappa_sq_over_2m = static_cast<double>(partition.kappa_square_sum()) / two_m;
    const double out_denominator = two_m - kappa_sq_over_2m;
    // sum_r kappa_r^2 = (2m)^2 exactly when one group holds all the degree.
    if (out_denominator <= 0.0) throw std::invalid_argument("no between-group structure");

    PlantedPartitionParams params;
    params.omega_in = 2.0 * static_cast<double>(partition.in_group_edges()) / kappa_sq_over_2m;
    params.omega_out =
        (two_m - 2.0 * static_cast<double>(partition.in_group_edges())) / out_denominator;
    return params;
}

double gamma_from_omegas(const PlantedPartitionParams& params) {
    if (params.omega_in <= 0.0) throw std::invalid_argument("gamma undefined: omega_in = 0");
    if (params.omega_out <= 0.0) throw std::invalid_argument("gamma undefined: omega_out = 0");
    if (std::fabs(params.omega_in - params.omega_out) < 1e-12 * params.omega_in)
        return params.omega_in;
    return (params.omega_in - params.omega_out) /
           (std::log(params.omega_in) - std::log(params.omega_out));
}

GammaTrace iterate_gamma(const Graph& graph, const GammaOptions& options) {
    if (options.q < 2) throw std::invalid_argument("need at least two groups");
    if (graph.edge_count() == 0) throw std::invalid_argument("empty graph");
    if (options.max_iter < 1) throw std::invalid_argument("need at least one iteration");

    GammaTrace trace;
    trace.final_gamma = options.gamma0;

    double gamma = options.gamma0;
    Partition partition = Partition::single_group(graph, options.q);  // placeholder until iter 1

    for (int iter = 1; iter <= options.max_iter; ++iter) {
        if (iter == 1) {
            DetectOptions detect;
            detect.q = options.q;
            detect.gamma = gamma;
            detect.null = NullModel::configuration;
            detect.mode = SearchMode::maximize;
            detect.seed = rng::split(options.seed, static_cast<std::uint64_t>(iter));
            detect.restarts = options.restarts;
            detect.schedule = options.schedule;
            partition = detect_communities(graph, detect).partition;
        } else {
            partition = greedy_refine(graph, std::move(partition), gamma,
                                      NullModel::configuration, SearchMode::maximize);
        }

        GammaIteration record;
        record.iteration = iter;
        record.gamma = gamma;
        record.modularity = modularity(partition, gamma, NullModel::configuration);
        record.m_in = partition.in_group_edges();

        if (partition.occupied_degree_groups() < 2) {
            trace.iterations.push_back(record);
            trace.diagnostic = "search collapsed to a single occupied group";
            return trace;
        }
        const PlantedPartitionParams params = estimate_omegas(partition);
        record.omega_in = params.omega_in;
        record.omega_out = params.omega_out;

        if (params.omega_out <= 0.0) {
            trace.iterations.push_back(record);
            trace.diagnostic = "perfectly separable partition: omega_out = 0";
            return trace;
        }
        const double next_gamma = gamma_from_omegas(params);
        trace.iterations.push_back(record);
        trace.final_gamma = next_gamma;

        if (std::fabs(next_gamma - gamma) <= options.tol * std::max(1.0, gamma)) {
            trace.converged = true;
            return trace;
        }
        gamma = next_gamma;
    }
    trace.diagnostic = "iteration cap reached before convergence";
    return trace;
}

}  // namespace commdet
