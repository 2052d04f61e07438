#ifndef COMMDET_RESOLUTION_HPP
#define COMMDET_RESOLUTION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "commdet/optimize.hpp"

namespace commdet {

// Degree-corrected planted-partition rate estimates from an observed
// partition, using the observed in-group edge count as an estimate of its
// expectation:
//   omega_in  = 2 m_in  / (sum_r kappa_r^2 / 2m)
//   omega_out = (2m - 2 m_in) / (2m - sum_r kappa_r^2 / 2m)
// Errors when all degree sits in one group (no between-group structure).
PlantedPartitionParams estimate_omegas(const Partition& partition);

// gamma = (omega_in - omega_out) / (log omega_in - log omega_out), the
// logarithmic mean; continuous limit (= omega_in) when the rates are equal
// to within 1e-12 relative. Errors on a zero rate (log divergence).
double gamma_from_omegas(const PlantedPartitionParams& params);

struct GammaIteration {
    int iteration = 0;       // 1-based
    double gamma = 0.0;      // resolution used for this iteration's search
    double omega_in = 0.0;   // rate estimates from the resulting partition
    double omega_out = 0.0;
    double modularity = 0.0; // Q(gamma) of the resulting partition
    std::int64_t m_in = 0;
};

struct GammaTrace {
    std::vector<GammaIteration> iterations;
    bool converged = false;
    double final_gamma = 0.0;
    std::string diagnostic;  // set when the scheme stopped on a degeneracy
};

struct GammaOptions {
    GroupId q = 2;
    double gamma0 = 1.0;   // "gamma = 1 usually works fine"
    double tol = 0.01;     // relative change between successive gammas
    int max_iter = 10;
    std::uint64_t seed = 1;
    int restarts = 5;
    AnnealSchedule schedule;
};

// Iterative self-consistent resolution estimation: maximize modularity at the
// current gamma (full annealing search on the first iteration, warm-started
// greedy refinement afterwards), re-estimate the rates, map them back to
// gamma, and repeat until the change is within tol. Degenerate iterates
// (single occupied group, or omega_out = 0) terminate the trace with
// converged = false and a diagnostic instead of inventing a fallback.
GammaTrace iterate_gamma(const Graph& graph, const GammaOptions& options);

}  // namespace commdet

#endif  // COMMDET_RESOLUTION_HPP
