#ifndef COMMDET_OPTIMIZE_HPP
#define COMMDET_OPTIMIZE_HPP

#include <cstdint>

#include "commdet/quality.hpp"

namespace commdet {

// Maximize for assortative structure; minimize when the equivalence constant
// B is negative (omega_out > omega_in).
enum class SearchMode { maximize, minimize };

struct AnnealSchedule {
    double t_initial = 1.0;
    double cooling = 0.99;
    // Single-move proposals per temperature level; 0 means "node count".
    std::int64_t sweeps_per_temperature = 0;
    double t_final = 1e-4;
    std::uint64_t seed = 1;

    AnnealSchedule resolved_for(const Graph& graph) const;
    void validate() const;
};

// Metropolis simulated annealing on the (signed) modularity objective from a
// random q-group start. Proposals are uniformly random (node, group) pairs;
// the best partition visited is returned. Deterministic given the seed.
// `best_objective_out`, when given, receives the objective of the returned
// partition as accumulated from incremental deltas (agrees with a fresh
// modularity() evaluation to 1e-10).
Partition anneal(const Graph& graph, GroupId q, double gamma, NullModel null,
                 const AnnealSchedule& schedule, SearchMode mode = SearchMode::maximize,
                 double* best_objective_out = nullptr);

// Sweeps of best single-node moves (strict improvement only, ties broken
// toward the lowest group index, nodes visited in index order) until a full
// sweep changes nothing.
Partition greedy_refine(const Graph& graph, Partition partition, double gamma, NullModel null,
                        SearchMode mode = SearchMode::maximize);

struct ExhaustiveResult {
    Partition partition;
    double objective;
};

// Global optimum by enumeration of canonical assignments (restricted-growth
// strings, so group relabelings are visited once). Ties go to the
// lexicographically smallest canonical assignment. Requires q^n <= 1e7.
ExhaustiveResult exhaustive_best(const Graph& graph, GroupId q, double gamma, NullModel null,
                                 SearchMode mode = SearchMode::maximize);

struct DetectOptions {
    GroupId q = 2;
    double gamma = 1.0;
    NullModel null = NullModel::configuration;
    SearchMode mode = SearchMode::maximize;
    std::uint64_t seed = 1;
    int restarts = 5;
    AnnealSchedule schedule;  // seed field is ignored; restart seeds split from `seed`
};

struct DetectResult {
    Partition partition;
    double objective;
};

// Full search pipeline: independent seeded annealing restarts, each polished
// with greedy_refine, best kept.
DetectResult detect_communities(const Graph& graph, const DetectOptions& options);

}  // namespace commdet

#endif  // COMMDET_OPTIMIZE_HPP
