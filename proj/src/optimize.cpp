#include "commdet/optimize.hpp"

#include <cmath>
#include <stdexcept>

#include "commdet/rng.hpp"

namespace commdet {

namespace {

double signed_objective(double value, SearchMode mode) {
    return mode == SearchMode::maximize ? value : -value;
}

}  // namespace

AnnealSchedule AnnealSchedule::resolved_for(const Graph& graph) const {
    AnnealSchedule out = *this;
    if (out.sweeps_per_temperature == 0)
        out.sweeps_per_temperature = static_cast<std::int64_t>(graph.node_count());
    return out;
}

void AnnealSchedule::validate() const {
    if (!(t_initial > 0.0) || !(t_final > 0.0) || !(t_final < t_initial))
        throw std::invalid_argument("invalid schedule: need 0 < t_final < t_initial");
    if (!(cooling > 0.0) || !(cooling < 1.0))
        throw std::invalid_argument("invalid schedule: cooling factor must be in (0,1)");
    if (sweeps_per_temperature <= 0)
        throw std::invalid_argument("invalid schedule: sweeps per temperature must be positive");
}

Partition anneal(const Graph& graph, GroupId q, double gamma, NullModel null,
                 const AnnealSchedule& schedule, SearchMode mode, double* best_objective_out) {
    if (q == 0) throw std::invalid_argument("group count must be positive");
    if (graph.edge_count() == 0) throw std::invalid_argument("empty graph");
    const AnnealSchedule plan = schedule.resolved_for(graph);
    plan.validate();

    rng::Generator gen(plan.seed);
    const NodeId n = graph.node_count();

    std::vector<GroupId> start(n);
    for (NodeId i = 0; i < n; ++i)
        start[i] = static_cast<GroupId>(gen.uniform_below(q));
    Partition current(graph, std::move(start), q);

    double objective = signed_objective(modularity(current, gamma, null), mode);
    double best_objective = objective;

    // Accepted moves are journaled as (node, previous group); the best state
    // visited is recovered by rewinding past the record point, which avoids
    // snapshotting the assignment on every new record.
    std::vector<std::pair<NodeId, GroupId>> journal;
    std::size_t best_position = 0;

    if (q > 1) {
        for (double t = plan.t_initial; t >= plan.t_final; t *= plan.cooling) {
            for (std::int64_t step = 0; step < plan.sweeps_per_temperature; ++step) {
                const NodeId node = static_cast<NodeId>(gen.uniform_below(n));
                const GroupId target = static_cast<GroupId>(gen.uniform_below(q));
                const GroupId from = current.group_of(node);
                if (target == from) continue;
                const double delta =
                    signed_objective(delta_modularity(current, node, target, gamma, null), mode);
                if (delta < 0.0 && gen.uniform01() >= std::exp(delta / t)) continue;
                current.move(node, target);
                journal.emplace_back(node, from);
                objective += delta;
                if (objective > best_objective) {
                    best_objective = objective;
                    best_position = journal.size();
                }
            }
        }
    }

    for (std::size_t i = journal.size(); i > best_position; --i)
        current.move(journal[i - 1].first, journal[i - 1].second);
    if (best_objective_out != nullptr)
        *best_objective_out = signed_objective(best_objective, mode);
    return current;
}

Partition greedy_refine(const Graph& graph, Partition partition, double gamma, NullModel null,
                        SearchMode mode) {
    if (graph.edge_count() == 0) throw std::invalid_argument("empty graph");
    const GroupId q = partition.group_count();
    const NodeId n = graph.node_count();
    // Strictly positive gains only; a tiny floor keeps rounding noise from
    // cycling. Real gains on desk-scale graphs are orders of magnitude above it.
    constexpr double kMinGain = 1e-12;

    bool moved = true;
    while (moved) {
        moved = false;
        for (NodeId node = 0; node < n; ++node) {
            const GroupId from = partition.group_of(node);
            GroupId best_group = from;
            double best_gain = kMinGain;
            for (GroupId target = 0; target < q; ++target) {
                if (target == from) continue;
                const double gain =
                    signed_objective(delta_modularity(partition, node, target, gamma, null), mode);
                if (gain > best_gain) {
                    best_gain = gain;
                    best_group = target;
                }
            }
            if (best_group != from) {
                partition.move(node, best_group);
                moved = true;
            }
        }
    }
    return partition;
}

ExhaustiveResult exhaustive_best(const Graph& graph, GroupId q, double gamma, NullModel null,
                                 SearchMode mode) {
    if (q == 0) throw std::invalid_argument("group count must be positive");
    const NodeId n = graph.node_count();
    double combos = 1.0;
    for (NodeId i = 0; i < n; ++i) {
        combos *= static_cast<double>(q);
        if (combos > 1e7) throw std::invalid_argument("instance too large for enumeration");
    }

    // Restricted-growth strings: assignment[i] <= 1 + max(assignment[0..i-1]),
    // capped at q-1, so each partition appears with exactly one labeling.
    // Lexicographic order plus strict improvement keeps the smallest
    // canonical assignment among ties.
    std::vector<GroupId> assignment(n, 0);
    bool have_best = false;
    double best_objective = 0.0;
    std::vector<GroupId> best_assignment;

    while (true) {
        Partition partition(graph, assignment, q);
        const double objective = signed_objective(modularity(partition, gamma, null), mode);
        if (!have_best || objective > best_objective) {
            have_best = true;
            best_objective = objective;
            best_assignment = assignment;
        }

        std::int64_t pos = static_cast<std::int64_t>(n) - 1;
        while (pos > 0) {
            GroupId prefix_max = 0;
            for (std::int64_t i = 0; i < pos; ++i)
                prefix_max = std::max(prefix_max, assignment[static_cast<std::size_t>(i)]);
            const GroupId cap = std::min<GroupId>(prefix_max + 1, q - 1);
            if (assignment[static_cast<std::size_t>(pos)] < cap) break;
            --pos;
        }
        if (pos <= 0) break;
        ++assignment[static_cast<std::size_t>(pos)];
        for (std::size_t i = static_cast<std::size_t>(pos) + 1; i < n; ++i) assignment[i] = 0;
    }

    Partition best(graph, std::move(best_assignment), q);
    return {std::move(best), signed_objective(best_objective, mode)};
}

DetectResult detect_communities(const Graph& graph, const DetectOptions& options) {
    if (options.restarts < 1) throw std::invalid_argument("need at least one restart");

    bool have_best = false;
    double best_signed = 0.0;
    std::vector<GroupId> best_assignment;
    for (int r = 0; r < options.restarts; ++r) {
        AnnealSchedule schedule = options.schedule;
        schedule.seed = rng::split(options.seed, static_cast<std::uint64_t>(r));
        Partition candidate = greedy_refine(
            graph, anneal(graph, options.q, options.gamma, options.null, schedule, options.mode),
            options.gamma, options.null, options.mode);
        const double objective =
            signed_objective(modularity(candidate, options.gamma, options.null), options.mode);
        if (!have_best || objective > best_signed) {
            have_best = true;
            best_signed = objective;
            best_assignment = candidate.assignment();
        }
    }
    Partition best(graph, std::move(best_assignment), options.q);
    return {std::move(best), signed_objective(best_signed, options.mode)};
}

}  // namespace commdet
