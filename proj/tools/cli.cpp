// commdet: community detection by generalized modularity and planted-partition
// maximum likelihood. Subcommands: detect, gamma, generate, fig1,
// check-equivalence. Exit codes: 0 success, 1 usage, 2 data error,
// 3 non-convergence.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "commdet/io.hpp"
#include "commdet/optimize.hpp"
#include "commdet/quality.hpp"
#include "commdet/resolution.hpp"
#include "commdet/rng.hpp"
#include "commdet/synth.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace commdet;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNoConvergence = 3;

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

NullModel parse_null(const std::string& name) {
    if (name == "config") return NullModel::configuration;
    if (name == "uniform") return NullModel::uniform;
    throw CLI::ValidationError("--null", "expected 'config' or 'uniform'");
}

SearchMode parse_mode(const std::string& name) {
    if (name == "max") return SearchMode::maximize;
    if (name == "min") return SearchMode::minimize;
    throw CLI::ValidationError("--mode", "expected 'max' or 'min'");
}

void emit(const json& summary) { std::cout << summary.dump(2) << std::endl; }

struct DetectArgs {
    std::string input;
    GroupId q = 2;
    double gamma = 1.0;
    std::string null_name = "config";
    std::string mode_name = "max";
    std::uint64_t seed = 1;
    int restarts = 5;
    std::string out;
    std::string format = "json";
};

int run_detect(const DetectArgs& args) {
    Stopwatch clock;
    Graph graph = load_edgelist_file(args.input);

    DetectOptions options;
    options.q = args.q;
    options.gamma = args.gamma;
    options.null = parse_null(args.null_name);
    options.mode = parse_mode(args.mode_name);
    options.seed = args.seed;
    options.restarts = args.restarts;
    const DetectResult result = detect_communities(graph, options);

    if (!args.out.empty()) write_partition_file(result.partition, args.out, args.format);

    json kappa = json::array();
    for (GroupId r = 0; r < args.q; ++r) kappa.push_back(result.partition.kappa(r));

    json summary;
    summary["schema"] = 1;
    summary["command"] = "detect";
    summary["input"] = args.input;
    summary["n"] = graph.node_count();
    summary["m"] = graph.edge_count();
    summary["q"] = args.q;
    summary["gamma"] = args.gamma;
    summary["null"] = args.null_name;
    summary["mode"] = args.mode_name;
    summary["seed"] = args.seed;
    summary["restarts"] = args.restarts;
    summary["Q"] = result.objective;
    summary["m_in"] = result.partition.in_group_edges();
    summary["kappa"] = kappa;
    summary["occupied_groups"] = result.partition.occupied_groups();
    if (!args.out.empty()) {
        summary["partition_file"] = args.out;
        summary["format"] = args.format;
    }
    summary["wall_time_s"] = clock.seconds();
    emit(summary);
    return kExitOk;
}

struct GammaArgs {
    std::string input;
    GroupId q = 2;
    double gamma0 = 1.0;
    double tol = 0.01;
    int max_iter = 10;
    std::uint64_t seed = 1;
    int restarts = 5;
    std::string out;
    std::string format = "json";
};

int run_gamma(const GammaArgs& args) {
    Stopwatch clock;
    Graph graph = load_edgelist_file(args.input);

    GammaOptions options;
    options.q = args.q;
    options.gamma0 = args.gamma0;
    options.tol = args.tol;
    options.max_iter = args.max_iter;
    options.seed = args.seed;
    options.restarts = args.restarts;
    const GammaTrace trace = iterate_gamma(graph, options);

    if (!args.out.empty()) {
        std::ofstream out(args.out);
        if (!out) throw std::runtime_error("cannot open for writing: " + args.out);
        out << (args.format == "csv" ? trace_to_csv(trace) : trace_to_json(trace));
    }

    json summary;
    summary["schema"] = 1;
    summary["command"] = "gamma";
    summary["input"] = args.input;
    summary["n"] = graph.node_count();
    summary["m"] = graph.edge_count();
    summary["q"] = args.q;
    summary["gamma0"] = args.gamma0;
    summary["tol"] = args.tol;
    summary["max_iter"] = args.max_iter;
    summary["seed"] = args.seed;
    summary["restarts"] = args.restarts;
    summary["final_gamma"] = trace.final_gamma;
    summary["converged"] = trace.converged;
    summary["iterations"] = trace.iterations.size();
    if (!trace.diagnostic.empty()) summary["diagnostic"] = trace.diagnostic;
    if (!args.out.empty()) {
        summary["trace_file"] = args.out;
        summary["format"] = args.format;
    }
    summary["wall_time_s"] = clock.seconds();
    emit(summary);
    return trace.converged ? kExitOk : kExitNoConvergence;
}

struct GenerateArgs {
    GroupId q = 2;
    NodeId size = 250;
    double d_in = 16.0;
    double d_out = 8.0;
    std::uint64_t seed = 1;
    std::string out;
    std::string truth_out;
};

int run_generate(const GenerateArgs& args) {
    Stopwatch clock;
    SyntheticSpec spec;
    spec.q = args.q;
    spec.group_size = args.size;
    spec.d_in = args.d_in;
    spec.d_out = args.d_out;
    spec.seed = args.seed;

    const PlantedSample sample = generate_planted_partition(spec);
    save_edgelist_file(sample.graph, args.out);
    if (!args.truth_out.empty()) {
        Partition truth(sample.graph, sample.truth, args.q);
        write_partition_file(truth, args.truth_out, "csv");
    }
    if (sample.graph.edge_count() == 0)
        std::cerr << "warning: generated graph has no edges\n";

    const PlantedPartitionParams rates = spec_to_rates(spec);
    json summary;
    summary["schema"] = 1;
    summary["command"] = "generate";
    summary["q"] = args.q;
    summary["group_size"] = args.size;
    summary["d_in"] = args.d_in;
    summary["d_out"] = args.d_out;
    summary["seed"] = args.seed;
    summary["n"] = sample.graph.node_count();
    summary["m"] = sample.graph.edge_count();
    summary["omega_in"] = rates.omega_in;
    summary["omega_out"] = rates.omega_out;
    if (args.d_out > 0.0 && args.d_in + args.d_out > 0.0)
        summary["gamma_true"] = true_gamma(spec);
    summary["edgelist_file"] = args.out;
    if (!args.truth_out.empty()) summary["truth_file"] = args.truth_out;
    summary["wall_time_s"] = clock.seconds();
    emit(summary);
    return kExitOk;
}

struct Fig1Args {
    std::vector<GroupId> q_list = {2, 3, 4, 6, 8, 10};
    int seeds = 5;
    NodeId size = 250;
    double d_in = 16.0;
    double d_out = 8.0;
    std::uint64_t seed = 1;
    double gamma0 = 1.0;
    double tol = 0.01;
    int max_iter = 10;
    int restarts = 5;
    std::string out;
};

int run_fig1(const Fig1Args& args) {
    Stopwatch clock;
    std::ostringstream csv;
    csv << "q,seed,gamma_est,gamma_true,converged,iterations,error\n";

    int failures = 0;
    std::uint64_t cell = 0;
    for (const GroupId q : args.q_list) {
        for (int s = 0; s < args.seeds; ++s, ++cell) {
            SyntheticSpec spec;
            spec.q = q;
            spec.group_size = args.size;
            spec.d_in = args.d_in;
            spec.d_out = args.d_out;
            spec.seed = rng::split(args.seed, 2 * cell);

            csv << q << ',' << s << ',';
            try {
                const PlantedSample sample = generate_planted_partition(spec);
                GammaOptions options;
                options.q = q;
                options.gamma0 = args.gamma0;
                options.tol = args.tol;
                options.max_iter = args.max_iter;
                options.restarts = args.restarts;
                options.seed = rng::split(args.seed, 2 * cell + 1);
                const GammaTrace trace = iterate_gamma(sample.graph, options);
                if (!trace.converged) ++failures;
                csv << trace.final_gamma << ',' << true_gamma(spec) << ','
                    << (trace.converged ? "true" : "false") << ',' << trace.iterations.size()
                    << ',' << trace.diagnostic << '\n';
            } catch (const std::exception& error) {
                ++failures;
                csv << ",,false,0," << error.what() << '\n';
            }
        }
    }

    if (args.out.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(args.out);
        if (!out) throw std::runtime_error("cannot open for writing: " + args.out);
        out << csv.str();

        json summary;
        summary["schema"] = 1;
        summary["command"] = "fig1";
        summary["q_list"] = args.q_list;
        summary["seeds_per_q"] = args.seeds;
        summary["group_size"] = args.size;
        summary["d_in"] = args.d_in;
        summary["d_out"] = args.d_out;
        summary["seed"] = args.seed;
        summary["cells"] = cell;
        summary["failures"] = failures;
        summary["csv_file"] = args.out;
        summary["wall_time_s"] = clock.seconds();
        emit(summary);
    }
    return failures == 0 ? kExitOk : kExitNoConvergence;
}

struct CheckArgs {
    std::string input;
    double omega_in = 1.5;
    double omega_out = 0.5;
    int trials = 100;
    GroupId q = 4;
    std::uint64_t seed = 1;
};

int run_check_equivalence(const CheckArgs& args) {
    Stopwatch clock;
    if (args.omega_in <= 0.0 || args.omega_out <= 0.0)
        throw CLI::ValidationError("--omega-in/--omega-out", "rates must be positive");
    if (args.omega_in == args.omega_out)
        throw CLI::ValidationError("--omega-in/--omega-out", "degenerate: rates must differ");
    if (args.trials < 2) throw CLI::ValidationError("--trials", "need at least two trials");

    Graph graph = load_edgelist_file(args.input);
    const PlantedPartitionParams params{args.omega_in, args.omega_out};
    const EquivalenceConstants constants = equivalence_constants(params, graph.edge_count());

    rng::Generator gen(args.seed);
    std::vector<double> offsets;
    offsets.reserve(static_cast<std::size_t>(args.trials));
    double sum = 0.0;
    for (int t = 0; t < args.trials; ++t) {
        std::vector<GroupId> assignment(graph.node_count());
        for (auto& g : assignment) g = static_cast<GroupId>(gen.uniform_below(args.q));
        Partition partition(graph, std::move(assignment), args.q);
        const double offset =
            pp_log_likelihood(partition, params) -
            constants.b * modularity(partition, constants.gamma, NullModel::configuration);
        offsets.push_back(offset);
        sum += offset;
    }
    const double mean = sum / static_cast<double>(args.trials);
    double max_deviation = 0.0;
    for (double offset : offsets)
        max_deviation = std::max(max_deviation, std::fabs(offset - mean));
    const double max_rel_deviation = max_deviation / std::max(1.0, std::fabs(mean));
    const double c_rel_error =
        std::fabs(mean - constants.c) / std::max(1.0, std::fabs(constants.c));
    const bool pass = max_rel_deviation <= 1e-9 && c_rel_error <= 1e-9;

    json summary;
    summary["schema"] = 1;
    summary["command"] = "check-equivalence";
    summary["input"] = args.input;
    summary["n"] = graph.node_count();
    summary["m"] = graph.edge_count();
    summary["omega_in"] = args.omega_in;
    summary["omega_out"] = args.omega_out;
    summary["trials"] = args.trials;
    summary["q"] = args.q;
    summary["seed"] = args.seed;
    summary["B"] = constants.b;
    summary["C"] = constants.c;
    summary["gamma"] = constants.gamma;
    summary["mean_offset"] = mean;
    summary["max_rel_deviation"] = max_rel_deviation;
    summary["C_rel_error"] = c_rel_error;
    summary["pass"] = pass;
    summary["wall_time_s"] = clock.seconds();
    emit(summary);
    return pass ? kExitOk : kExitNoConvergence;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"community detection via generalized modularity and planted-partition likelihood"};
    app.require_subcommand(1);

    DetectArgs detect_args;
    auto* detect = app.add_subcommand("detect", "find communities at a fixed resolution");
    detect->add_option("--input", detect_args.input, "edge-list file")->required();
    detect->add_option("--q", detect_args.q, "number of groups (upper bound)")->required();
    detect->add_option("--gamma", detect_args.gamma, "resolution parameter");
    detect->add_option("--null", detect_args.null_name, "null model: config|uniform");
    detect->add_option("--mode", detect_args.mode_name, "search direction: max|min");
    detect->add_option("--seed", detect_args.seed, "random seed");
    detect->add_option("--restarts", detect_args.restarts, "annealing restarts");
    detect->add_option("--out", detect_args.out, "partition output file");
    detect->add_option("--format", detect_args.format, "partition format: json|csv");

    GammaArgs gamma_args;
    auto* gamma = app.add_subcommand("gamma", "estimate the resolution parameter iteratively");
    gamma->add_option("--input", gamma_args.input, "edge-list file")->required();
    gamma->add_option("--q", gamma_args.q, "number of groups")->required();
    gamma->add_option("--gamma0", gamma_args.gamma0, "initial resolution");
    gamma->add_option("--tol", gamma_args.tol, "relative convergence tolerance");
    gamma->add_option("--max-iter", gamma_args.max_iter, "iteration cap");
    gamma->add_option("--seed", gamma_args.seed, "random seed");
    gamma->add_option("--restarts", gamma_args.restarts, "annealing restarts (first iteration)");
    gamma->add_option("--out", gamma_args.out, "trace output file");
    gamma->add_option("--format", gamma_args.format, "trace format: json|csv");

    GenerateArgs generate_args;
    auto* generate = app.add_subcommand("generate", "sample a planted-partition network");
    generate->add_option("--q", generate_args.q, "number of planted groups");
    generate->add_option("--size", generate_args.size, "nodes per group");
    generate->add_option("--d-in", generate_args.d_in, "expected within-group degree");
    generate->add_option("--d-out", generate_args.d_out, "expected degree to each other group");
    generate->add_option("--seed", generate_args.seed, "random seed");
    generate->add_option("--out", generate_args.out, "edge-list output file")->required();
    generate->add_option("--truth-out", generate_args.truth_out, "ground-truth CSV output file");

    Fig1Args fig1_args;
    auto* fig1 = app.add_subcommand(
        "fig1", "estimated vs true resolution across community counts (CSV)");
    fig1->add_option("--q-list", fig1_args.q_list, "community counts to sweep")->delimiter(',');
    fig1->add_option("--seeds", fig1_args.seeds, "samples per community count");
    fig1->add_option("--size", fig1_args.size, "nodes per group");
    fig1->add_option("--d-in", fig1_args.d_in, "expected within-group degree");
    fig1->add_option("--d-out", fig1_args.d_out, "expected degree to each other group");
    fig1->add_option("--seed", fig1_args.seed, "master random seed");
    fig1->add_option("--gamma0", fig1_args.gamma0, "initial resolution");
    fig1->add_option("--tol", fig1_args.tol, "relative convergence tolerance");
    fig1->add_option("--max-iter", fig1_args.max_iter, "iteration cap");
    fig1->add_option("--restarts", fig1_args.restarts, "annealing restarts");
    fig1->add_option("--out", fig1_args.out, "CSV output file (stdout when omitted)");

    CheckArgs check_args;
    auto* check = app.add_subcommand(
        "check-equivalence", "verify logL(g) = B Q(gamma) + C over random partitions");
    check->add_option("--input", check_args.input, "edge-list file")->required();
    check->add_option("--omega-in", check_args.omega_in, "within-group rate")->required();
    check->add_option("--omega-out", check_args.omega_out, "between-group rate")->required();
    check->add_option("--trials", check_args.trials, "random partitions to sample");
    check->add_option("--q", check_args.q, "groups per random partition");
    check->add_option("--seed", check_args.seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& error) {
        app.exit(error);
        return kExitUsage;
    }

    try {
        if (detect->parsed()) return run_detect(detect_args);
        if (gamma->parsed()) return run_gamma(gamma_args);
        if (generate->parsed()) return run_generate(generate_args);
        if (fig1->parsed()) return run_fig1(fig1_args);
        if (check->parsed()) return run_check_equivalence(check_args);
    } catch (const CLI::ValidationError& error) {
        std::cerr << "error: " << error.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& error) {
        std::cerr << "error: " << error.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}
