#include "commdet/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace commdet {

namespace {

[[noreturn]] void parse_fail(std::size_t line_number, const std::string& what) {
    throw std::runtime_error("parse error at line " + std::to_string(line_number) + ": " + what);
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return in;
}

std::unordered_map<std::string, NodeId> name_index(const Graph& graph) {
    std::unordered_map<std::string, NodeId> index;
    index.reserve(graph.node_count());
    for (NodeId i = 0; i < graph.node_count(); ++i) index.emplace(graph.node_name(i), i);
    return index;
}

// Full round-trip precision for doubles in text output.
std::string format_double(double value) {
    std::ostringstream out;
    out << std::setprecision(17) << value;
    return out.str();
}

}  // namespace

Graph load_edgelist(std::istream& in) {
    std::vector<std::pair<NodeId, NodeId>> pairs;
    std::vector<std::string> names;
    std::unordered_map<std::string, NodeId> ids;
    auto intern = [&](const std::string& token) {
        auto [it, inserted] = ids.try_emplace(token, static_cast<NodeId>(names.size()));
        if (inserted) names.push_back(token);
        return it->second;
    };

    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a)) continue;        // blank line
        if (a.front() == '#') continue;      // comment
        if (!(fields >> b)) parse_fail(line_number, "expected two node ids");
        if (fields >> extra) parse_fail(line_number, "expected two node ids, got more");
        const NodeId u = intern(a);
        const NodeId v = intern(b);
        pairs.emplace_back(u, v);
    }
    if (in.bad()) throw std::runtime_error("I/O failure while reading edge list");
    if (pairs.empty()) throw std::runtime_error("empty graph");
    const NodeId n = static_cast<NodeId>(names.size());
    return Graph(n, pairs, std::move(names));
}

Graph load_edgelist_file(const std::string& path) {
    auto in = open_input(path);
    return load_edgelist(in);
}

void save_edgelist(const Graph& graph, std::ostream& out) {
    for (const auto& [pair, count] : graph.edge_multiset())
        for (std::int64_t c = 0; c < count; ++c)
            out << graph.node_name(pair.first) << ' ' << graph.node_name(pair.second) << '\n';
}

void save_edgelist_file(const Graph& graph, const std::string& path) {
    auto out = open_output(path);
    save_edgelist(graph, out);
}

void write_partition_json(const Partition& partition, std::ostream& out) {
    nlohmann::ordered_json object = nlohmann::ordered_json::object();
    const Graph& graph = partition.graph();
    for (NodeId i = 0; i < graph.node_count(); ++i)
        object[graph.node_name(i)] = partition.group_of(i);
    out << object.dump(2) << '\n';
}

void write_partition_csv(const Partition& partition, std::ostream& out) {
    const Graph& graph = partition.graph();
    out << "node_id,group\n";
    for (NodeId i = 0; i < graph.node_count(); ++i)
        out << graph.node_name(i) << ',' << partition.group_of(i) << '\n';
}

void write_partition_file(const Partition& partition, const std::string& path,
                          const std::string& format) {
    auto out = open_output(path);
    if (format == "json") write_partition_json(partition, out);
    else if (format == "csv") write_partition_csv(partition, out);
    else throw std::invalid_argument("unknown partition format: " + format);
}

std::vector<GroupId> read_partition_json(const Graph& graph, std::istream& in) {
    nlohmann::json object;
    in >> object;
    if (!object.is_object()) throw std::runtime_error("partition JSON must be an object");
    const auto index = name_index(graph);
    std::vector<GroupId> assignment(graph.node_count(), 0);
    std::vector<bool> seen(graph.node_count(), false);
    for (const auto& [name, group] : object.items()) {
        auto it = index.find(name);
        if (it == index.end()) throw std::runtime_error("unknown node id: " + name);
        assignment[it->second] = group.get<GroupId>();
        seen[it->second] = true;
    }
    for (NodeId i = 0; i < graph.node_count(); ++i)
        if (!seen[i]) throw std::runtime_error("missing node id: " + graph.node_name(i));
    return assignment;
}

std::vector<GroupId> read_partition_csv(const Graph& graph, std::istream& in) {
    const auto index = name_index(graph);
    std::vector<GroupId> assignment(graph.node_count(), 0);
    std::vector<bool> seen(graph.node_count(), false);
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        if (line_number == 1 && line.rfind("node_id,", 0) == 0) continue;  // header
        const auto comma = line.find(',');
        if (comma == std::string::npos) parse_fail(line_number, "expected node_id,group");
        const std::string name = line.substr(0, comma);
        auto it = index.find(name);
        if (it == index.end()) parse_fail(line_number, "unknown node id: " + name);
        assignment[it->second] = static_cast<GroupId>(std::stoul(line.substr(comma + 1)));
        seen[it->second] = true;
    }
    for (NodeId i = 0; i < graph.node_count(); ++i)
        if (!seen[i]) throw std::runtime_error("missing node id: " + graph.node_name(i));
    return assignment;
}

std::vector<GroupId> read_partition_file(const Graph& graph, const std::string& path,
                                         const std::string& format) {
    auto in = open_input(path);
    if (format == "json") return read_partition_json(graph, in);
    if (format == "csv") return read_partition_csv(graph, in);
    throw std::invalid_argument("unknown partition format: " + format);
}

std::string trace_to_json(const GammaTrace& trace) {
    nlohmann::ordered_json object;
    object["schema"] = 1;
    object["converged"] = trace.converged;
    object["final_gamma"] = trace.final_gamma;
    if (!trace.diagnostic.empty()) object["diagnostic"] = trace.diagnostic;
    object["iterations"] = nlohmann::ordered_json::array();
    for (const auto& it : trace.iterations) {
        nlohmann::ordered_json row;
        row["iteration"] = it.iteration;
        row["gamma"] = it.gamma;
        row["omega_in"] = it.omega_in;
        row["omega_out"] = it.omega_out;
        row["Q"] = it.modularity;
        row["m_in"] = it.m_in;
        object["iterations"].push_back(row);
    }
    return object.dump(2) + "\n";
}

std::string trace_to_csv(const GammaTrace& trace) {
    std::ostringstream out;
    out << "iteration,gamma,omega_in,omega_out,Q,m_in\n";
    for (const auto& it : trace.iterations) {
        out << it.iteration << ',' << format_double(it.gamma) << ',' << format_double(it.omega_in)
            << ',' << format_double(it.omega_out) << ',' << format_double(it.modularity) << ','
            << it.m_in << '\n';
    }
    return out.str();
}

}  // namespace commdet
