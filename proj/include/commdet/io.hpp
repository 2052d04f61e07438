#ifndef COMMDET_IO_HPP
#define COMMDET_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "commdet/partition.hpp"
#include "commdet/resolution.hpp"

namespace commdet {

// Edge-list text format: one edge per line, two whitespace-separated node
// ids (arbitrary strings, interned in first-seen order); '#' lines and blank
// lines are ignored. Parse failures report the line number.
Graph load_edgelist(std::istream& in);
Graph load_edgelist_file(const std::string& path);

void save_edgelist(const Graph& graph, std::ostream& out);
void save_edgelist_file(const Graph& graph, const std::string& path);

// Partition formats: a flat JSON object {node_id: group} or two-column CSV
// "node_id,group" with a header row.
void write_partition_json(const Partition& partition, std::ostream& out);
void write_partition_csv(const Partition& partition, std::ostream& out);
void write_partition_file(const Partition& partition, const std::string& path,
                          const std::string& format);

// Reads either format back against the graph it was written from (node names
// must resolve). Returns the assignment vector.
std::vector<GroupId> read_partition_json(const Graph& graph, std::istream& in);
std::vector<GroupId> read_partition_csv(const Graph& graph, std::istream& in);
std::vector<GroupId> read_partition_file(const Graph& graph, const std::string& path,
                                         const std::string& format);

// Gamma-iteration traces as JSON or CSV (one row per iteration).
std::string trace_to_json(const GammaTrace& trace);
std::string trace_to_csv(const GammaTrace& trace);

}  // namespace commdet

#endif  // COMMDET_IO_HPP
