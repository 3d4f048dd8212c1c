#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "vulngraph/cpg.hpp"

namespace vulngraph {

struct LoadIssue {
  std::size_t line = 0;  // 1-based line number in the stream
  std::string message;
};

struct LoadSummary {
  std::vector<LoadIssue> errors;     // malformed records and rejected graphs
  std::size_t dropped_edges = 0;     // edges with a type outside the 13-name set
  std::size_t deduplicated_edges = 0;
  std::size_t rejected_graphs = 0;
};

struct LoadResult {
  std::vector<Cpg> graphs;
  LoadSummary summary;
};

// Parses newline-delimited CPG records. Malformed records are reported with
// their line number and skipped; unknown edge types are dropped and counted;
// an edge or entry referencing a missing node id rejects the whole graph.
// Node ids are remapped to dense indices; external ids are preserved.
LoadResult parse_cpg_stream(std::istream& in);

LoadResult load_cpg_file(const std::string& path);

// One canonical JSON line (no trailing newline).
std::string serialize_cpg(const Cpg& g);

void write_cpg_jsonl(std::ostream& out, const std::vector<Cpg>& graphs);
void save_cpg_file(const std::string& path, const std::vector<Cpg>& graphs);

}  // namespace vulngraph
