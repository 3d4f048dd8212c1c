#include "vulngraph/cpg_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include <json.hpp>

namespace vulngraph {

namespace {

using nlohmann::json;

// Throws json::exception / CpgError on malformed records; id-resolution
// problems come back as CpgError so the caller can reject just this graph.
Cpg parse_record(const json& j, LoadSummary& summary) {
  Cpg g;
  g.function_name = j.at("function").get<std::string>();

  const json& label = j.at("label");
  if (!label.is_null()) g.label = label.get<int>();

  std::unordered_map<std::int64_t, std::size_t> index;
  for (const json& jn : j.at("nodes")) {
    CpgNode n;
    n.id = jn.at("id").get<std::int64_t>();
    n.node_type = jn.at("type").get<std::string>();
    n.code = jn.value("code", std::string{});
    n.is_cfg_node = jn.value("cfg", false);
    if (!index.emplace(n.id, g.nodes.size()).second) {
      throw CpgError("duplicate node id " + std::to_string(n.id));
    }
    g.nodes.push_back(std::move(n));
  }

  std::set<std::tuple<std::size_t, std::size_t, int>> seen;
  for (const json& je : j.at("edges")) {
    const std::string type_name = je.at("type").get<std::string>();
    std::optional<EdgeType> etype = parse_edge_type(type_name);
    if (!etype.has_value()) {
      ++summary.dropped_edges;  // outside the 13-relation set
      continue;
    }
    const std::int64_t src_id = je.at("src").get<std::int64_t>();
    const std::int64_t dst_id = je.at("dst").get<std::int64_t>();
    auto src_it = index.find(src_id);
    auto dst_it = index.find(dst_id);
    if (src_it == index.end() || dst_it == index.end()) {
      throw CpgError("edge references missing node id " +
                     std::to_string(src_it == index.end() ? src_id : dst_id));
    }
    CpgEdge e{src_it->second, dst_it->second, *etype};
    if (!seen.emplace(e.src, e.dst, edge_type_code(e.etype)).second) {
      ++summary.deduplicated_edges;
      continue;
    }
    g.edges.push_back(e);
  }

  const json& entry = j.at("entry");
  if (!entry.is_null()) {
    auto it = index.find(entry.get<std::int64_t>());
    if (it == index.end()) {
      throw CpgError("entry references missing node id " + std::to_string(entry.get<std::int64_t>()));
    }
    g.entry = it->second;
  }
  return g;
}

}  // namespace

LoadResult parse_cpg_stream(std::istream& in) {
  LoadResult result;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) {
      result.summary.errors.push_back({line_no, "malformed JSON record"});
      continue;
    }
    try {
      result.graphs.push_back(parse_record(j, result.summary));
    } catch (const CpgError& e) {
      ++result.summary.rejected_graphs;
      result.summary.errors.push_back({line_no, e.what()});
    } catch (const json::exception& e) {
      result.summary.errors.push_back({line_no, e.what()});
    }
  }
  return result;
}

LoadResult load_cpg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CpgError("cannot open CPG file: " + path);
  return parse_cpg_stream(in);
}

std::string serialize_cpg(const Cpg& g) {
  json j;
  j["function"] = g.function_name;
  if (g.label.has_value()) {
    j["label"] = *g.label;
  } else {
    j["label"] = nullptr;
  }
  if (g.entry.has_value()) {
    j["entry"] = g.nodes[*g.entry].id;
  } else {
    j["entry"] = nullptr;
  }
  j["nodes"] = json::array();
  for (const CpgNode& n : g.nodes) {
    j["nodes"].push_back({{"id", n.id}, {"type", n.node_type}, {"code", n.code}, {"cfg", n.is_cfg_node}});
  }
  j["edges"] = json::array();
  for (const CpgEdge& e : g.edges) {
    j["edges"].push_back({{"src", g.nodes[e.src].id},
                          {"dst", g.nodes[e.dst].id},
                          {"type", std::string(edge_type_name(e.etype))}});
  }
  return j.dump();
}

void write_cpg_jsonl(std::ostream& out, const std::vector<Cpg>& graphs) {
  for (const Cpg& g : graphs) out << serialize_cpg(g) << '\n';
}

void save_cpg_file(const std::string& path, const std::vector<Cpg>& graphs) {
  std::ofstream out(path);
  if (!out) throw CpgError("cannot open output file: " + path);
  write_cpg_jsonl(out, graphs);
}

}  // namespace vulngraph
