#include "vulngraph/cpg.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace vulngraph {

bool Cpg::has_valid_cfg() const {
  if (!entry.has_value() || *entry >= nodes.size()) return false;
  return std::any_of(edges.begin(), edges.end(),
                     [](const CpgEdge& e) { return e.etype == EdgeType::FlowsTo; });
}

std::optional<std::size_t> Cpg::index_of(std::int64_t external_id) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].id == external_id) return i;
  }
  return std::nullopt;
}

bool cpg_equal(const Cpg& a, const Cpg& b) {
  if (a.function_name != b.function_name || a.label != b.label || a.entry != b.entry) return false;
  if (a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size()) return false;
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    const CpgNode& x = a.nodes[i];
    const CpgNode& y = b.nodes[i];
    if (x.id != y.id || x.node_type != y.node_type || x.code != y.code ||
        x.is_cfg_node != y.is_cfg_node) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    if (!(a.edges[i] == b.edges[i])) return false;
  }
  return true;
}

namespace {

// Parent index per node within the IS_AST_PARENT forest; second parent or a
// cycle is reported through `violations` / CpgError by the callers below.
std::vector<std::optional<std::size_t>> ast_parents(const Cpg& g,
                                                    std::vector<Violation>* violations) {
  std::vector<std::optional<std::size_t>> parent(g.nodes.size());
  for (const CpgEdge& e : g.edges) {
    if (e.etype != EdgeType::IsAstParent) continue;
    if (e.src >= g.nodes.size() || e.dst >= g.nodes.size()) continue;
    if (parent[e.dst].has_value()) {
      if (violations) {
        violations->push_back({"ast-forest",
                               "node " + std::to_string(g.nodes[e.dst].id) +
                                   " has more than one AST parent"});
      }
      continue;
    }
    parent[e.dst] = e.src;
  }
  return parent;
}

}  // namespace

std::vector<Violation> validate(const Cpg& g) {
  std::vector<Violation> out;

  if (g.label.has_value() && *g.label != 0 && *g.label != 1) {
    out.push_back({"label-domain", "label " + std::to_string(*g.label) + " is not 0 or 1"});
  }

  std::unordered_set<std::int64_t> seen_ids;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const CpgNode& n = g.nodes[i];
    if (n.id < 0) {
      out.push_back({"node-id", "node at index " + std::to_string(i) + " has negative id"});
    }
    if (!seen_ids.insert(n.id).second) {
      out.push_back({"node-id", "duplicate node id " + std::to_string(n.id)});
    }
    if (n.node_type.empty()) {
      out.push_back({"node-type", "node " + std::to_string(n.id) + " has empty node_type"});
    }
  }

  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const CpgEdge& e = g.edges[i];
    if (e.src >= g.nodes.size() || e.dst >= g.nodes.size()) {
      out.push_back({"edge-endpoint", "edge " + std::to_string(i) + " references a missing node"});
    }
  }

  if (g.entry.has_value() && *g.entry >= g.nodes.size()) {
    out.push_back({"entry-node", "entry index out of range"});
  }

  // AST forest: single parent per node, no cycles.
  std::vector<std::optional<std::size_t>> parent = ast_parents(g, &out);
  std::vector<int> state(g.nodes.size(), 0);  // 0 unvisited, 1 on path, 2 done
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    std::size_t v = i;
    std::vector<std::size_t> path;
    while (state[v] == 0 && parent[v].has_value()) {
      state[v] = 1;
      path.push_back(v);
      v = *parent[v];
    }
    if (state[v] == 1) {
      out.push_back({"ast-forest", "AST parent cycle through node " + std::to_string(g.nodes[v].id)});
    }
    for (std::size_t p : path) state[p] = 2;
    state[v] = 2;
  }

  return out;
}

std::vector<int> ast_depth(const Cpg& g) {
  std::vector<std::optional<std::size_t>> parent = ast_parents(g, nullptr);
  std::vector<int> depth(g.nodes.size(), -1);

  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (depth[i] >= 0) continue;
    std::size_t v = i;
    std::vector<std::size_t> path;
    std::unordered_set<std::size_t> on_path;
    while (depth[v] < 0 && parent[v].has_value()) {
      if (!on_path.insert(v).second) {
        throw CpgError("AST cycle detected through node id " + std::to_string(g.nodes[v].id));
      }
      path.push_back(v);
      v = *parent[v];
    }
    if (on_path.count(v)) {
      throw CpgError("AST cycle detected through node id " + std::to_string(g.nodes[v].id));
    }
    int d = depth[v] >= 0 ? depth[v] : 0;
    if (depth[v] < 0) depth[v] = 0;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      depth[*it] = ++d;
    }
  }
  return depth;
}

std::pair<std::vector<Cpg>, FilterReport> filter_dataset(std::vector<Cpg> graphs,
                                                         std::size_t max_nodes) {
  FilterReport report;
  std::vector<Cpg> kept;
  kept.reserve(graphs.size());
  for (Cpg& g : graphs) {
    if (g.nodes.size() > max_nodes) {
      ++report.dropped_size;
    } else if (!g.has_valid_cfg()) {
      ++report.dropped_no_cfg;
    } else {
      kept.push_back(std::move(g));
    }
  }
  return {std::move(kept), report};
}

}  // namespace vulngraph
