#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vulngraph/edge_type.hpp"

namespace vulngraph {

// Structural errors (AST cycles, unresolvable references).
class CpgError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CpgNode {
  std::int64_t id = 0;  // external id, unique within the graph
  std::string node_type;
  std::string code;
  bool is_cfg_node = false;
};

// Edge endpoints are dense indices into Cpg::nodes. External ids appear only
// in CpgNode::id and in the on-disk format.
struct CpgEdge {
  std::size_t src = 0;
  std::size_t dst = 0;
  EdgeType etype = EdgeType::Controls;
};

inline bool operator==(const CpgEdge& a, const CpgEdge& b) {
  return a.src == b.src && a.dst == b.dst && a.etype == b.etype;
}

struct Cpg {
  std::string function_name;
  std::optional<int> label;  // 0 = safe, 1 = vulnerable, nullopt = unlabeled
  std::vector<CpgNode> nodes;
  std::vector<CpgEdge> edges;
  std::optional<std::size_t> entry;  // dense index of the CFG entry node

  // >= 1 FLOWS_TO edge and a resolved entry node.
  bool has_valid_cfg() const;

  std::optional<std::size_t> index_of(std::int64_t external_id) const;
};

bool cpg_equal(const Cpg& a, const Cpg& b);

struct Violation {
  std::string invariant;  // e.g. "ast-forest", "label-domain"
  std::string detail;
};

// Empty result iff every Cpg invariant holds.
std::vector<Violation> validate(const Cpg& g);

// Depth within the IS_AST_PARENT forest; nodes with no AST incidence get 0.
// Throws CpgError when the AST edges contain a cycle.
std::vector<int> ast_depth(const Cpg& g);

struct FilterReport {
  std::size_t dropped_size = 0;
  std::size_t dropped_no_cfg = 0;
  bool empty() const { return dropped_size == 0 && dropped_no_cfg == 0; }
};

// Keeps a graph iff |V| <= max_nodes and it has a valid CFG.
std::pair<std::vector<Cpg>, FilterReport> filter_dataset(std::vector<Cpg> graphs,
                                                         std::size_t max_nodes = 500);

}  // namespace vulngraph
