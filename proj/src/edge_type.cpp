#include "vulngraph/edge_type.hpp"

namespace vulngraph {

namespace {
constexpr std::array<std::string_view, kNumEdgeTypes> kNames = {
    "CONTROLS",           "DECLARES", "DEF",
    "DOM",                "FLOWS_TO", "IS_AST_PARENT",
    "IS_CLASS_OF",        "IS_FILE_OF", "IS_FUNCTION_OF_AST",
    "IS_FUNCTION_OF_CFG", "POST_DOM", "REACHES",
    "USE"};
}  // namespace

std::string_view edge_type_name(EdgeType t) {
  return kNames[static_cast<int>(t) - 1];
}

std::optional<EdgeType> parse_edge_type(std::string_view name) {
  for (int i = 0; i < kNumEdgeTypes; ++i) {
    if (kNames[i] == name) return static_cast<EdgeType>(i + 1);
  }
  return std::nullopt;
}

std::optional<EdgeType> edge_type_from_code(int code) {
  if (code < 1 || code > kNumEdgeTypes) return std::nullopt;
  return static_cast<EdgeType>(code);
}

}  // namespace vulngraph
