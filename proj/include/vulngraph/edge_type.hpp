#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace vulngraph {

// The 13 edge relations of a code property graph. Codes are stable and
// contiguous in 1..13; anything outside the set is discarded at ingest.
enum class EdgeType : std::uint8_t {
  Controls = 1,
  Declares = 2,
  Def = 3,
  Dom = 4,
  FlowsTo = 5,
  IsAstParent = 6,
  IsClassOf = 7,
  IsFileOf = 8,
  IsFunctionOfAst = 9,
  IsFunctionOfCfg = 10,
  PostDom = 11,
  Reaches = 12,
  Use = 13,
};

inline constexpr int kNumEdgeTypes = 13;

std::string_view edge_type_name(EdgeType t);
std::optional<EdgeType> parse_edge_type(std::string_view name);

constexpr int edge_type_code(EdgeType t) { return static_cast<int>(t); }
std::optional<EdgeType> edge_type_from_code(int code);

constexpr std::array<EdgeType, kNumEdgeTypes> all_edge_types() {
  return {EdgeType::Controls,        EdgeType::Declares,
          EdgeType::Def,             EdgeType::Dom,
          EdgeType::FlowsTo,         EdgeType::IsAstParent,
          EdgeType::IsClassOf,       EdgeType::IsFileOf,
          EdgeType::IsFunctionOfAst, EdgeType::IsFunctionOfCfg,
          EdgeType::PostDom,         EdgeType::Reaches,
          EdgeType::Use};
}

// Small value-type set over the 13 relations.
class EdgeTypeSet {
 public:
  constexpr EdgeTypeSet() = default;

  constexpr void insert(EdgeType t) { bits_ |= bit(t); }
  constexpr void erase(EdgeType t) { bits_ &= ~bit(t); }
  constexpr bool contains(EdgeType t) const { return (bits_ & bit(t)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }

  static constexpr EdgeTypeSet all() {
    EdgeTypeSet s;
    s.bits_ = (1u << kNumEdgeTypes) - 1;
    return s;
  }
  static constexpr EdgeTypeSet none() { return EdgeTypeSet{}; }

  // Control flow, data flow, and AST hierarchy relations; the recommended
  // restriction for metapath walks.
  static constexpr EdgeTypeSet walk_prose() {
    EdgeTypeSet s;
    s.insert(EdgeType::FlowsTo);
    s.insert(EdgeType::Reaches);
    s.insert(EdgeType::Def);
    s.insert(EdgeType::Use);
    s.insert(EdgeType::Controls);
    s.insert(EdgeType::IsAstParent);
    s.insert(EdgeType::Dom);
    return s;
  }

  friend constexpr bool operator==(EdgeTypeSet a, EdgeTypeSet b) { return a.bits_ == b.bits_; }

 private:
  static constexpr std::uint16_t bit(EdgeType t) {
    return static_cast<std::uint16_t>(1u << (static_cast<int>(t) - 1));
  }
  std::uint16_t bits_ = 0;
};

}  // namespace vulngraph
