#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace vulngraph::frontend {

// Closed node taxonomy; these names become CpgNode::node_type verbatim.
enum class AstKind {
  FunctionDef,
  Parameter,
  CompoundStatement,
  IdentifierDeclStatement,
  ExpressionStatement,
  IfStatement,
  WhileStatement,
  ForStatement,
  ReturnStatement,
  BreakStatement,
  ContinueStatement,
  Condition,
  CallExpression,
  AssignmentExpression,
  BinaryExpression,
  UnaryExpression,
  PtrMemberAccess,
  ArrayIndexing,
  Identifier,
  NumberLiteral,
  StringLiteral,
  Symbol,
};

std::string_view ast_kind_name(AstKind k);

struct AstNode {
  AstKind kind;
  std::string text;  // source slice (identifier name, statement text, ...)
  std::string op;    // operator lexeme for unary/binary/assignment nodes
  std::string name;  // FunctionDef / Parameter name
  std::vector<AstNode> children;
  int line = 1;
  int col = 1;
  int id = -1;  // pre-order id, assigned by number_ast after parsing

  bool is_statement() const;
};

// Assigns pre-order ids and returns an id -> node lookup table. The tree must
// outlive the returned pointers and must not be mutated afterwards.
std::vector<const AstNode*> number_ast(AstNode& root);

}  // namespace vulngraph::frontend
