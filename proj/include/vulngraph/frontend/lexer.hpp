#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vulngraph::frontend {

class FrontendError : public std::runtime_error {
 public:
  FrontendError(std::string message, int line, int col)
      : std::runtime_error(std::move(message) + " at line " + std::to_string(line) + ", column " +
                           std::to_string(col)),
        line(line),
        col(col) {}
  int line;
  int col;
};

enum class TokKind { Identifier, Number, String, CharLit, Keyword, Operator, Punct };

struct CToken {
  TokKind kind;
  std::string text;        // exact lexeme
  int line = 1;            // 1-based
  int col = 1;             // 1-based
  std::size_t offset = 0;  // byte offset into the source
};

// Tokenizes a C-subset source. Comments and whitespace are skipped.
// Throws FrontendError on unknown bytes or unterminated literals/comments.
std::vector<CToken> lex(std::string_view source);

bool is_c_keyword(std::string_view word);

}  // namespace vulngraph::frontend
