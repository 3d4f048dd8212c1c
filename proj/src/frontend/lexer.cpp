#include "vulngraph/frontend/lexer.hpp"

#include <array>
#include <cctype>

namespace vulngraph::frontend {

namespace {

constexpr std::array<std::string_view, 10> kKeywords = {
    "int", "char", "void", "if", "else", "while", "for", "return", "break", "continue"};

// Longest-match first.
constexpr std::array<std::string_view, 21> kMultiOps = {
    "<<=", ">>=", "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=",
    "&&",  "||",  "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^="};

constexpr std::string_view kSingleOps = "+-*/%<>=!&|^~.?:";
constexpr std::string_view kPuncts = "()[]{};,";

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

bool is_c_keyword(std::string_view word) {
  for (std::string_view k : kKeywords) {
    if (k == word) return true;
  }
  return false;
}

std::vector<CToken> lex(std::string_view src) {
  std::vector<CToken> out;
  std::size_t i = 0;
  int line = 1;
  int col = 1;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };

  auto push = [&](TokKind kind, std::size_t begin, std::size_t end, int tline, int tcol) {
    out.push_back({kind, std::string(src.substr(begin, end - begin)), tline, tcol, begin});
  };

  while (i < src.size()) {
    const char c = src[i];
    const int tline = line;
    const int tcol = col;

    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '*') {
      advance(2);
      bool closed = false;
      while (i + 1 < src.size()) {
        if (src[i] == '*' && src[i + 1] == '/') {
          advance(2);
          closed = true;
          break;
        }
        advance(1);
      }
      if (!closed) throw FrontendError("unterminated comment", tline, tcol);
      continue;
    }
    if (ident_start(c)) {
      std::size_t begin = i;
      while (i < src.size() && ident_char(src[i])) advance(1);
      std::string_view word = src.substr(begin, i - begin);
      push(is_c_keyword(word) ? TokKind::Keyword : TokKind::Identifier, begin, i, tline, tcol);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      // Covers decimal, hex (0x..), octal, suffixes, and simple floats.
      std::size_t begin = i;
      while (i < src.size() && (ident_char(src[i]) || src[i] == '.')) advance(1);
      push(TokKind::Number, begin, i, tline, tcol);
      continue;
    }
    if (c == '"' || c == '\'') {
      const char quote = c;
      std::size_t begin = i;
      advance(1);
      bool closed = false;
      while (i < src.size() && src[i] != '\n') {
        if (src[i] == '\\' && i + 1 < src.size()) {
          advance(2);
          continue;
        }
        if (src[i] == quote) {
          advance(1);
          closed = true;
          break;
        }
        advance(1);
      }
      if (!closed) {
        throw FrontendError(quote == '"' ? "unterminated string literal" : "unterminated character literal",
                            tline, tcol);
      }
      push(quote == '"' ? TokKind::String : TokKind::CharLit, begin, i, tline, tcol);
      continue;
    }

    bool matched = false;
    for (std::string_view op : kMultiOps) {
      if (src.substr(i, op.size()) == op) {
        push(TokKind::Operator, i, i + op.size(), tline, tcol);
        advance(op.size());
        matched = true;
        break;
      }
    }
    if (matched) continue;

    if (kSingleOps.find(c) != std::string_view::npos) {
      push(TokKind::Operator, i, i + 1, tline, tcol);
      advance(1);
      continue;
    }
    if (kPuncts.find(c) != std::string_view::npos) {
      push(TokKind::Punct, i, i + 1, tline, tcol);
      advance(1);
      continue;
    }
    throw FrontendError(std::string("unexpected character '") + c + "'", tline, tcol);
  }
  return out;
}

}  // namespace vulngraph::frontend
