// Copyright 2026 The ACDC Provenance Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// @file policy_parser.hpp
/// Recursive-descent parser for the policy language.
///
///   policy  := expr EOF
///   expr    := quant | impl
///   quant   := ("exists" | "forall") IDENT ":" sort "." expr
///   impl    := orex ("=>" impl)?
///   orex    := andex ("or" andex)*
///   andex   := unary ("and" unary)*
///   unary   := "not" unary | "(" expr ")" | atom | "true" | "false"
///   atom    := "edge" "(" term "," term "," LABEL ")"
///            | "member" "(" term "," IDENT ")"
///   term    := IDENT
///
/// `#` starts a line comment. A term is a variable iff a quantifier for
/// that name is in scope, otherwise a constant.

#ifndef ACDC_POLICY_PARSER_HPP
#define ACDC_POLICY_PARSER_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "acdc/error.hpp"
#include "acdc/graph.hpp"
#include "acdc/policy.hpp"

namespace acdc {

/// Syntax error with a 1-based source position. Also raised, with a more
/// specific code, for shadowed variables and unknown sorts or labels.
class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t line, std::size_t column,
             std::set<std::string> expected, const std::string& message)
      : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::set<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::set<std::string> expected_;
};

namespace detail {

inline constexpr std::array<std::string_view, 9> kKeywords = {
    "exists", "forall", "and", "or", "not", "true", "false", "edge", "member",
};

inline bool is_keyword(std::string_view s) {
  return std::find(kKeywords.begin(), kKeywords.end(), s) != kKeywords.end();
}

struct Token {
  enum class Kind { Ident, LParen, RParen, Comma, Colon, Dot, Arrow, End };
  Kind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline std::string describe(const Token& t) {
  switch (t.kind) {
    case Token::Kind::End: return "end of input";
    case Token::Kind::Ident: return "'" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      std::size_t line = line_, col = col_;
      if (pos_ >= src_.size()) {
        out.push_back({Token::Kind::End, "", line, col});
        return out;
      }
      char c = src_[pos_];
      auto single = [&](Token::Kind k) {
        out.push_back({k, std::string(1, c), line, col});
        advance();
      };
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string ident;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                      src_[pos_] == '_')) {
          ident += src_[pos_];
          advance();
        }
        out.push_back({Token::Kind::Ident, std::move(ident), line, col});
      } else if (c == '(') {
        single(Token::Kind::LParen);
      } else if (c == ')') {
        single(Token::Kind::RParen);
      } else if (c == ',') {
        single(Token::Kind::Comma);
      } else if (c == ':') {
        single(Token::Kind::Colon);
      } else if (c == '.') {
        single(Token::Kind::Dot);
      } else if (c == '=' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
        advance();
        advance();
        out.push_back({Token::Kind::Arrow, "=>", line, col});
      } else {
        std::string shown = std::isprint(static_cast<unsigned char>(c))
                                ? std::string(1, c)
                                : "\\x" + hex(static_cast<unsigned char>(c));
        throw ParseError(Errc::ParseError, line, col, {},
                         "unexpected character '" + shown + "'");
      }
    }
  }

 private:
  static std::string hex(unsigned char c) {
    const char* digits = "0123456789abcdef";
    return {digits[c >> 4], digits[c & 15]};
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  // Bounds recursion on adversarial input.
  static constexpr std::size_t kMaxDepth = 512;

  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  FormulaPtr parse_policy() {
    FormulaPtr f = expr();
    if (peek().kind != Token::Kind::End) fail({"end of input", "'=>'", "'or'", "'and'"});
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  bool at_keyword(std::string_view kw) const {
    return peek().kind == Token::Kind::Ident && peek().text == kw;
  }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    const Token& t = peek();
    std::string msg = "expected ";
    bool first = true;
    for (const auto& e : expected) {
      msg += (first ? "" : " or ") + e;
      first = false;
    }
    msg += ", found " + describe(t);
    throw ParseError(Errc::ParseError, t.line, t.column, std::move(expected), msg);
  }

  const Token& expect(Token::Kind kind, const char* shown) {
    if (peek().kind != kind) fail({shown});
    return take();
  }

  void expect_keyword(std::string_view kw) {
    if (!at_keyword(kw)) fail({"'" + std::string(kw) + "'"});
    take();
  }

  std::string identifier(const char* what) {
    const Token& t = peek();
    if (t.kind != Token::Kind::Ident || is_keyword(t.text)) fail({what});
    return take().text;
  }

  struct DepthGuard {
    Parser& p;
    explicit DepthGuard(Parser& parser) : p(parser) {
      if (++p.depth_ > kMaxDepth) {
        const Token& t = p.peek();
        throw ParseError(Errc::ParseError, t.line, t.column, {}, "nesting too deep");
      }
    }
    ~DepthGuard() { --p.depth_; }
  };

  FormulaPtr expr() {
    DepthGuard guard(*this);
    if (at_keyword("exists") || at_keyword("forall")) return quant();
    return impl();
  }

  FormulaPtr quant() {
    bool is_exists = take().text == "exists";
    const Token& var_tok = peek();
    std::string var = identifier("variable name");
    if (std::find(scope_.begin(), scope_.end(), var) != scope_.end()) {
      throw ParseError(Errc::ShadowingError, var_tok.line, var_tok.column, {},
                       "variable '" + var + "' is already bound in this scope");
    }
    expect(Token::Kind::Colon, "':'");
    const Token& sort_tok = peek();
    if (sort_tok.kind != Token::Kind::Ident) fail({"sort name"});
    auto sort = sort_from_string(sort_tok.text);
    if (!sort) {
      throw ParseError(Errc::UnknownSort, sort_tok.line, sort_tok.column, {"sort name"},
                       "unknown sort '" + sort_tok.text + "'");
    }
    take();
    expect(Token::Kind::Dot, "'.'");
    scope_.push_back(var);
    FormulaPtr body = expr();
    scope_.pop_back();
    return is_exists ? exists(std::move(var), *sort, std::move(body))
                     : forall(std::move(var), *sort, std::move(body));
  }

  FormulaPtr impl() {
    DepthGuard guard(*this);
    FormulaPtr lhs = orex();
    if (peek().kind == Token::Kind::Arrow) {
      take();
      return implies(std::move(lhs), impl());
    }
    return lhs;
  }

  FormulaPtr orex() {
    FormulaPtr lhs = andex();
    while (at_keyword("or")) {
      take();
      lhs = disj(std::move(lhs), andex());
    }
    return lhs;
  }

  FormulaPtr andex() {
    FormulaPtr lhs = unary();
    while (at_keyword("and")) {
      take();
      lhs = conj(std::move(lhs), unary());
    }
    return lhs;
  }

  FormulaPtr unary() {
    DepthGuard guard(*this);
    const Token& t = peek();
    if (t.kind == Token::Kind::LParen) {
      take();
      FormulaPtr inner = expr();
      expect(Token::Kind::RParen, "')'");
      return inner;
    }
    if (t.kind == Token::Kind::Ident) {
      if (t.text == "not") {
        take();
        return negate(unary());
      }
      if (t.text == "true" || t.text == "false") {
        bool v = take().text == "true";
        return truth(v);
      }
      if (t.text == "edge") return edge_atom();
      if (t.text == "member") return member_atom();
    }
    fail({"'('", "'not'", "'true'", "'false'", "'edge'", "'member'"});
  }

  Term term() {
    std::string name = identifier("identifier");
    bool bound = std::find(scope_.begin(), scope_.end(), name) != scope_.end();
    return bound ? Term::var(std::move(name)) : Term::constant(std::move(name));
  }

  FormulaPtr edge_atom() {
    expect_keyword("edge");
    expect(Token::Kind::LParen, "'('");
    Term from = term();
    expect(Token::Kind::Comma, "','");
    Term to = term();
    expect(Token::Kind::Comma, "','");
    const Token& lt = peek();
    if (lt.kind != Token::Kind::Ident) fail({"relation label"});
    auto label = label_from_string(lt.text);
    if (!label) {
      throw ParseError(Errc::UnknownLabel, lt.line, lt.column, {"relation label"},
                       "unknown relation label '" + lt.text + "'");
    }
    take();
    expect(Token::Kind::RParen, "')'");
    return edge(std::move(from), std::move(to), *label);
  }

  FormulaPtr member_atom() {
    expect_keyword("member");
    expect(Token::Kind::LParen, "'('");
    Term t = term();
    expect(Token::Kind::Comma, "','");
    std::string set = identifier("set name");
    expect(Token::Kind::RParen, "')'");
    return member(std::move(t), std::move(set));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
  std::vector<std::string> scope_;
};

}  // namespace detail

/// Parses one policy. Throws ParseError (codes ParseError, ShadowingError,
/// UnknownSort, UnknownLabel) on any non-conforming input.
inline PolicyAst parse_policy(std::string_view text) {
  detail::Parser parser(detail::Lexer(text).run());
  return parser.parse_policy();
}

}  // namespace acdc

#endif  // ACDC_POLICY_PARSER_HPP
