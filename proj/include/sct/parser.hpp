#pragma once

// Lexer, recursive-descent parser and validator for program text.
//
// Lexical syntax: `#` starts a comment to end of line; definitions are
// separated by newlines or `;`; keywords `if`, `then`, `else`; connectives
// `&&`, `||`, `!`; comparisons `<`, `<=`, `=`. Primitive operators
// `plus`, `times`, `max`, `min` are binary and reserved.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "sct/ast.hpp"
#include "sct/errors.hpp"

namespace sct {

namespace detail {

enum class Tok {
  ident, number, lparen, rparen, comma, semi, assign,
  plus, minus, lt, le, and_, or_, bang, eof
};

struct Token {
  Tok kind = Tok::eof;
  std::string text;
  Nat value = 0;
  SourceLoc loc;
};

inline const char* describe(Tok t) {
  switch (t) {
    case Tok::ident: return "identifier";
    case Tok::number: return "number";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::comma: return "','";
    case Tok::semi: return "';'";
    case Tok::assign: return "'='";
    case Tok::plus: return "'+'";
    case Tok::minus: return "'-'";
    case Tok::lt: return "'<'";
    case Tok::le: return "'<='";
    case Tok::and_: return "'&&'";
    case Tok::or_: return "'||'";
    case Tok::bang: return "'!'";
    case Tok::eof: return "end of input";
  }
  return "?";
}

inline std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto fail = [&](const std::string& msg) {
    throw ParseError({Diagnostic{{line, col}, msg}});
  };
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') { ++line; col = 1; }
      else ++col;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) { advance(1); continue; }
    Token t;
    t.loc = {line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\''))
        ++j;
      t.kind = Tok::ident;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::number;
      t.text = std::string(src.substr(i, j - i));
      auto [ptr, ec] = std::from_chars(src.data() + i, src.data() + j, t.value);
      if (ec != std::errc()) fail("number '" + t.text + "' is too large");
      advance(j - i);
    } else {
      auto two = src.substr(i, 2);
      if (two == "<=") { t.kind = Tok::le; advance(2); }
      else if (two == "&&") { t.kind = Tok::and_; advance(2); }
      else if (two == "||") { t.kind = Tok::or_; advance(2); }
      else {
        switch (c) {
          case '(': t.kind = Tok::lparen; break;
          case ')': t.kind = Tok::rparen; break;
          case ',': t.kind = Tok::comma; break;
          case ';': t.kind = Tok::semi; break;
          case '=': t.kind = Tok::assign; break;
          case '+': t.kind = Tok::plus; break;
          case '-': t.kind = Tok::minus; break;
          case '<': t.kind = Tok::lt; break;
          case '!': t.kind = Tok::bang; break;
          default: fail(std::string("unexpected character '") + c + "'");
        }
        advance(1);
      }
    }
    out.push_back(std::move(t));
  }
  Token eof;
  eof.loc = {line, col};
  out.push_back(eof);
  return out;
}

inline bool is_keyword(std::string_view s) { return s == "if" || s == "then" || s == "else"; }

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Program program() {
    Program p;
    if (peek().kind == Tok::eof) error(peek(), "empty program");
    while (peek().kind != Tok::eof) {
      p.defs.push_back(definition());
      while (peek().kind == Tok::semi) next();
    }
    return p;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void error(const Token& at, const std::string& msg) const {
    throw ParseError({Diagnostic{at.loc, msg}});
  }

  const Token& expect(Tok kind, const char* context) {
    if (peek().kind != kind)
      error(peek(), std::string("expected ") + describe(kind) + " " + context + ", found " + found(peek()));
    return next();
  }

  static std::string found(const Token& t) {
    if (t.kind == Tok::ident || t.kind == Tok::number) return "'" + t.text + "'";
    return describe(t.kind);
  }

  bool at_keyword(std::string_view kw) const {
    return peek().kind == Tok::ident && peek().text == kw;
  }

  const Token& identifier(const char* context) {
    const Token& t = expect(Tok::ident, context);
    if (is_keyword(t.text)) error(t, "keyword '" + t.text + "' used as identifier");
    return t;
  }

  FunDef definition() {
    FunDef d;
    const Token& name = identifier("at start of definition");
    d.sig.name = name.text;
    d.loc = name.loc;
    expect(Tok::lparen, "after function name");
    d.sig.params.push_back(identifier("in parameter list").text);
    while (peek().kind == Tok::comma) {
      next();
      d.sig.params.push_back(identifier("in parameter list").text);
    }
    expect(Tok::rparen, "to close parameter list");
    expect(Tok::assign, "after parameter list");
    d.body = cond();
    return d;
  }

  CondExpr cond() {
    if (at_keyword("if")) {
      next();
      BoolExpr b = bexp();
      if (!at_keyword("then")) error(peek(), "expected 'then', found " + found(peek()));
      next();
      CondExpr t = cond();
      if (!at_keyword("else")) error(peek(), "expected 'else', found " + found(peek()));
      next();
      CondExpr e = cond();
      return CondExpr{If{std::move(b), std::move(t), std::move(e)}};
    }
    if (peek().kind == Tok::lparen) {
      next();
      CondExpr inner = cond();
      expect(Tok::rparen, "to close parenthesized expression");
      return inner;
    }
    return CondExpr{Leaf{aexp()}};
  }

  std::vector<Expr> arguments() {
    std::vector<Expr> args;
    expect(Tok::lparen, "to open argument list");
    if (peek().kind == Tok::rparen) error(peek(), "empty argument list");
    args.push_back(aexp());
    while (peek().kind == Tok::comma) {
      next();
      args.push_back(aexp());
    }
    expect(Tok::rparen, "to close argument list");
    return args;
  }

  Expr aexp() {
    const Token& t = peek();
    if (t.kind == Tok::number) {
      next();
      return Expr{Const{t.value}};
    }
    if (t.kind == Tok::lparen) {
      next();
      Expr e = aexp();
      expect(Tok::rparen, "to close parenthesized expression");
      return e;
    }
    const Token& id = identifier("in expression");
    if (peek().kind == Tok::lparen) {
      if (auto op = prim_op_from_name(id.text)) return Expr{PrimOp{*op, arguments()}};
      Call c;
      c.callee = id.text;
      c.loc = id.loc;
      c.args = arguments();
      return Expr{std::move(c)};
    }
    ParamRef ref{id.text, unresolved, id.loc};
    if (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool plus = next().kind == Tok::plus;
      const Token& one = peek();
      if (one.kind != Tok::number || one.value != 1)
        error(one, std::string("only ") + (plus ? "x + 1" : "x - 1") +
                       " is allowed; use plus(...) for general arithmetic");
      next();
      return plus ? Expr{Succ{std::move(ref)}} : Expr{Pred{std::move(ref)}};
    }
    return Expr{Var{std::move(ref)}};
  }

  BoolExpr bexp() {
    BoolExpr lhs = conj();
    while (peek().kind == Tok::or_) {
      next();
      lhs = BoolExpr{Or{std::move(lhs), conj()}};
    }
    return lhs;
  }

  BoolExpr conj() {
    BoolExpr lhs = unary();
    while (peek().kind == Tok::and_) {
      next();
      lhs = BoolExpr{And{std::move(lhs), unary()}};
    }
    return lhs;
  }

  BoolExpr unary() {
    if (peek().kind == Tok::bang) {
      next();
      return BoolExpr{Not{unary()}};
    }
    if (peek().kind == Tok::lparen) {
      next();
      BoolExpr b = bexp();
      expect(Tok::rparen, "to close parenthesized condition");
      return b;
    }
    const Token& x = identifier("in condition");
    ParamRef lhs{x.text, unresolved, x.loc};
    const Token& op = next();
    switch (op.kind) {
      case Tok::assign: {
        const Token& n = expect(Tok::number, "after '=' in condition");
        return BoolExpr{EqConst{std::move(lhs), n.value}};
      }
      case Tok::lt:
      case Tok::le: {
        const Token& y = identifier("on right of comparison");
        ParamRef rhs{y.text, unresolved, y.loc};
        if (op.kind == Tok::lt) return BoolExpr{Lt{std::move(lhs), std::move(rhs)}};
        return BoolExpr{Le{std::move(lhs), std::move(rhs)}};
      }
      default:
        error(op, "expected '=', '<' or '<=' in condition, found " + found(op));
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

class Validator {
 public:
  explicit Validator(Program& p) : p_(p) {}

  void run() {
    for (std::size_t i = 0; i < p_.defs.size(); ++i) {
      const FunDef& d = p_.defs[i];
      if (prim_op_from_name(d.sig.name))
        report(d.loc, "'" + d.sig.name + "' is a primitive operator and cannot be defined");
      for (std::size_t j = 0; j < i; ++j)
        if (p_.defs[j].sig.name == d.sig.name)
          report(d.loc, "duplicate definition of '" + d.sig.name + "'");
      for (std::size_t a = 0; a < d.sig.params.size(); ++a)
        for (std::size_t b = 0; b < a; ++b)
          if (d.sig.params[a] == d.sig.params[b])
            report(d.loc, "parameter '" + d.sig.params[a] + "' repeated in '" + d.sig.name + "'");
    }
    next_site_ = 0;
    for (FunDef& d : p_.defs) {
      current_ = &d.sig;
      visit(d.body);
    }
    p_.call_site_count = next_site_;
    if (p_.initial >= p_.defs.size()) report({}, "initial function index out of range");
    if (!diags_.empty()) throw ParseError(std::move(diags_));
  }

 private:
  void report(SourceLoc loc, std::string msg) { diags_.push_back({loc, std::move(msg)}); }

  void resolve(ParamRef& r) {
    if (auto idx = current_->index_of(r.name)) r.index = *idx;
    else report(r.loc, "unknown parameter '" + r.name + "' in '" + current_->name + "'");
  }

  void visit(CondExpr& e) {
    if (auto* l = std::get_if<Leaf>(&e.node)) {
      visit(l->expr);
      return;
    }
    auto& i = std::get<If>(e.node);
    visit(i.cond);
    visit(*i.then_branch);
    visit(*i.else_branch);
  }

  void visit(BoolExpr& b) {
    std::visit(
        [&](auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, EqConst>) resolve(n.param);
          else if constexpr (std::is_same_v<T, Lt> || std::is_same_v<T, Le>) {
            resolve(n.lhs);
            resolve(n.rhs);
          } else if constexpr (std::is_same_v<T, Not>) visit(*n.operand);
          else {
            visit(*n.lhs);
            visit(*n.rhs);
          }
        },
        b.node);
  }

  void visit(Expr& e) {
    std::visit(
        [&](auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Var> || std::is_same_v<T, Succ> || std::is_same_v<T, Pred>) {
            resolve(n.param);
          } else if constexpr (std::is_same_v<T, PrimOp>) {
            if (n.args.size() != 2)
              report({}, std::string("primitive '") + to_string(n.op) + "' takes 2 arguments");
            for (Expr& a : n.args) visit(a);
          } else if constexpr (std::is_same_v<T, Call>) {
            // Pre-order: a call is labelled before the calls in its arguments.
            n.site = next_site_++;
            if (auto idx = p_.find(n.callee)) {
              n.callee_index = *idx;
              const std::size_t arity = p_.defs[*idx].sig.arity();
              if (n.args.size() != arity)
                report(n.loc, "'" + n.callee + "' expects " + std::to_string(arity) +
                                  " argument(s), got " + std::to_string(n.args.size()));
            } else {
              report(n.loc, "call to undefined function '" + n.callee + "'");
            }
            for (Expr& a : n.args) visit(a);
          }
        },
        e.node);
  }

  Program& p_;
  const FunSig* current_ = nullptr;
  std::size_t next_site_ = 0;
  std::vector<Diagnostic> diags_;
};

}  // namespace detail

/// Resolves parameter and callee references, checks arities and labels
/// call sites 0, 1, ... in document order (pre-order, left to right).
inline void validate(Program& p) { detail::Validator(p).run(); }

/// Parses and validates program text. Throws ParseError with diagnostics.
inline Program parse_program(std::string_view text) {
  Program p = detail::Parser(detail::lex(text)).program();
  validate(p);
  return p;
}

}  // namespace sct
