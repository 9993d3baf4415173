#pragma once

// Canonical pretty-printer. parse_program(print(p)) reproduces p.

#include <sstream>
#include <string>
#include <type_traits>
#include <variant>

#include "sct/ast.hpp"

namespace sct {

inline void print(std::ostream& os, const Expr& e);

inline void print_args(std::ostream& os, const std::vector<Expr>& args) {
  os << '(';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) os << ", ";
    print(os, args[i]);
  }
  os << ')';
}

inline void print(std::ostream& os, const Expr& e) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Var>) os << n.param.name;
        else if constexpr (std::is_same_v<T, Succ>) os << n.param.name << " + 1";
        else if constexpr (std::is_same_v<T, Pred>) os << n.param.name << " - 1";
        else if constexpr (std::is_same_v<T, Const>) os << n.value;
        else if constexpr (std::is_same_v<T, PrimOp>) {
          os << to_string(n.op);
          print_args(os, n.args);
        } else {
          os << n.callee;
          print_args(os, n.args);
        }
      },
      e.node);
}

namespace detail {

// 1 = ||, 2 = &&, 3 = unary and atoms.
inline int precedence(const BoolExpr& b) {
  if (std::holds_alternative<Or>(b.node)) return 1;
  if (std::holds_alternative<And>(b.node)) return 2;
  return 3;
}

inline void print_bool(std::ostream& os, const BoolExpr& b, int min_prec) {
  const bool parens = precedence(b) < min_prec;
  if (parens) os << '(';
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, EqConst>) os << n.param.name << " = " << n.value;
        else if constexpr (std::is_same_v<T, Lt>) os << n.lhs.name << " < " << n.rhs.name;
        else if constexpr (std::is_same_v<T, Le>) os << n.lhs.name << " <= " << n.rhs.name;
        else if constexpr (std::is_same_v<T, Not>) {
          os << '!';
          print_bool(os, *n.operand, 3);
        } else {
          constexpr int prec = std::is_same_v<T, Or> ? 1 : 2;
          print_bool(os, *n.lhs, prec);
          os << (prec == 1 ? " || " : " && ");
          print_bool(os, *n.rhs, prec + 1);
        }
      },
      b.node);
  if (parens) os << ')';
}

}  // namespace detail

inline void print(std::ostream& os, const BoolExpr& b) { detail::print_bool(os, b, 1); }

inline void print(std::ostream& os, const CondExpr& e) {
  if (const auto* l = std::get_if<Leaf>(&e.node)) {
    print(os, l->expr);
    return;
  }
  const auto& i = std::get<If>(e.node);
  os << "if ";
  print(os, i.cond);
  os << " then ";
  print(os, *i.then_branch);
  os << " else ";
  print(os, *i.else_branch);
}

inline void print(std::ostream& os, const FunDef& d) {
  os << d.sig.name << '(';
  for (std::size_t i = 0; i < d.sig.params.size(); ++i) {
    if (i) os << ", ";
    os << d.sig.params[i];
  }
  os << ") = ";
  print(os, d.body);
}

inline void print(std::ostream& os, const Program& p) {
  for (const FunDef& d : p.defs) {
    print(os, d);
    os << '\n';
  }
}

template <class Node>
std::string to_source(const Node& n) {
  std::ostringstream os;
  print(os, n);
  return os.str();
}

}  // namespace sct
