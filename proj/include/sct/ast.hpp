#pragma once

// AST of the first-order language over the naturals.
//
//   aexp ::= x | x+1 | x-1 | n | o(aexp, ...) | f(aexp, ...)
//   bexp ::= x=n | x<y | x<=y | bexp && bexp | bexp || bexp | !bexp
//   eexp ::= aexp | if bexp then eexp else eexp
//   def  ::= f(x, ...) = eexp
//
// `x=n` for n >= 2 and the literal `n` are extensions of the core grammar
// (x=0 and x=1 only, no constants): dispatch on x = k-1 and constant call
// arguments such as A(x-1, 1) need them.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sct/errors.hpp"
#include "sct/graph.hpp"

namespace sct {

using Nat = std::uint64_t;
using CallSiteId = std::size_t;

inline constexpr std::size_t unresolved = static_cast<std::size_t>(-1);

/// Owning, copyable, non-null pointer with value semantics.
template <class T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;

  const T& operator*() const { return *ptr_; }
  T& operator*() { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }
  T* operator->() { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) { return *a == *b; }

 private:
  std::unique_ptr<T> ptr_;
};

/// A parameter occurrence; `index` is filled in by validation.
struct ParamRef {
  std::string name;
  std::size_t index = unresolved;
  SourceLoc loc;

  friend bool operator==(const ParamRef&, const ParamRef&) = default;
};

enum class PrimOpKind { plus, times, max, min };

inline const char* to_string(PrimOpKind op) {
  switch (op) {
    case PrimOpKind::plus: return "plus";
    case PrimOpKind::times: return "times";
    case PrimOpKind::max: return "max";
    case PrimOpKind::min: return "min";
  }
  return "?";
}

inline std::optional<PrimOpKind> prim_op_from_name(std::string_view name) {
  if (name == "plus") return PrimOpKind::plus;
  if (name == "times") return PrimOpKind::times;
  if (name == "max") return PrimOpKind::max;
  if (name == "min") return PrimOpKind::min;
  return std::nullopt;
}

struct Expr;

struct Var {
  ParamRef param;
  friend bool operator==(const Var&, const Var&) = default;
};
struct Succ {
  ParamRef param;
  friend bool operator==(const Succ&, const Succ&) = default;
};
/// x-1 with monus semantics (0-1 = 0).
struct Pred {
  ParamRef param;
  friend bool operator==(const Pred&, const Pred&) = default;
};
struct Const {
  Nat value = 0;
  friend bool operator==(const Const&, const Const&) = default;
};
struct PrimOp {
  PrimOpKind op = PrimOpKind::plus;
  std::vector<Expr> args;
  friend bool operator==(const PrimOp&, const PrimOp&) = default;
};
struct Call {
  std::string callee;
  std::vector<Expr> args;
  CallSiteId site = unresolved;
  std::size_t callee_index = unresolved;
  SourceLoc loc;
  friend bool operator==(const Call&, const Call&) = default;
};

struct Expr {
  std::variant<Var, Succ, Pred, Const, PrimOp, Call> node;
  friend bool operator==(const Expr&, const Expr&) = default;
};

struct BoolExpr;

/// x = n (x=0, x=1, and the x=n extension).
struct EqConst {
  ParamRef param;
  Nat value = 0;
  friend bool operator==(const EqConst&, const EqConst&) = default;
};
struct Lt {
  ParamRef lhs, rhs;
  friend bool operator==(const Lt&, const Lt&) = default;
};
struct Le {
  ParamRef lhs, rhs;
  friend bool operator==(const Le&, const Le&) = default;
};
struct And {
  Box<BoolExpr> lhs, rhs;
  friend bool operator==(const And&, const And&) = default;
};
struct Or {
  Box<BoolExpr> lhs, rhs;
  friend bool operator==(const Or&, const Or&) = default;
};
struct Not {
  Box<BoolExpr> operand;
  friend bool operator==(const Not&, const Not&) = default;
};

struct BoolExpr {
  std::variant<EqConst, Lt, Le, And, Or, Not> node;
  friend bool operator==(const BoolExpr&, const BoolExpr&) = default;
};

struct CondExpr;

struct Leaf {
  Expr expr;
  friend bool operator==(const Leaf&, const Leaf&) = default;
};
struct If {
  BoolExpr cond;
  Box<CondExpr> then_branch, else_branch;
  friend bool operator==(const If&, const If&) = default;
};

struct CondExpr {
  std::variant<Leaf, If> node;
  friend bool operator==(const CondExpr&, const CondExpr&) = default;
};

struct FunDef {
  FunSig sig;
  CondExpr body;
  SourceLoc loc;
  friend bool operator==(const FunDef&, const FunDef&) = default;
};

struct Program {
  std::vector<FunDef> defs;
  std::size_t initial = 0;
  std::size_t call_site_count = 0;

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < defs.size(); ++i)
      if (defs[i].sig.name == name) return i;
    return std::nullopt;
  }

  friend bool operator==(const Program&, const Program&) = default;
};

// Convenience constructors, used by the synthesizer and tests.
inline Expr var(std::string name) { return Expr{Var{ParamRef{std::move(name), unresolved, {}}}}; }
inline Expr succ(std::string name) { return Expr{Succ{ParamRef{std::move(name), unresolved, {}}}}; }
inline Expr pred(std::string name) { return Expr{Pred{ParamRef{std::move(name), unresolved, {}}}}; }
inline Expr constant(Nat n) { return Expr{Const{n}}; }
inline Expr call(std::string callee, std::vector<Expr> args) {
  return Expr{Call{std::move(callee), std::move(args), unresolved, unresolved, {}}};
}
inline BoolExpr eq(std::string name, Nat n) { return BoolExpr{EqConst{ParamRef{std::move(name), unresolved, {}}, n}}; }
inline CondExpr leaf(Expr e) { return CondExpr{Leaf{std::move(e)}}; }
inline CondExpr if_then_else(BoolExpr b, CondExpr t, CondExpr e) {
  return CondExpr{If{std::move(b), std::move(t), std::move(e)}};
}

}  // namespace sct
