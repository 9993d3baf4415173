#pragma once

// Fueled, call-by-value operational semantics over the naturals.
//
// Evaluation runs on an explicit task stack, so deep recursion in the
// evaluated program never deepens the C++ stack. Fuel is charged once per
// function entry, including the initial call.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "sct/ast.hpp"
#include "sct/errors.hpp"

namespace sct {

struct State {
  std::size_t fun = 0;  // index into Program::defs
  std::vector<Nat> values;

  friend bool operator==(const State&, const State&) = default;
};

/// (f, u) →τ (g, v): `to.values` are the evaluated arguments of call site τ
/// in the body of f under u.
struct Transition {
  State from;
  CallSiteId site = 0;
  State to;

  friend bool operator==(const Transition&, const Transition&) = default;
};

struct Fuel {
  std::uint64_t budget = 0;
};

/// Result of one evaluation. `value` is empty when fuel ran out or an
/// observer stopped the run.
struct RunResult {
  std::optional<Nat> value;
  bool out_of_fuel = false;
  bool stopped = false;
  std::uint64_t calls = 0;
  /// Calls whose arguments were still being evaluated when the run ended.
  std::size_t pending_calls = 0;
};

/// Called on every transition; return false to stop evaluation.
using TransitionObserver = std::function<bool(const Transition&)>;

namespace detail {

inline Nat checked_add(Nat a, Nat b) {
  if (a > std::numeric_limits<Nat>::max() - b) throw DomainError("arithmetic overflow");
  return a + b;
}

inline Nat checked_mul(Nat a, Nat b) {
  if (a != 0 && b > std::numeric_limits<Nat>::max() / a) throw DomainError("arithmetic overflow");
  return a * b;
}

inline bool eval_bool(const BoolExpr& b, std::span<const Nat> env) {
  return std::visit(
      [&](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, EqConst>) return env[n.param.index] == n.value;
        else if constexpr (std::is_same_v<T, Lt>) return env[n.lhs.index] < env[n.rhs.index];
        else if constexpr (std::is_same_v<T, Le>) return env[n.lhs.index] <= env[n.rhs.index];
        else if constexpr (std::is_same_v<T, Not>) return !eval_bool(*n.operand, env);
        else {
          // Both operands are evaluated; atoms have no effects.
          const bool l = eval_bool(*n.lhs, env);
          const bool r = eval_bool(*n.rhs, env);
          if constexpr (std::is_same_v<T, And>) return l && r;
          else return l || r;
        }
      },
      b.node);
}

struct Return {};
using Task = std::variant<const Expr*, const CondExpr*, const PrimOp*, const Call*, Return>;

class Machine {
 public:
  Machine(const Program& p, std::uint64_t fuel, const TransitionObserver& observe)
      : p_(p), fuel_(fuel), observe_(observe) {}

  RunResult run(std::size_t fun, std::vector<Nat> args) {
    RunResult r;
    if (!enter(fun, std::move(args), r)) return finish(r);
    while (!tasks_.empty()) {
      Task t = tasks_.back();
      tasks_.pop_back();
      if (!step(t, r)) return finish(r);
    }
    r.value = values_.back();
    return r;
  }

 private:
  RunResult& finish(RunResult& r) {
    for (const Task& t : tasks_)
      if (std::holds_alternative<const Call*>(t)) ++r.pending_calls;
    return r;
  }

  bool enter(std::size_t fun, std::vector<Nat> args, RunResult& r) {
    if (fuel_ == 0) {
      r.out_of_fuel = true;
      return false;
    }
    --fuel_;
    ++r.calls;
    frames_.push_back(State{fun, std::move(args)});
    tasks_.emplace_back(Return{});
    tasks_.emplace_back(&p_.defs[fun].body);
    return true;
  }

  void push_args(const std::vector<Expr>& args) {
    for (auto it = args.rbegin(); it != args.rend(); ++it) tasks_.emplace_back(&*it);
  }

  bool step(const Task& t, RunResult& r) {
    if (const auto* c = std::get_if<const CondExpr*>(&t)) {
      if (const auto* l = std::get_if<Leaf>(&(*c)->node)) {
        tasks_.emplace_back(&l->expr);
      } else {
        const auto& i = std::get<If>((*c)->node);
        const bool taken = eval_bool(i.cond, frames_.back().values);
        tasks_.emplace_back(taken ? &*i.then_branch : &*i.else_branch);
      }
      return true;
    }
    if (const auto* e = std::get_if<const Expr*>(&t)) {
      expr(**e);
      return true;
    }
    if (const auto* o = std::get_if<const PrimOp*>(&t)) {
      const Nat b = values_.back();
      values_.pop_back();
      const Nat a = values_.back();
      switch ((*o)->op) {
        case PrimOpKind::plus: values_.back() = checked_add(a, b); break;
        case PrimOpKind::times: values_.back() = checked_mul(a, b); break;
        case PrimOpKind::max: values_.back() = std::max(a, b); break;
        case PrimOpKind::min: values_.back() = std::min(a, b); break;
      }
      return true;
    }
    if (const auto* c = std::get_if<const Call*>(&t)) {
      const std::size_t n = (*c)->args.size();
      std::vector<Nat> args(values_.end() - static_cast<std::ptrdiff_t>(n), values_.end());
      values_.resize(values_.size() - n);
      Transition tr{frames_.back(), (*c)->site, State{(*c)->callee_index, args}};
      if (observe_ && !observe_(tr)) {
        r.stopped = true;
        return false;
      }
      return enter((*c)->callee_index, std::move(args), r);
    }
    frames_.pop_back();  // Return
    return true;
  }

  void expr(const Expr& e) {
    const auto& env = frames_.back().values;
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Var>) values_.push_back(env[n.param.index]);
          else if constexpr (std::is_same_v<T, Succ>) values_.push_back(checked_add(env[n.param.index], 1));
          else if constexpr (std::is_same_v<T, Pred>) {
            const Nat v = env[n.param.index];
            values_.push_back(v == 0 ? 0 : v - 1);
          } else if constexpr (std::is_same_v<T, Const>) values_.push_back(n.value);
          else {
            tasks_.emplace_back(&n);
            push_args(n.args);
          }
        },
        e.node);
  }

  const Program& p_;
  std::uint64_t fuel_;
  const TransitionObserver& observe_;
  std::vector<Task> tasks_;
  std::vector<Nat> values_;
  std::vector<State> frames_;
};

}  // namespace detail

/// Evaluates `fun` on `args`, reporting every call transition to `observe`.
inline RunResult run(const Program& p, std::size_t fun, std::vector<Nat> args, Fuel fuel,
                     const TransitionObserver& observe = {}) {
  if (fun >= p.defs.size()) throw DomainError("function index out of range");
  if (args.size() != p.defs[fun].sig.arity())
    throw DomainError("'" + p.defs[fun].sig.name + "' expects " +
                      std::to_string(p.defs[fun].sig.arity()) + " argument(s), got " +
                      std::to_string(args.size()));
  return detail::Machine(p, fuel.budget, observe).run(fun, std::move(args));
}

/// f(args), or nullopt when the fuel runs out.
inline std::optional<Nat> eval(const Program& p, std::string_view fun, std::vector<Nat> args,
                               Fuel fuel) {
  auto idx = p.find(fun);
  if (!idx) throw DomainError("unknown function '" + std::string(fun) + "'");
  return run(p, *idx, std::move(args), fuel).value;
}

/// Call transitions in the order the calls are entered, truncated at
/// `max_len` transitions or when the fuel runs out.
inline std::vector<Transition> trace_transitions(const Program& p, const State& s, Fuel fuel,
                                                 std::size_t max_len) {
  std::vector<Transition> out;
  if (max_len == 0) return out;
  run(p, s.fun, s.values, fuel, [&](const Transition& t) {
    out.push_back(t);
    return out.size() < max_len;
  });
  return out;
}

}  // namespace sct
