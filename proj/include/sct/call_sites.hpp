#pragma once

#include <cstddef>
#include <vector>

#include "sct/ast.hpp"

namespace sct {

/// A branch condition on the path from a body's root, with the branch taken.
struct GuardFact {
  BoolExpr cond;
  bool positive = true;

  friend bool operator==(const GuardFact&, const GuardFact&) = default;
};

/// The branch conditions enclosing a call, outermost first.
struct GuardContext {
  std::vector<GuardFact> facts;
};

struct CallSite {
  CallSiteId id = 0;
  std::size_t caller = 0;  // index into Program::defs
  std::size_t callee = 0;
  FunSig caller_sig;
  FunSig callee_sig;
  std::vector<Expr> args;
  GuardContext guard;
};

namespace detail {

class SiteCollector {
 public:
  SiteCollector(const Program& p, std::vector<CallSite>& out) : p_(p), out_(out) {}

  void def(std::size_t index) {
    caller_ = index;
    GuardContext ctx;
    visit(p_.defs[index].body, ctx);
  }

 private:
  void visit(const CondExpr& e, GuardContext& ctx) {
    if (const auto* l = std::get_if<Leaf>(&e.node)) {
      visit(l->expr, ctx);
      return;
    }
    const auto& i = std::get<If>(e.node);
    ctx.facts.push_back({i.cond, true});
    visit(*i.then_branch, ctx);
    ctx.facts.back().positive = false;
    visit(*i.else_branch, ctx);
    ctx.facts.pop_back();
  }

  void visit(const Expr& e, const GuardContext& ctx) {
    if (const auto* c = std::get_if<Call>(&e.node)) {
      out_.push_back(CallSite{c->site, caller_, c->callee_index, p_.defs[caller_].sig,
                              p_.defs[c->callee_index].sig, c->args, ctx});
      for (const Expr& a : c->args) visit(a, ctx);
    } else if (const auto* o = std::get_if<PrimOp>(&e.node)) {
      for (const Expr& a : o->args) visit(a, ctx);
    }
  }

  const Program& p_;
  std::vector<CallSite>& out_;
  std::size_t caller_ = 0;
};

// Does the fact (b, positive) entail param > 0?
inline bool entails_positive(const BoolExpr& b, bool positive, std::size_t param) {
  if (const auto* n = std::get_if<Not>(&b.node)) return entails_positive(*n->operand, !positive, param);
  if (const auto* a = std::get_if<And>(&b.node))
    return positive && (entails_positive(*a->lhs, true, param) || entails_positive(*a->rhs, true, param));
  if (const auto* o = std::get_if<Or>(&b.node))
    return !positive && (entails_positive(*o->lhs, false, param) || entails_positive(*o->rhs, false, param));
  if (const auto* e = std::get_if<EqConst>(&b.node)) {
    if (e->param.index != param) return false;
    // ¬(x=0) ⊢ x>0;  x=c with c ≥ 1 ⊢ x>0.
    return positive ? e->value >= 1 : e->value == 0;
  }
  if (const auto* lt = std::get_if<Lt>(&b.node)) return positive && lt->rhs.index == param;
  return false;
}

}  // namespace detail

/// Every call occurrence in document order (ids 0, 1, ...). Calls nested in
/// arguments share the guard context of the enclosing call.
inline std::vector<CallSite> enumerate_call_sites(const Program& p) {
  std::vector<CallSite> out;
  detail::SiteCollector collector(p, out);
  for (std::size_t i = 0; i < p.defs.size(); ++i) collector.def(i);
  return out;
}

/// Sound, deliberately incomplete entailment of param > 0 from the guard.
/// Rules: ¬(x=0), x=c for c ≥ 1, and y<x each give x > 0. Negations are
/// pushed through, and conjunctions (disjunctions, when negated) are split.
inline bool implies_positive(const GuardContext& ctx, std::size_t param) {
  for (const GuardFact& f : ctx.facts)
    if (detail::entails_positive(f.cond, f.positive, param)) return true;
  return false;
}

}  // namespace sct
