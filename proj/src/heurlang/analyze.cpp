#include "millkit/heurlang/analyze.hpp"

#include <map>

namespace millkit::heurlang {

std::set<std::string> free_inputs(const HeuristicProgram& p) {
  return p.referenced_inputs;
}

namespace {

using DepSet = std::set<std::string>;

void expr_deps(const Expr& e, const std::map<int, DepSet>& env, DepSet& out) {
  if (const auto* id = std::get_if<Ident>(&e.node)) {
    switch (id->kind) {
      case IdentKind::Input:
      case IdentKind::MaskIdx:
      case IdentKind::MaskFlag:
        out.insert(id->name);
        return;
      case IdentKind::Binding: {
        auto it = env.find(id->index);
        if (it != env.end()) out.insert(it->second.begin(), it->second.end());
        return;
      }
      case IdentKind::Unresolved:
        return;
    }
  }
  if (const auto* u = std::get_if<Unary>(&e.node)) {
    expr_deps(*u->operand, env, out);
  } else if (const auto* b = std::get_if<Binary>(&e.node)) {
    expr_deps(*b->lhs, env, out);
    expr_deps(*b->rhs, env, out);
  } else if (const auto* c = std::get_if<Call>(&e.node)) {
    for (const auto& a : c->args) expr_deps(*a, env, out);
  } else if (const auto* cond = std::get_if<CondExpr>(&e.node)) {
    expr_deps(*cond->cond, env, out);
    expr_deps(*cond->then_value, env, out);
    expr_deps(*cond->else_value, env, out);
  }
}

// Taint-style walk: a binding carries the deps of its value plus the guards
// it was assigned under; a return site adds the guards active at the site.
// Branch environments merge by union, sound for any path.
struct DepWalker {
  OutputDeps outputs;

  void walk(const std::vector<StmtPtr>& body, std::map<int, DepSet>& env,
            const DepSet& guards) {
    for (const auto& sp : body) {
      if (const auto* let = std::get_if<LetStmt>(&sp->node)) {
        DepSet d = guards;
        expr_deps(*let->value, env, d);
        env[let->slot] = std::move(d);
      } else if (const auto* ifs = std::get_if<IfStmt>(&sp->node)) {
        DepSet cond_deps = guards;
        expr_deps(*ifs->cond, env, cond_deps);
        std::map<int, DepSet> then_env = env;
        std::map<int, DepSet> else_env = env;
        walk(ifs->then_body, then_env, cond_deps);
        walk(ifs->else_body, else_env, cond_deps);
        for (auto& [slot, deps] : then_env) {
          env[slot].insert(deps.begin(), deps.end());
        }
        for (auto& [slot, deps] : else_env) {
          env[slot].insert(deps.begin(), deps.end());
        }
      } else {
        const auto& ret = std::get<ReturnStmt>(sp->node);
        DepSet hr = guards, ip = guards, vel = guards;
        expr_deps(*ret.hr, env, hr);
        expr_deps(*ret.interpass, env, ip);
        expr_deps(*ret.velocity, env, vel);
        outputs.hr.insert(hr.begin(), hr.end());
        outputs.interpass.insert(ip.begin(), ip.end());
        outputs.velocity.insert(vel.begin(), vel.end());
      }
    }
  }
};

}  // namespace

OutputDeps output_dependencies(const HeuristicProgram& p) {
  DepWalker w;
  w.walk(p.body, {}, {});
  return w.outputs;
}

namespace {

void collect_literals(Expr& e, std::vector<NumberLit*>& out) {
  if (auto* n = std::get_if<NumberLit>(&e.node)) {
    out.push_back(n);
    return;
  }
  if (auto* u = std::get_if<Unary>(&e.node)) {
    collect_literals(*u->operand, out);
  } else if (auto* b = std::get_if<Binary>(&e.node)) {
    collect_literals(*b->lhs, out);
    collect_literals(*b->rhs, out);
  } else if (auto* c = std::get_if<Call>(&e.node)) {
    for (auto& a : c->args) collect_literals(*a, out);
  } else if (auto* cond = std::get_if<CondExpr>(&e.node)) {
    collect_literals(*cond->cond, out);
    collect_literals(*cond->then_value, out);
    collect_literals(*cond->else_value, out);
  }
}

void collect_literals(std::vector<StmtPtr>& body, std::vector<NumberLit*>& out) {
  for (auto& sp : body) {
    if (auto* let = std::get_if<LetStmt>(&sp->node)) {
      collect_literals(*let->value, out);
    } else if (auto* ifs = std::get_if<IfStmt>(&sp->node)) {
      collect_literals(*ifs->cond, out);
      collect_literals(ifs->then_body, out);
      collect_literals(ifs->else_body, out);
    } else {
      auto& ret = std::get<ReturnStmt>(sp->node);
      collect_literals(*ret.hr, out);
      collect_literals(*ret.interpass, out);
      collect_literals(*ret.velocity, out);
    }
  }
}

void collect_faults(const Expr& e, std::vector<FaultSite>& out) {
  if (const auto* u = std::get_if<Unary>(&e.node)) {
    collect_faults(*u->operand, out);
  } else if (const auto* b = std::get_if<Binary>(&e.node)) {
    if (b->op == BinaryOp::Div) out.push_back({FaultSite::Kind::Division, e.loc});
    if (b->op == BinaryOp::FloorDiv) out.push_back({FaultSite::Kind::FloorDivision, e.loc});
    if (b->op == BinaryOp::Pow) out.push_back({FaultSite::Kind::Pow, e.loc});
    collect_faults(*b->lhs, out);
    collect_faults(*b->rhs, out);
  } else if (const auto* c = std::get_if<Call>(&e.node)) {
    if (c->callee == "ln") out.push_back({FaultSite::Kind::Ln, e.loc});
    for (const auto& a : c->args) collect_faults(*a, out);
  } else if (const auto* cond = std::get_if<CondExpr>(&e.node)) {
    collect_faults(*cond->cond, out);
    collect_faults(*cond->then_value, out);
    collect_faults(*cond->else_value, out);
  }
}

void collect_faults(const std::vector<StmtPtr>& body, std::vector<FaultSite>& out) {
  for (const auto& sp : body) {
    if (const auto* let = std::get_if<LetStmt>(&sp->node)) {
      collect_faults(*let->value, out);
    } else if (const auto* ifs = std::get_if<IfStmt>(&sp->node)) {
      collect_faults(*ifs->cond, out);
      collect_faults(ifs->then_body, out);
      collect_faults(ifs->else_body, out);
    } else {
      const auto& ret = std::get<ReturnStmt>(sp->node);
      collect_faults(*ret.hr, out);
      collect_faults(*ret.interpass, out);
      collect_faults(*ret.velocity, out);
    }
  }
}

}  // namespace

std::vector<NumberLit*> literal_sites(std::vector<StmtPtr>& body) {
  std::vector<NumberLit*> out;
  collect_literals(body, out);
  return out;
}

std::vector<FaultSite> fault_sites(const HeuristicProgram& p) {
  std::vector<FaultSite> out;
  collect_faults(p.body, out);
  return out;
}

}  // namespace millkit::heurlang
