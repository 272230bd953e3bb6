#include "millkit/heurlang/eval.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "millkit/core/ranges.hpp"

namespace millkit::heurlang {

namespace {

struct Value {
  double num = 0.0;
  bool truth = false;
};

struct Fault {
  RuntimeFault fault;
};

struct Ctx {
  const ProcessState* state;
  const ActionMask* mask;
  std::vector<Value> slots;
};

double check_finite(double v, const char* what, SourceLoc loc) {
  if (!std::isfinite(v)) {
    throw Fault{RuntimeFault{std::string(what) + " produced a non-finite value", loc}};
  }
  return v;
}

Value eval_expr(const Expr& e, Ctx& ctx);

double eval_num(const Expr& e, Ctx& ctx) { return eval_expr(e, ctx).num; }

double eval_call(const Call& call, const Expr& e, Ctx& ctx) {
  std::vector<double> args;
  args.reserve(call.args.size());
  for (const auto& a : call.args) args.push_back(eval_num(*a, ctx));
  const std::string& f = call.callee;
  if (f == "clip") {
    double lo = args[1], hi = args[2];
    return std::min(std::max(args[0], lo), hi);
  }
  if (f == "min") return *std::min_element(args.begin(), args.end());
  if (f == "max") return *std::max_element(args.begin(), args.end());
  if (f == "abs") return std::fabs(args[0]);
  if (f == "int_trunc") return std::trunc(args[0]);
  if (f == "round_half_even") {
    // FE_TONEAREST is the default mode, which ties to even.
    return std::nearbyint(args[0]);
  }
  if (f == "floor") return std::floor(args[0]);
  if (f == "ceil") return std::ceil(args[0]);
  if (f == "exp") return check_finite(std::exp(args[0]), "exp", e.loc);
  if (f == "ln") {
    if (args[0] <= 0.0) {
      throw Fault{RuntimeFault{"ln of non-positive value", e.loc}};
    }
    return std::log(args[0]);
  }
  throw Fault{RuntimeFault{"unknown builtin '" + f + "'", e.loc}};
}

Value eval_expr(const Expr& e, Ctx& ctx) {
  if (const auto* n = std::get_if<NumberLit>(&e.node)) return Value{n->value, false};
  if (const auto* b = std::get_if<BoolLit>(&e.node)) return Value{0.0, b->value};
  if (const auto* id = std::get_if<Ident>(&e.node)) {
    switch (id->kind) {
      case IdentKind::Input:
        return Value{ctx.state->field(id->index), false};
      case IdentKind::MaskIdx:
        return Value{static_cast<double>(ctx.mask->max_valid_hr_idx), false};
      case IdentKind::MaskFlag:
        return Value{0.0, id->index == 0 ? ctx.mask->interpass_valid_from <= 0
                                         : ctx.mask->velocity_valid_from <= 0};
      case IdentKind::Binding:
        return ctx.slots[id->index];
      case IdentKind::Unresolved:
        break;
    }
    throw Fault{RuntimeFault{"unresolved identifier '" + id->name + "'", e.loc}};
  }
  if (const auto* un = std::get_if<Unary>(&e.node)) {
    Value v = eval_expr(*un->operand, ctx);
    if (un->op == UnaryOp::Neg) return Value{-v.num, false};
    return Value{0.0, !v.truth};
  }
  if (const auto* bin = std::get_if<Binary>(&e.node)) {
    if (bin->op == BinaryOp::And) {
      Value l = eval_expr(*bin->lhs, ctx);
      if (!l.truth) return Value{0.0, false};
      return Value{0.0, eval_expr(*bin->rhs, ctx).truth};
    }
    if (bin->op == BinaryOp::Or) {
      Value l = eval_expr(*bin->lhs, ctx);
      if (l.truth) return Value{0.0, true};
      return Value{0.0, eval_expr(*bin->rhs, ctx).truth};
    }
    if (bin->op == BinaryOp::Eq || bin->op == BinaryOp::Ne) {
      // Operands are statically of the same type.
      Value l = eval_expr(*bin->lhs, ctx);
      Value r = eval_expr(*bin->rhs, ctx);
      bool eq = bin->lhs->type == ValueType::Bool ? l.truth == r.truth : l.num == r.num;
      return Value{0.0, bin->op == BinaryOp::Eq ? eq : !eq};
    }
    double l = eval_num(*bin->lhs, ctx);
    double r = eval_num(*bin->rhs, ctx);
    switch (bin->op) {
      case BinaryOp::Lt: return Value{0.0, l < r};
      case BinaryOp::Le: return Value{0.0, l <= r};
      case BinaryOp::Gt: return Value{0.0, l > r};
      case BinaryOp::Ge: return Value{0.0, l >= r};
      case BinaryOp::Add: return Value{check_finite(l + r, "addition", e.loc), false};
      case BinaryOp::Sub: return Value{check_finite(l - r, "subtraction", e.loc), false};
      case BinaryOp::Mul: return Value{check_finite(l * r, "multiplication", e.loc), false};
      case BinaryOp::Div:
        if (r == 0.0) throw Fault{RuntimeFault{"division by zero", e.loc}};
        return Value{check_finite(l / r, "division", e.loc), false};
      case BinaryOp::FloorDiv:
        if (r == 0.0) throw Fault{RuntimeFault{"floor-division by zero", e.loc}};
        return Value{check_finite(std::floor(l / r), "floor-division", e.loc), false};
      case BinaryOp::Pow: {
        double v = std::pow(l, r);
        if (std::isnan(v)) {
          throw Fault{RuntimeFault{"power with negative base and fractional exponent",
                                   e.loc}};
        }
        return Value{check_finite(v, "power", e.loc), false};
      }
      default:
        break;
    }
    throw Fault{RuntimeFault{"bad binary operator", e.loc}};
  }
  if (const auto* call = std::get_if<Call>(&e.node)) {
    return Value{eval_call(*call, e, ctx), false};
  }
  const auto& c = std::get<CondExpr>(e.node);
  return eval_expr(*c.cond, ctx).truth ? eval_expr(*c.then_value, ctx)
                                       : eval_expr(*c.else_value, ctx);
}

// Runs a statement list; returns true and fills `out` when a return executed.
bool exec_list(const std::vector<StmtPtr>& body, Ctx& ctx, std::array<double, 3>& out) {
  for (const auto& sp : body) {
    const Stmt& s = *sp;
    if (const auto* let = std::get_if<LetStmt>(&s.node)) {
      Value v = eval_expr(*let->value, ctx);
      ctx.slots[let->slot] = v;
    } else if (const auto* ifs = std::get_if<IfStmt>(&s.node)) {
      const auto& branch = eval_expr(*ifs->cond, ctx).truth ? ifs->then_body
                                                            : ifs->else_body;
      if (exec_list(branch, ctx, out)) return true;
    } else {
      const auto& ret = std::get<ReturnStmt>(s.node);
      out[0] = eval_num(*ret.hr, ctx);
      out[1] = eval_num(*ret.interpass, ctx);
      out[2] = eval_num(*ret.velocity, ctx);
      return true;
    }
  }
  return false;
}

Value eval_expr(const ExprPtr& e, Ctx& ctx) = delete;

}  // namespace

int coerce_index(double raw, int max_idx) {
  double clipped = std::min(std::max(raw, 0.0), static_cast<double>(max_idx));
  return static_cast<int>(std::trunc(clipped));
}

EvalOutcome evaluate(const HeuristicProgram& p, const ProcessState& state,
                     const ActionMask& mask) {
  Ctx ctx{&state, &mask, std::vector<Value>(static_cast<std::size_t>(p.slot_count))};
  std::array<double, 3> raw{};
  try {
    if (!exec_list(p.body, ctx, raw)) {
      // Unreachable: the resolver guarantees a return on every path.
      return RuntimeFault{"program fell through without returning", SourceLoc{0, 0}};
    }
  } catch (const Fault& f) {
    return f.fault;
  }
  return ActionTriple{coerce_index(raw[0], kMaxHrIdx),
                      coerce_index(raw[1], kMaxInterpassIdx),
                      coerce_index(raw[2], kMaxVelocityIdx)};
}

}  // namespace millkit::heurlang
