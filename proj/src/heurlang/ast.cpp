#include "millkit/heurlang/ast.hpp"

#include <array>
#include <sstream>

namespace millkit::heurlang {

std::string Diagnostic::format() const {
  std::ostringstream out;
  out << origin << ":" << loc.line << ":" << loc.col << ": error: " << message;
  return out.str();
}

bool is_comparison(BinaryOp op) {
  switch (op) {
    case BinaryOp::Lt: case BinaryOp::Le: case BinaryOp::Gt:
    case BinaryOp::Ge: case BinaryOp::Eq: case BinaryOp::Ne:
      return true;
    default:
      return false;
  }
}

bool is_bool_op(BinaryOp op) { return op == BinaryOp::And || op == BinaryOp::Or; }

std::string_view op_symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::FloorDiv: return "//";
    case BinaryOp::Pow: return "**";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Le: return "<=";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Ge: return ">=";
    case BinaryOp::Eq: return "==";
    case BinaryOp::Ne: return "!=";
    case BinaryOp::And: return "and";
    case BinaryOp::Or: return "or";
  }
  return "?";
}

namespace {

constexpr std::array<BuiltinInfo, 10> kBuiltins = {{
    {"clip", 3, 3},
    {"min", 2, -1},
    {"max", 2, -1},
    {"abs", 1, 1},
    {"int_trunc", 1, 1},
    {"round_half_even", 1, 1},
    {"floor", 1, 1},
    {"ceil", 1, 1},
    {"exp", 1, 1},
    {"ln", 1, 1},
}};

}  // namespace

const BuiltinInfo* builtin_info(std::string_view name) {
  for (const auto& b : kBuiltins) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

ExprPtr clone_expr(const Expr& e) {
  auto out = std::make_unique<Expr>();
  out->loc = e.loc;
  out->type = e.type;
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, NumberLit> || std::is_same_v<T, BoolLit> ||
                      std::is_same_v<T, Ident>) {
          out->node = node;
        } else if constexpr (std::is_same_v<T, Unary>) {
          out->node = Unary{node.op, clone_expr(*node.operand)};
        } else if constexpr (std::is_same_v<T, Binary>) {
          out->node = Binary{node.op, clone_expr(*node.lhs), clone_expr(*node.rhs)};
        } else if constexpr (std::is_same_v<T, Call>) {
          Call c;
          c.callee = node.callee;
          for (const auto& a : node.args) c.args.push_back(clone_expr(*a));
          out->node = std::move(c);
        } else if constexpr (std::is_same_v<T, CondExpr>) {
          out->node = CondExpr{clone_expr(*node.cond), clone_expr(*node.then_value),
                               clone_expr(*node.else_value)};
        }
      },
      e.node);
  return out;
}

StmtPtr clone_stmt(const Stmt& s) {
  auto out = std::make_unique<Stmt>();
  out->loc = s.loc;
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, LetStmt>) {
          out->node = LetStmt{node.name, clone_expr(*node.value), node.slot};
        } else if constexpr (std::is_same_v<T, IfStmt>) {
          out->node = IfStmt{clone_expr(*node.cond), clone_body(node.then_body),
                             clone_body(node.else_body)};
        } else if constexpr (std::is_same_v<T, ReturnStmt>) {
          out->node = ReturnStmt{clone_expr(*node.hr), clone_expr(*node.interpass),
                                 clone_expr(*node.velocity)};
        }
      },
      s.node);
  return out;
}

std::vector<StmtPtr> clone_body(const std::vector<StmtPtr>& body) {
  std::vector<StmtPtr> out;
  out.reserve(body.size());
  for (const auto& s : body) out.push_back(clone_stmt(*s));
  return out;
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* n = std::get_if<NumberLit>(&a.node)) {
    const auto& m = std::get<NumberLit>(b.node);
    return n->value == m.value && n->is_integer == m.is_integer;
  }
  if (const auto* n = std::get_if<BoolLit>(&a.node)) {
    return n->value == std::get<BoolLit>(b.node).value;
  }
  if (const auto* n = std::get_if<Ident>(&a.node)) {
    return n->name == std::get<Ident>(b.node).name;
  }
  if (const auto* n = std::get_if<Unary>(&a.node)) {
    const auto& m = std::get<Unary>(b.node);
    return n->op == m.op && structurally_equal(*n->operand, *m.operand);
  }
  if (const auto* n = std::get_if<Binary>(&a.node)) {
    const auto& m = std::get<Binary>(b.node);
    return n->op == m.op && structurally_equal(*n->lhs, *m.lhs) &&
           structurally_equal(*n->rhs, *m.rhs);
  }
  if (const auto* n = std::get_if<Call>(&a.node)) {
    const auto& m = std::get<Call>(b.node);
    if (n->callee != m.callee || n->args.size() != m.args.size()) return false;
    for (std::size_t i = 0; i < n->args.size(); ++i) {
      if (!structurally_equal(*n->args[i], *m.args[i])) return false;
    }
    return true;
  }
  if (const auto* n = std::get_if<CondExpr>(&a.node)) {
    const auto& m = std::get<CondExpr>(b.node);
    return structurally_equal(*n->cond, *m.cond) &&
           structurally_equal(*n->then_value, *m.then_value) &&
           structurally_equal(*n->else_value, *m.else_value);
  }
  return false;
}

namespace {

bool stmt_equal(const Stmt& a, const Stmt& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* n = std::get_if<LetStmt>(&a.node)) {
    const auto& m = std::get<LetStmt>(b.node);
    return n->name == m.name && structurally_equal(*n->value, *m.value);
  }
  if (const auto* n = std::get_if<IfStmt>(&a.node)) {
    const auto& m = std::get<IfStmt>(b.node);
    return structurally_equal(*n->cond, *m.cond) &&
           structurally_equal(n->then_body, m.then_body) &&
           structurally_equal(n->else_body, m.else_body);
  }
  const auto& n = std::get<ReturnStmt>(a.node);
  const auto& m = std::get<ReturnStmt>(b.node);
  return structurally_equal(*n.hr, *m.hr) && structurally_equal(*n.interpass, *m.interpass) &&
         structurally_equal(*n.velocity, *m.velocity);
}

}  // namespace

bool structurally_equal(const std::vector<StmtPtr>& a, const std::vector<StmtPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!stmt_equal(*a[i], *b[i])) return false;
  }
  return true;
}

bool structurally_equal(const HeuristicProgram& a, const HeuristicProgram& b) {
  return structurally_equal(a.body, b.body);
}

}  // namespace millkit::heurlang
