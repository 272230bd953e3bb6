#include "millkit/heurlang/printer.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace millkit::heurlang {

namespace {

// Binding strength, loosest first. Used to decide parenthesization.
int precedence(const Expr& e) {
  if (std::holds_alternative<CondExpr>(e.node)) return 0;
  if (const auto* b = std::get_if<Binary>(&e.node)) {
    switch (b->op) {
      case BinaryOp::Or: return 1;
      case BinaryOp::And: return 2;
      case BinaryOp::Lt: case BinaryOp::Le: case BinaryOp::Gt:
      case BinaryOp::Ge: case BinaryOp::Eq: case BinaryOp::Ne:
        return 4;
      case BinaryOp::Add: case BinaryOp::Sub: return 5;
      case BinaryOp::Mul: case BinaryOp::Div: case BinaryOp::FloorDiv: return 6;
      case BinaryOp::Pow: return 8;
    }
  }
  if (const auto* u = std::get_if<Unary>(&e.node)) {
    return u->op == UnaryOp::Not ? 3 : 7;
  }
  return 9;  // atoms and calls
}

void print_rec(const Expr& e, std::ostream& out, int parent_prec, bool rhs_of_binary);

// Left-associative operators need parens around a same-precedence rhs;
// power is right-associative and is handled separately.
void print_child(const Expr& child, std::ostream& out, int my_prec, bool is_rhs) {
  int child_prec = precedence(child);
  bool parens = child_prec < my_prec || (child_prec == my_prec && is_rhs);
  if (parens) out << "(";
  print_rec(child, out, my_prec, is_rhs);
  if (parens) out << ")";
}

void print_rec(const Expr& e, std::ostream& out, int, bool) {
  if (const auto* n = std::get_if<NumberLit>(&e.node)) {
    out << format_number(n->value, n->is_integer);
    return;
  }
  if (const auto* b = std::get_if<BoolLit>(&e.node)) {
    out << (b->value ? "true" : "false");
    return;
  }
  if (const auto* id = std::get_if<Ident>(&e.node)) {
    out << id->name;
    return;
  }
  if (const auto* u = std::get_if<Unary>(&e.node)) {
    int my = precedence(e);
    if (u->op == UnaryOp::Neg) {
      out << "-";
      int child_prec = precedence(*u->operand);
      bool parens = child_prec < my;
      if (parens) out << "(";
      print_rec(*u->operand, out, my, false);
      if (parens) out << ")";
    } else {
      out << "not ";
      int child_prec = precedence(*u->operand);
      bool parens = child_prec < my;
      if (parens) out << "(";
      print_rec(*u->operand, out, my, false);
      if (parens) out << ")";
    }
    return;
  }
  if (const auto* bin = std::get_if<Binary>(&e.node)) {
    int my = precedence(e);
    if (bin->op == BinaryOp::Pow) {
      // Right-associative: parenthesize a same-precedence lhs.
      int lp = precedence(*bin->lhs);
      bool lhs_parens = lp <= my && lp != 9;
      if (lhs_parens) out << "(";
      print_rec(*bin->lhs, out, my, false);
      if (lhs_parens) out << ")";
      out << " ** ";
      print_child(*bin->rhs, out, my, false);
      return;
    }
    print_child(*bin->lhs, out, my, false);
    out << " " << op_symbol(bin->op) << " ";
    print_child(*bin->rhs, out, my, true);
    return;
  }
  if (const auto* call = std::get_if<Call>(&e.node)) {
    out << call->callee << "(";
    for (std::size_t i = 0; i < call->args.size(); ++i) {
      if (i) out << ", ";
      print_rec(*call->args[i], out, 0, false);
    }
    out << ")";
    return;
  }
  const auto& c = std::get<CondExpr>(e.node);
  out << "if ";
  print_rec(*c.cond, out, 0, false);
  out << " then ";
  print_rec(*c.then_value, out, 0, false);
  out << " else ";
  print_rec(*c.else_value, out, 0, false);
}

void print_stmts(const std::vector<StmtPtr>& body, std::ostream& out, int indent);

void print_if(const IfStmt& ifs, std::ostream& out, int indent, bool as_elif) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  out << pad << (as_elif ? "elif " : "if ");
  print_rec(*ifs.cond, out, 0, false);
  out << " {\n";
  print_stmts(ifs.then_body, out, indent + 1);
  out << pad << "}";
  if (ifs.else_body.size() == 1) {
    if (const auto* nested = std::get_if<IfStmt>(&ifs.else_body[0]->node)) {
      out << " ";
      print_if(*nested, out, indent, /*as_elif=*/true);
      return;
    }
  }
  if (!ifs.else_body.empty()) {
    out << " else {\n";
    print_stmts(ifs.else_body, out, indent + 1);
    out << pad << "}";
  }
  out << "\n";
}

void print_stmts(const std::vector<StmtPtr>& body, std::ostream& out, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (const auto& sp : body) {
    if (const auto* let = std::get_if<LetStmt>(&sp->node)) {
      out << pad << "let " << let->name << " = ";
      print_rec(*let->value, out, 0, false);
      out << "\n";
    } else if (const auto* ifs = std::get_if<IfStmt>(&sp->node)) {
      print_if(*ifs, out, indent, false);
    } else {
      const auto& ret = std::get<ReturnStmt>(sp->node);
      out << pad << "return (";
      print_rec(*ret.hr, out, 0, false);
      out << ", ";
      print_rec(*ret.interpass, out, 0, false);
      out << ", ";
      print_rec(*ret.velocity, out, 0, false);
      out << ")\n";
    }
  }
}

}  // namespace

std::string format_number(double value, bool is_integer) {
  if (is_integer && value == std::trunc(value) && std::fabs(value) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.0f", value);
    return buf;
  }
  // Shortest representation that round-trips; force a marker so the lexer
  // classifies it as a real again.
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, value);
    if (std::strtod(buf, nullptr) == value) break;
  }
  std::string s = buf;
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find('E') == std::string::npos && s.find("inf") == std::string::npos &&
      s.find("nan") == std::string::npos) {
    s += ".0";
  }
  return s;
}

std::string print_expr(const Expr& e) {
  std::ostringstream out;
  print_rec(e, out, 0, false);
  return out.str();
}

std::string pretty_print(const HeuristicProgram& p) {
  std::ostringstream out;
  print_stmts(p.body, out, 0);
  return out.str();
}

}  // namespace millkit::heurlang
