#include "millkit/heurlang/parser.hpp"

#include <map>
#include <optional>
#include <utility>

#include "millkit/core/ranges.hpp"
#include "millkit/heurlang/lexer.hpp"

namespace millkit::heurlang {

namespace {

struct ParseError {
  Diagnostic diag;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string origin)
      : tokens_(std::move(tokens)), origin_(std::move(origin)) {}

  std::vector<StmtPtr> parse_program() {
    std::vector<StmtPtr> body = parse_stmt_list(/*until_brace=*/false);
    expect(Tok::End, "expected a statement");
    return body;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& get() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool at(Tok t) const { return peek().type == t; }
  bool accept(Tok t) {
    if (at(t)) { get(); return true; }
    return false;
  }
  const Token& expect(Tok t, std::string_view what) {
    if (!at(t)) {
      fail(std::string(what) + ", got " + std::string(token_name(peek().type)), peek().loc);
    }
    return get();
  }
  [[noreturn]] void fail(std::string msg, SourceLoc loc) {
    throw ParseError{Diagnostic{DiagCode::SyntaxError, std::move(msg), loc, origin_}};
  }

  void skip_separators() {
    while (accept(Tok::Semicolon)) {}
  }

  std::vector<StmtPtr> parse_stmt_list(bool until_brace) {
    std::vector<StmtPtr> out;
    skip_separators();
    while (!at(Tok::End) && !(until_brace && at(Tok::RBrace))) {
      out.push_back(parse_stmt());
      skip_separators();
    }
    return out;
  }

  StmtPtr parse_stmt() {
    const Token& t = peek();
    switch (t.type) {
      case Tok::KwLet: return parse_let();
      case Tok::KwIf: return parse_if();
      case Tok::KwReturn: return parse_return();
      default:
        fail("expected 'let', 'if' or 'return', got " + std::string(token_name(t.type)),
             t.loc);
    }
  }

  StmtPtr parse_let() {
    SourceLoc loc = peek().loc;
    get();  // let
    const Token& name = expect(Tok::Ident, "expected a name after 'let'");
    std::string ident = name.text;
    expect(Tok::Assign, "expected '=' in let binding");
    ExprPtr value = parse_expr();
    auto s = std::make_unique<Stmt>();
    s->loc = loc;
    s->node = LetStmt{std::move(ident), std::move(value), -1};
    return s;
  }

  std::vector<StmtPtr> parse_block() {
    expect(Tok::LBrace, "expected '{'");
    std::vector<StmtPtr> body = parse_stmt_list(/*until_brace=*/true);
    expect(Tok::RBrace, "expected '}'");
    return body;
  }

  StmtPtr parse_if() {
    SourceLoc loc = peek().loc;
    get();  // if
    ExprPtr cond = parse_expr();
    std::vector<StmtPtr> then_body = parse_block();
    std::vector<StmtPtr> else_body;
    if (at(Tok::KwElif)) {
      // Desugar: an elif chain becomes a nested if in the else body.
      // parse_if consumes the leading keyword without inspecting it.
      else_body.push_back(parse_if());
    } else if (accept(Tok::KwElse)) {
      else_body = parse_block();
    }
    auto s = std::make_unique<Stmt>();
    s->loc = loc;
    s->node = IfStmt{std::move(cond), std::move(then_body), std::move(else_body)};
    return s;
  }

  StmtPtr parse_return() {
    SourceLoc loc = peek().loc;
    get();  // return
    expect(Tok::LParen, "expected '(' after 'return'");
    ExprPtr hr = parse_expr();
    expect(Tok::Comma, "expected ',' in return triple");
    ExprPtr interpass = parse_expr();
    expect(Tok::Comma, "expected ',' in return triple");
    ExprPtr velocity = parse_expr();
    expect(Tok::RParen, "expected ')' closing the return triple");
    auto s = std::make_unique<Stmt>();
    s->loc = loc;
    s->node = ReturnStmt{std::move(hr), std::move(interpass), std::move(velocity)};
    return s;
  }

  ExprPtr make(SourceLoc loc, auto node) {
    auto e = std::make_unique<Expr>();
    e->loc = loc;
    e->node = std::move(node);
    return e;
  }

  ExprPtr parse_expr() {
    if (at(Tok::KwIf)) {
      SourceLoc loc = get().loc;
      ExprPtr cond = parse_expr();
      expect(Tok::KwThen, "expected 'then' in conditional expression");
      ExprPtr then_value = parse_expr();
      expect(Tok::KwElse, "expected 'else' in conditional expression");
      ExprPtr else_value = parse_expr();
      return make(loc, CondExpr{std::move(cond), std::move(then_value), std::move(else_value)});
    }
    return parse_or();
  }

  ExprPtr parse_or() {
    ExprPtr lhs = parse_and();
    while (at(Tok::KwOr)) {
      SourceLoc loc = get().loc;
      ExprPtr rhs = parse_and();
      lhs = make(loc, Binary{BinaryOp::Or, std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  ExprPtr parse_and() {
    ExprPtr lhs = parse_not();
    while (at(Tok::KwAnd)) {
      SourceLoc loc = get().loc;
      ExprPtr rhs = parse_not();
      lhs = make(loc, Binary{BinaryOp::And, std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  ExprPtr parse_not() {
    if (at(Tok::KwNot)) {
      SourceLoc loc = get().loc;
      return make(loc, Unary{UnaryOp::Not, parse_not()});
    }
    return parse_comparison();
  }

  std::optional<BinaryOp> comparison_op() {
    switch (peek().type) {
      case Tok::Lt: return BinaryOp::Lt;
      case Tok::Le: return BinaryOp::Le;
      case Tok::Gt: return BinaryOp::Gt;
      case Tok::Ge: return BinaryOp::Ge;
      case Tok::EqEq: return BinaryOp::Eq;
      case Tok::Ne: return BinaryOp::Ne;
      default: return std::nullopt;
    }
  }

  ExprPtr parse_comparison() {
    ExprPtr lhs = parse_additive();
    if (auto op = comparison_op()) {
      SourceLoc loc = get().loc;
      ExprPtr rhs = parse_additive();
      if (comparison_op()) {
        fail("comparisons cannot be chained", peek().loc);
      }
      return make(loc, Binary{*op, std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  ExprPtr parse_additive() {
    ExprPtr lhs = parse_multiplicative();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      BinaryOp op = at(Tok::Plus) ? BinaryOp::Add : BinaryOp::Sub;
      SourceLoc loc = get().loc;
      ExprPtr rhs = parse_multiplicative();
      lhs = make(loc, Binary{op, std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  ExprPtr parse_multiplicative() {
    ExprPtr lhs = parse_unary();
    while (at(Tok::Star) || at(Tok::Slash) || at(Tok::SlashSlash)) {
      BinaryOp op = at(Tok::Star)    ? BinaryOp::Mul
                    : at(Tok::Slash) ? BinaryOp::Div
                                     : BinaryOp::FloorDiv;
      SourceLoc loc = get().loc;
      ExprPtr rhs = parse_unary();
      lhs = make(loc, Binary{op, std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    if (at(Tok::Minus)) {
      SourceLoc loc = get().loc;
      return make(loc, Unary{UnaryOp::Neg, parse_unary()});
    }
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    if (at(Tok::StarStar)) {
      SourceLoc loc = get().loc;
      ExprPtr exponent = parse_unary();  // right-associative
      return make(loc, Binary{BinaryOp::Pow, std::move(base), std::move(exponent)});
    }
    return base;
  }

  ExprPtr parse_atom() {
    const Token& t = peek();
    switch (t.type) {
      case Tok::Number: {
        get();
        return make(t.loc, NumberLit{t.num_value, t.is_integer});
      }
      case Tok::KwTrue: get(); return make(t.loc, BoolLit{true});
      case Tok::KwFalse: get(); return make(t.loc, BoolLit{false});
      case Tok::LParen: {
        get();
        ExprPtr inner = parse_expr();
        expect(Tok::RParen, "expected ')'");
        return inner;
      }
      case Tok::Ident: {
        get();
        if (at(Tok::LParen)) {
          get();
          Call call;
          call.callee = t.text;
          call.args.push_back(parse_expr());
          while (accept(Tok::Comma)) call.args.push_back(parse_expr());
          expect(Tok::RParen, "expected ')' closing call");
          return make(t.loc, std::move(call));
        }
        return make(t.loc, Ident{t.text, IdentKind::Unresolved, -1});
      }
      default:
        fail("expected an expression, got " + std::string(token_name(t.type)), t.loc);
    }
  }

  std::vector<Token> tokens_;
  std::string origin_;
  std::size_t pos_ = 0;
};

// --------------------------------------------------------------------------
// Resolver: identifier binding, Num/Bool typing, definite assignment, and
// return-path completeness. Throws ParseError with the offending location.
// --------------------------------------------------------------------------

class Resolver {
 public:
  explicit Resolver(std::string origin) : origin_(std::move(origin)) {}

  void run(HeuristicProgram& p) {
    std::map<std::string, int> slots;
    std::vector<ValueType> slot_types;
    std::vector<bool> assigned;
    bool returns = resolve_list(p.body, slots, slot_types, assigned, p);
    if (!returns) {
      throw ParseError{Diagnostic{DiagCode::MissingReturnPath,
                                  "not every control path ends in a return",
                                  SourceLoc{0, 0}, origin_}};
    }
    p.slot_count = static_cast<int>(slot_types.size());
  }

 private:
  using Slots = std::map<std::string, int>;

  [[noreturn]] void fail(DiagCode code, std::string msg, SourceLoc loc) {
    throw ParseError{Diagnostic{code, std::move(msg), loc, origin_}};
  }

  // Returns true when the list is guaranteed to return on every path.
  // Statements after a sure return are unreachable; they are recorded for the
  // return-path lint but still fully resolved (against scratch state, so dead
  // bindings cannot make live code valid).
  bool resolve_list(std::vector<StmtPtr>& body, Slots& slots,
                    std::vector<ValueType>& slot_types, std::vector<bool>& assigned,
                    HeuristicProgram& p) {
    bool returned = false;
    std::vector<bool> scratch_assigned;
    for (auto& sp : body) {
      std::vector<bool>* live = &assigned;
      if (returned) {
        p.unreachable_stmts.push_back(sp->loc);
        if (scratch_assigned.empty()) scratch_assigned = assigned;
        live = &scratch_assigned;
      }
      resolve_stmt(*sp, slots, slot_types, *live, p, returned);
    }
    return returned;
  }

  void resolve_stmt(Stmt& s, Slots& slots, std::vector<ValueType>& slot_types,
                    std::vector<bool>& assigned, HeuristicProgram& p, bool& returned) {
    {
      if (auto* let = std::get_if<LetStmt>(&s.node)) {
        ValueType t = resolve_expr(*let->value, slots, slot_types, assigned, p);
        if (input_key_index(let->name) >= 0 || let->name == kMaskMaxValidHrIdx ||
            let->name == kMaskInterpassZeroValid || let->name == kMaskVelocityZeroValid) {
          fail(DiagCode::ForbiddenConstruct,
               "cannot assign to input '" + let->name + "'", s.loc);
        }
        if (builtin_info(let->name)) {
          fail(DiagCode::ForbiddenConstruct,
               "cannot bind builtin name '" + let->name + "'", s.loc);
        }
        auto it = slots.find(let->name);
        if (it == slots.end()) {
          let->slot = static_cast<int>(slot_types.size());
          slots.emplace(let->name, let->slot);
          slot_types.push_back(t);
          assigned.push_back(true);
        } else {
          let->slot = it->second;
          if (slot_types[let->slot] != t) {
            fail(DiagCode::ForbiddenConstruct,
                 "rebinding '" + let->name + "' with a different type", s.loc);
          }
          assigned[let->slot] = true;
        }
      } else if (auto* ifs = std::get_if<IfStmt>(&s.node)) {
        ValueType ct = resolve_expr(*ifs->cond, slots, slot_types, assigned, p);
        if (ct != ValueType::Bool) {
          fail(DiagCode::ForbiddenConstruct, "if condition must be boolean",
               ifs->cond->loc);
        }
        std::vector<bool> then_assigned = assigned;
        std::vector<bool> else_assigned = assigned;
        bool then_ret = resolve_list(ifs->then_body, slots, slot_types, then_assigned, p);
        bool else_ret = resolve_list(ifs->else_body, slots, slot_types, else_assigned, p);
        then_assigned.resize(slot_types.size(), false);
        else_assigned.resize(slot_types.size(), false);
        assigned.resize(slot_types.size(), false);
        for (std::size_t i = 0; i < assigned.size(); ++i) {
          // A branch that surely returns puts no constraint on fall-through state.
          bool from_then = then_ret ? true : then_assigned[i];
          bool from_else = else_ret ? true : else_assigned[i];
          assigned[i] = assigned[i] || (from_then && from_else);
        }
        if (then_ret && else_ret && !ifs->else_body.empty()) returned = true;
      } else {
        auto& ret = std::get<ReturnStmt>(s.node);
        for (Expr* e : {ret.hr.get(), ret.interpass.get(), ret.velocity.get()}) {
          ValueType t = resolve_expr(*e, slots, slot_types, assigned, p);
          if (t != ValueType::Bool) continue;
          fail(DiagCode::ForbiddenConstruct, "return components must be numeric", e->loc);
        }
        returned = true;
      }
    }
  }

  ValueType resolve_expr(Expr& e, Slots& slots, std::vector<ValueType>& slot_types,
                         std::vector<bool>& assigned, HeuristicProgram& p) {
    ValueType t = resolve_expr_inner(e, slots, slot_types, assigned, p);
    e.type = t;
    return t;
  }

  ValueType resolve_expr_inner(Expr& e, Slots& slots, std::vector<ValueType>& slot_types,
                               std::vector<bool>& assigned, HeuristicProgram& p) {
    if (std::holds_alternative<NumberLit>(e.node)) return ValueType::Num;
    if (std::holds_alternative<BoolLit>(e.node)) return ValueType::Bool;
    if (auto* id = std::get_if<Ident>(&e.node)) {
      int key = input_key_index(id->name);
      if (key >= 0) {
        id->kind = IdentKind::Input;
        id->index = key;
        p.referenced_inputs.insert(id->name);
        return ValueType::Num;
      }
      if (id->name == kMaskMaxValidHrIdx) {
        id->kind = IdentKind::MaskIdx;
        p.uses_mask = true;
        return ValueType::Num;
      }
      if (id->name == kMaskInterpassZeroValid || id->name == kMaskVelocityZeroValid) {
        id->kind = IdentKind::MaskFlag;
        id->index = id->name == kMaskInterpassZeroValid ? 0 : 1;
        p.uses_mask = true;
        return ValueType::Bool;
      }
      auto it = slots.find(id->name);
      if (it == slots.end()) {
        fail(DiagCode::UnknownIdentifier, "unknown identifier '" + id->name + "'", e.loc);
      }
      if (static_cast<std::size_t>(it->second) >= assigned.size() ||
          !assigned[it->second]) {
        fail(DiagCode::UnknownIdentifier,
             "variable '" + id->name + "' may be unassigned here", e.loc);
      }
      id->kind = IdentKind::Binding;
      id->index = it->second;
      return slot_types[it->second];
    }
    if (auto* un = std::get_if<Unary>(&e.node)) {
      ValueType t = resolve_expr(*un->operand, slots, slot_types, assigned, p);
      if (un->op == UnaryOp::Neg && t != ValueType::Num) {
        fail(DiagCode::ForbiddenConstruct, "negation needs a numeric operand", e.loc);
      }
      if (un->op == UnaryOp::Not && t != ValueType::Bool) {
        fail(DiagCode::ForbiddenConstruct, "'not' needs a boolean operand", e.loc);
      }
      return un->op == UnaryOp::Neg ? ValueType::Num : ValueType::Bool;
    }
    if (auto* bin = std::get_if<Binary>(&e.node)) {
      ValueType lt = resolve_expr(*bin->lhs, slots, slot_types, assigned, p);
      ValueType rt = resolve_expr(*bin->rhs, slots, slot_types, assigned, p);
      if (is_bool_op(bin->op)) {
        if (lt != ValueType::Bool || rt != ValueType::Bool) {
          fail(DiagCode::ForbiddenConstruct,
               std::string("'") + std::string(op_symbol(bin->op)) +
                   "' needs boolean operands", e.loc);
        }
        return ValueType::Bool;
      }
      if (bin->op == BinaryOp::Eq || bin->op == BinaryOp::Ne) {
        if (lt != rt) {
          fail(DiagCode::ForbiddenConstruct, "cannot compare boolean with number", e.loc);
        }
        return ValueType::Bool;
      }
      if (lt != ValueType::Num || rt != ValueType::Num) {
        fail(DiagCode::ForbiddenConstruct,
             std::string("'") + std::string(op_symbol(bin->op)) +
                 "' needs numeric operands", e.loc);
      }
      return is_comparison(bin->op) ? ValueType::Bool : ValueType::Num;
    }
    if (auto* call = std::get_if<Call>(&e.node)) {
      const BuiltinInfo* info = builtin_info(call->callee);
      if (!info) {
        DiagCode code = slots.count(call->callee) || input_key_index(call->callee) >= 0
                            ? DiagCode::ForbiddenConstruct
                            : DiagCode::UnknownIdentifier;
        fail(code, "unknown function '" + call->callee + "'", e.loc);
      }
      int n = static_cast<int>(call->args.size());
      if (n < info->min_arity || (info->max_arity >= 0 && n > info->max_arity)) {
        fail(DiagCode::ForbiddenConstruct,
             "wrong number of arguments to '" + call->callee + "'", e.loc);
      }
      for (auto& a : call->args) {
        if (resolve_expr(*a, slots, slot_types, assigned, p) != ValueType::Num) {
          fail(DiagCode::ForbiddenConstruct,
               "arguments to '" + call->callee + "' must be numeric", a->loc);
        }
      }
      return ValueType::Num;
    }
    auto& c = std::get<CondExpr>(e.node);
    if (resolve_expr(*c.cond, slots, slot_types, assigned, p) != ValueType::Bool) {
      fail(DiagCode::ForbiddenConstruct, "conditional test must be boolean", c.cond->loc);
    }
    ValueType tt = resolve_expr(*c.then_value, slots, slot_types, assigned, p);
    ValueType et = resolve_expr(*c.else_value, slots, slot_types, assigned, p);
    if (tt != et) {
      fail(DiagCode::ForbiddenConstruct, "conditional branches must have the same type",
           e.loc);
    }
    return tt;
  }

  std::string origin_;
};

}  // namespace

ParseResult resolve_body(std::vector<StmtPtr> body, std::string source, std::string origin) {
  auto program = std::make_shared<HeuristicProgram>();
  program->body = std::move(body);
  program->source = std::move(source);
  program->origin = origin;
  try {
    Resolver resolver(origin);
    resolver.run(*program);
  } catch (const ParseError& pe) {
    return ParseResult{nullptr, pe.diag};
  }
  return ParseResult{std::move(program), std::nullopt};
}

ParseResult parse(const SourceUnit& src) {
  if (src.text.empty()) {
    return ParseResult{nullptr,
                       Diagnostic{DiagCode::SyntaxError, "empty source", SourceLoc{1, 1},
                                  src.origin}};
  }
  LexResult lexed = lex(src);
  if (lexed.error) return ParseResult{nullptr, lexed.error};
  try {
    Parser parser(std::move(lexed.tokens), src.origin);
    std::vector<StmtPtr> body = parser.parse_program();
    return resolve_body(std::move(body), src.text, src.origin);
  } catch (const ParseError& pe) {
    return ParseResult{nullptr, pe.diag};
  }
}

}  // namespace millkit::heurlang
