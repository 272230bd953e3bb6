#pragma once

#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace millkit::heurlang {

struct SourceLoc {
  int line = 0;  // 1-based; 0 = unknown
  int col = 0;
};

enum class DiagCode {
  LexError,
  SyntaxError,
  UnknownIdentifier,
  MissingReturnPath,
  ForbiddenConstruct,
};

struct Diagnostic {
  DiagCode code = DiagCode::SyntaxError;
  std::string message;
  SourceLoc loc;
  std::string origin;

  std::string format() const;  // "origin:line:col: error: message"
};

// A unit of DSL text plus where it came from (file path or proposer id).
struct SourceUnit {
  std::string text;
  std::string origin = "<memory>";
};

enum class BinaryOp { Add, Sub, Mul, Div, FloorDiv, Pow, Lt, Le, Gt, Ge, Eq, Ne, And, Or };
enum class UnaryOp { Neg, Not };

bool is_comparison(BinaryOp op);
bool is_bool_op(BinaryOp op);
std::string_view op_symbol(BinaryOp op);

// The kind an identifier resolved to.
enum class IdentKind { Unresolved, Input, MaskIdx, MaskFlag, Binding };

enum class ValueType { Num, Bool };

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct NumberLit {
  double value = 0.0;
  bool is_integer = false;  // written without '.'/exponent
};

struct BoolLit {
  bool value = false;
};

struct Ident {
  std::string name;
  IdentKind kind = IdentKind::Unresolved;
  int index = -1;  // input key index or binding slot
};

struct Unary {
  UnaryOp op;
  ExprPtr operand;
};

struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Call {
  std::string callee;
  std::vector<ExprPtr> args;
};

struct CondExpr {
  ExprPtr cond;
  ExprPtr then_value;
  ExprPtr else_value;
};

struct Expr {
  std::variant<NumberLit, BoolLit, Ident, Unary, Binary, Call, CondExpr> node;
  SourceLoc loc;
  ValueType type = ValueType::Num;  // filled by the resolver
};

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

struct LetStmt {
  std::string name;
  ExprPtr value;
  int slot = -1;  // filled by the resolver; rebinding reuses the slot
};

struct IfStmt {
  ExprPtr cond;
  std::vector<StmtPtr> then_body;
  std::vector<StmtPtr> else_body;  // empty = no else; single nested IfStmt = elif
};

struct ReturnStmt {
  ExprPtr hr;
  ExprPtr interpass;
  ExprPtr velocity;
};

struct Stmt {
  std::variant<LetStmt, IfStmt, ReturnStmt> node;
  SourceLoc loc;
};

// A parsed, fully resolved controller. Immutable after construction;
// evaluation is pure, so sharing across threads is safe.
struct HeuristicProgram {
  std::vector<StmtPtr> body;
  std::string source;  // original text
  std::string origin;

  std::set<std::string> referenced_inputs;  // subset of the 10 input keys
  bool uses_mask = false;                   // any mask accessor referenced
  int slot_count = 0;
  std::vector<SourceLoc> unreachable_stmts;  // statements after a sure return
};

using ProgramPtr = std::shared_ptr<const HeuristicProgram>;

ExprPtr clone_expr(const Expr& e);
StmtPtr clone_stmt(const Stmt& s);
std::vector<StmtPtr> clone_body(const std::vector<StmtPtr>& body);

// Structural identity, ignoring source locations. Used by the round-trip
// tests and the mutation proposer.
bool structurally_equal(const Expr& a, const Expr& b);
bool structurally_equal(const std::vector<StmtPtr>& a, const std::vector<StmtPtr>& b);
bool structurally_equal(const HeuristicProgram& a, const HeuristicProgram& b);

// Builtin call table: name -> (min_arity, max_arity). clip(x, lo, hi) takes
// exactly 3, min/max are variadic (>= 2), the rest take 1.
struct BuiltinInfo {
  std::string_view name;
  int min_arity;
  int max_arity;  // -1 = unbounded
};
const BuiltinInfo* builtin_info(std::string_view name);

}  // namespace millkit::heurlang
