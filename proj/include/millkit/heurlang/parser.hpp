#pragma once

#include <optional>

#include "millkit/heurlang/ast.hpp"

namespace millkit::heurlang {

struct ParseResult {
  ProgramPtr program;                    // null on failure
  std::optional<Diagnostic> error;       // set on failure

  bool ok() const { return program != nullptr; }
};

// Parse and resolve a source unit. On success the returned program satisfies
// every HeuristicProgram invariant: all identifiers resolved, exactly one
// return shape, a return reachable on every control path, no reads of
// possibly-unassigned variables, and static Num/Bool type consistency.
ParseResult parse(const SourceUnit& src);

// Re-resolve an already-built body (used after AST mutation). Returns the
// finished program or a diagnostic.
ParseResult resolve_body(std::vector<StmtPtr> body, std::string source, std::string origin);

}  // namespace millkit::heurlang
