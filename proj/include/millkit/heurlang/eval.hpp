#pragma once

#include <string>
#include <variant>

#include "millkit/core/types.hpp"
#include "millkit/heurlang/ast.hpp"

namespace millkit::heurlang {

// Numeric fault raised during evaluation: division by zero, ln of a
// non-positive value, or any non-finite intermediate. Never a crash; the
// search loop treats this as the repair trigger.
struct RuntimeFault {
  std::string message;
  SourceLoc loc;
};

using EvalOutcome = std::variant<ActionTriple, RuntimeFault>;

inline bool eval_ok(const EvalOutcome& o) { return std::holds_alternative<ActionTriple>(o); }
inline const ActionTriple& eval_action(const EvalOutcome& o) { return std::get<ActionTriple>(o); }
inline const RuntimeFault& eval_fault(const EvalOutcome& o) { return std::get<RuntimeFault>(o); }

// Deterministic, pure evaluation. Raw return values are clipped to each
// dimension's bounds and then truncated toward zero.
EvalOutcome evaluate(const HeuristicProgram& p, const ProcessState& state, const ActionMask& mask);

// The return coercion applied to one raw component.
int coerce_index(double raw, int max_idx);

}  // namespace millkit::heurlang
