#pragma once

#include <set>
#include <string>
#include <vector>

#include "millkit/heurlang/ast.hpp"

namespace millkit::heurlang {

// Input keys whose value can affect some output on some path. Syntactic
// over-approximation: every referenced key.
std::set<std::string> free_inputs(const HeuristicProgram& p);

// Per-output influence sets (inputs and mask accessors), tracking data flow
// through bindings and the conditions guarding each return site.
struct OutputDeps {
  std::set<std::string> hr;
  std::set<std::string> interpass;
  std::set<std::string> velocity;
};
OutputDeps output_dependencies(const HeuristicProgram& p);

// All numeric literal sites in a mutable body, in source order. Used by the
// mutation proposer to perturb a single constant.
std::vector<NumberLit*> literal_sites(std::vector<StmtPtr>& body);

// Division/ln-style fault sites present syntactically (used by lints to
// report locations; feasibility comes from the interval layer).
struct FaultSite {
  enum class Kind { Division, FloorDivision, Ln, Pow } kind;
  SourceLoc loc;
};
std::vector<FaultSite> fault_sites(const HeuristicProgram& p);

}  // namespace millkit::heurlang
