#pragma once

#include <string>

#include "geomhop/library.hpp"
#include "geomhop/problem.hpp"

namespace geomhop {

enum class SolveMode {
    Replay,    // follow the recorded formula order
    Saturate,  // exhaustive forward chaining, ignores the recorded order
};

// Forward-chains formulas bottom-up over the shape tree and returns the
// deduction trace. Variablized uses first solve their 1-d linear equation,
// then substitute. Throws UnsolvableError / DomainError.
SolutionTrace solve(const ProblemGraph& g, const FormulaLibrary& lib = FormulaLibrary::builtin(),
                    SolveMode mode = SolveMode::Replay);

// solve() and write every derived value into the graph's element maps
SolutionTrace solve_and_fill(ProblemGraph& g,
                             const FormulaLibrary& lib = FormulaLibrary::builtin());

// True iff re-executing every step reproduces its recorded values exactly
// and the trace is topologically sound and derives the query. Diagnostics
// describe the first failure.
bool verify_trace(const ProblemGraph& g, const SolutionTrace& t,
                  const FormulaLibrary& lib = FormulaLibrary::builtin(),
                  std::string* diagnostics = nullptr);

struct ProofMetrics {
    int depth = 0;          // hops on the longest proof path
    int width = 0;          // maximum branching factor (premises per rule)
    int branch_count = 0;   // rule uses expanding two withheld elements
    int max_withheld = 0;   // largest number of withheld inputs on one use
};

// Computed from the recorded proof structure, independent of generator
// metadata. A query that is itself a fact scores (0, 0).
ProofMetrics proof_metrics(const ProblemGraph& g,
                           const FormulaLibrary& lib = FormulaLibrary::builtin());

// keep-or-drop decision of the rounding-drift filter
bool drift_filter(const SolutionTrace& t);
double drift_fraction(const SolutionTrace& t);

}  // namespace geomhop
