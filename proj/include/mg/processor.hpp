#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mg/grammar.hpp"

namespace mg {

// The processor's stack; index 0 is the bottom, the last element the top.
// Recorded positions and permutations are 1-based to match the trace format.
using StateDescription = std::vector<TreePtr>;

struct DerivationStep {
  enum class Op { Merge, Move };
  Op op;
  int i = 0;           // merge: position of the selecting tree; move: the moved tree
  int j = 0;           // merge: position of the selected tree; move: 0
  Feature trigger;     // the selector / licensor consumed by the step
  std::vector<int> pi; // permutation applied before the operation; pi[k] = old position
};

struct DerivationTrace {
  enum class Status { Success, Stuck };
  std::vector<StateDescription> states;  // states.size() == steps.size() + 1
  std::vector<DerivationStep> steps;
  Status status = Status::Stuck;

  const StateDescription& final_state() const { return states.back(); }
};

// (w_1, ..., merge(w_{m-1}, w_m)); shrinks the stack by one.
StateDescription merge_star(const StateDescription& w);

// Applies move to the top tree.
StateDescription move_star(const StateDescription& w);

// Reorders the stack: result[k] = w[pi[k]] with 1-based pi.
StateDescription permute(const StateDescription& w, const std::vector<int>& pi);

struct StepChoice {
  DerivationStep::Op op;
  int i = 0, j = 0;  // 1-based stack positions
};

// Deterministic oracle.  Merge phase first: the focus tree is scanned from
// the top of the stack down ("checked against every other tree"); partners
// are scanned bottom-up, trying the focus as selector before the partner.
// Move phase second, top-down.  Returns nothing when no operation applies.
//
// NOTE: a literal top-down partner scan would pick (-ed, step-1 tree) instead
// of (eps, step-1 tree) at the second step of the worked derivation; the
// bottom-up partner scan is what reproduces the published eight-step trace.
std::optional<StepChoice> find_step(const StateDescription& w);

// Permutation realizing a step choice: selector to m-1, selected to m (merge)
// or the movable tree to m (move); everything else keeps relative order.
std::vector<int> step_permutation(const StepChoice& choice, std::size_t m);

// Runs the processor from the full lexicon (file order, bottom to top).
// Success iff one tree remains and its feature is the complementizer.
DerivationTrace derive(const Lexicon& lex);

// Diff-friendly text form: one line per state, one line per step.
std::string render(const DerivationTrace& trace);
std::string render_json(const DerivationTrace& trace);

}  // namespace mg
