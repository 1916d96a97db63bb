#pragma once

// Deterministic adversarial liars over a prompt's question closure.
//
// Every constructor is unary, so a prompt is a chain and each closure node is
// answered by exactly one agent (a real guard or a hypothetical opposite).
// A strategy binds an answer to every node answered by a liar; nodes
// answered by truth-tellers need no binding.

#include <cstddef>
#include <optional>
#include <vector>

#include "guardprompt/core.hpp"
#include "guardprompt/question.hpp"
#include "guardprompt/semantics.hpp"
#include "guardprompt/strategy.hpp"

namespace guardprompt {

// All falsity-consistent strategies when `asked` is the guard receiving the
// prompt. Liar nodes are bound innermost first; the list is in lexicographic
// order of the bound answers. An empty list means the liar is stuck at some
// node on every branch (including a liar asked could(self), which has no
// consistent answer). Throws eval_error for undefined templates, arity
// violations, or a truth-teller node on could(self).
std::vector<strategy> enumerate_strategies(const answer_space& space, world w,
                                           const role_assignment& roles, const question& prompt,
                                           std::size_t asked);

// Re-checks falsity and totality of s independently of its construction.
bool is_consistent(const strategy& s, const answer_space& space, world w,
                   const role_assignment& roles, const question& prompt, std::size_t asked);

// One equivalence class of strategies: all strategies reaching the same
// support at the prompt root (or getting stuck at the same node with the
// same inner state). `witness` is the lexicographically first member.
struct behavior_branch {
  strategy witness;
  std::optional<answer_set> root_support;  // set unless the branch is stuck
  std::optional<question> stuck_at;
  std::string stuck_reason;
};

// Reachable root supports for the asked guard, one branch per distinct
// state, in lexicographic order of witnesses. Equivalent to mapping
// response_support over enumerate_strategies, without the exponential blowup.
std::vector<behavior_branch> explore_behaviors(const answer_space& space, world w,
                                               const role_assignment& roles,
                                               const question& prompt, std::size_t asked);

}  // namespace guardprompt
