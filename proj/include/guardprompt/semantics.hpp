#pragma once

// Truthful-answer sets and response supports for each guard under each
// liar model, plus fixed-point analysis of the self-referential question.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "guardprompt/core.hpp"
#include "guardprompt/question.hpp"
#include "guardprompt/strategy.hpp"

namespace guardprompt {

enum class eval_failure {
  invalid_restriction,      // template undefined at this world
  arity,                    // other(...) with a guard count other than 2
  strategy_required,        // adversarial liar consulted without a bound answer
  inconsistent_strategy,    // bound answer is truthful or not permissible
  fixed_rule_undefined,     // fixed rule applied to a non-singleton truthful set
  fixed_rule_out_of_range,  // f(t) leaves the unrestricted answer space
  stuck_liar,               // no permissible false answer
  stuck_respondent,         // truth-teller has no permissible true answer
  self_reference,           // could(self) needs fixed-point analysis
};

const char* to_string(eval_failure f);

class eval_error : public std::runtime_error {
 public:
  eval_error(eval_failure failure, const question& at, const std::string& detail);

  [[nodiscard]] eval_failure failure() const { return failure_; }
  [[nodiscard]] const question& at() const { return at_; }

 private:
  eval_failure failure_;
  question at_;
};

struct eval_context {
  answer_space space;
  world w;
  role_assignment roles;
  liar_model model;
  std::size_t respondent = 0;
  // The respondent is a hypothetical guard of the opposite role standing in
  // the respondent's position.
  bool hypothetical = false;
  // Active permissible set; the whole space when absent.
  std::optional<answer_set> restriction;
  // Adversarial liar answers; not owned.
  const strategy* strat = nullptr;

  [[nodiscard]] role respondent_role() const;
  [[nodiscard]] const answer_set& permissible() const {
    return restriction ? *restriction : space.values();
  }
};

// Set of answers that are true statements in reply to q from the
// respondent's perspective, clipped to the permissible set of the reply.
// Throws eval_error.
answer_set truthful_set(const eval_context& ctx, const question& q);

// Set of answers the respondent could emit in reply to q. Throws eval_error;
// an empty support is reported as stuck_liar / stuck_respondent.
answer_set response_support(const eval_context& ctx, const question& q);

// Evaluation frame of one closure node: which agent answers it and under
// which restriction its evaluation starts.
struct node_frame {
  question node;
  eval_context ctx;       // respondent, hypothetical and restriction set for this node
  answer_set reply_set;   // permissible set for the node's own reply
};

// Frames for every node of q's closure, innermost first. The strategy
// pointer of ctx is propagated. Throws eval_error for undefined templates
// and arity violations.
std::vector<node_frame> evaluation_frames(const eval_context& ctx, const question& q);

struct unique_fixpoint {
  answer_set solution;
};
struct underdetermined {
  std::string description;
  answer_set least;
  answer_set greatest;
};
struct no_fixpoint {
  // F(first) = second and F(second) = first.
  answer_set first;
  answer_set second;
};
using fixpoint_report = std::variant<unique_fixpoint, underdetermined, no_fixpoint>;

std::string to_string(const fixpoint_report& r, const answer_set& permissible,
                      const std::string& permissible_name = "P");

// The map R -> support the respondent would have if its support on
// could(self) were R.
answer_set self_reference_step(const eval_context& ctx, const answer_set& r);

// Solves R = F(R) over subsets of the permissible set for could(self).
// Throws std::invalid_argument for an adversarial liar respondent.
fixpoint_report solve_self_reference(const eval_context& ctx);

}  // namespace guardprompt
