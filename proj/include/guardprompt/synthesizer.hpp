#pragma once

// Grammar search for winning prompts.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "guardprompt/core.hpp"
#include "guardprompt/question.hpp"
#include "guardprompt/verifier.hpp"

namespace guardprompt {

struct winning_candidate {
  question prompt;
  std::string decoder_summary;
  std::size_t outcome_count;
};

struct failing_candidate {
  question prompt;
  std::string kind;  // "collision", "stuck" or "invalid"
  std::string detail;
};

// Candidates containing could(self); never given a verdict.
struct diagnostic_candidate {
  question prompt;
  std::vector<std::string> notes;
};

struct synthesis_report {
  std::size_t examined = 0;
  std::vector<winning_candidate> winning;
  std::vector<failing_candidate> failing;
  std::vector<diagnostic_candidate> diagnostic;

  [[nodiscard]] bool is_winning(const question& q) const;
  [[nodiscard]] bool is_failing(const question& q) const;
};

// Verifies every candidate of enumerate_grammar(max_depth, templates) in
// grammar order. Throws validation_error for |S| < 2 or max_depth == 0.
synthesis_report synthesize(const answer_space& space, const liar_model& model,
                            std::size_t max_depth, std::span<const set_template> templates,
                            const verify_options& options = {});

}  // namespace guardprompt
