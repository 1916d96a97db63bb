#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "guardprompt/core.hpp"
#include "guardprompt/question.hpp"

namespace guardprompt {

struct excluded_world {
  value_t world;
  std::string reason;
};

struct world_domain {
  std::vector<value_t> valid;
  std::vector<excluded_world> excluded;
};

// Worlds w in S at which every template instantiation and every fixed-rule
// application reachable while evaluating the prompt (for any guard under
// any role assignment) is defined. The rest are reported with a reason.
world_domain valid_worlds(const answer_space& space, const liar_model& model,
                          const question& prompt, std::size_t guard_count = 2,
                          roles_mode mode = roles_mode::exactly_one_each);

}  // namespace guardprompt
