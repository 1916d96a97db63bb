#include "guardprompt/domain.hpp"

#include <optional>

#include "guardprompt/semantics.hpp"

namespace guardprompt {

world_domain valid_worlds(const answer_space& space, const liar_model& model,
                          const question& prompt, std::size_t guard_count, roles_mode mode) {
  const auto assignments = enumerate_assignments(guard_count, mode);
  world_domain out;
  for (value_t w : space.values()) {
    std::optional<std::string> reason;
    for (const question& node : closure(prompt)) {
      if (node.kind() != question_kind::restricted) continue;
      const auto inst = apply_template(*node.templ(), world{w}, space);
      if (const auto* bad = std::get_if<invalid_world>(&inst)) {
        reason = bad->reason;
        break;
      }
    }
    if (!reason && std::holds_alternative<fixed_rule>(model)) {
      for (const auto& roles : assignments) {
        for (std::size_t g = 0; g < guard_count && !reason; ++g) {
          const eval_context ctx{space, world{w}, roles, model, g, false, std::nullopt, nullptr};
          try {
            (void)response_support(ctx, prompt);
          } catch (const eval_error& e) {
            if (e.failure() == eval_failure::fixed_rule_out_of_range) reason = e.what();
          }
        }
        if (reason) break;
      }
    }
    if (reason) {
      out.excluded.push_back({w, *reason});
    } else {
      out.valid.push_back(w);
    }
  }
  return out;
}

}  // namespace guardprompt
