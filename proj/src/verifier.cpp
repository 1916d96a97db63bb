#include "guardprompt/verifier.hpp"

#include "guardprompt/adversary.hpp"
#include "guardprompt/semantics.hpp"

namespace guardprompt {

std::string outcome::to_string() const {
  std::string out = "world " + std::to_string(world) + ", roles " + assignment.to_string();
  if (behavior) out += ", " + behavior->to_string();
  return out + " -> answer " + std::to_string(answer);
}

value_t decoder::decode(value_t answer) const {
  auto it = table_.find(answer);
  if (it == table_.end()) {
    throw unknown_answer("answer " + std::to_string(answer) + " is never realizable");
  }
  return it->second;
}

std::string decoder::closed_form() const {
  if (table_.empty()) return "empty";
  const auto& [a0, w0] = *table_.begin();
  const value_t shift = a0 - w0;
  const value_t sum = a0 + w0;
  bool is_shift = true;
  bool is_reflection = true;
  for (const auto& [a, w] : table_) {
    is_shift = is_shift && a - w == shift;
    is_reflection = is_reflection && a + w == sum;
  }
  if (is_shift) {
    if (shift == 0) return "identity";
    return shift > 0 ? "answer - " + std::to_string(shift) : "answer + " + std::to_string(-shift);
  }
  if (is_reflection) return std::to_string(sum) + " - answer";
  return "table";
}

std::string kind_name(const counterexample& c) {
  return std::holds_alternative<collision>(c) ? "collision" : "stuck";
}

std::string to_string(const counterexample& c) {
  if (const auto* col = std::get_if<collision>(&c)) {
    return "collision on answer " + std::to_string(col->answer) + ": [" +
           col->first.to_string() + "] vs [" + col->second.to_string() + "]";
  }
  const auto& s = std::get<stuck>(c);
  std::string out = "stuck at " + print(s.at) + " in world " + std::to_string(s.world) +
                    ", roles " + s.assignment.to_string();
  if (s.behavior) out += ", " + s.behavior->to_string();
  return out + ": " + s.reason;
}

namespace {

void validate(const answer_space& space, const question& prompt, const verify_options& o) {
  if (prompt.contains_self_reference()) {
    throw self_reference_unsupported(
        "could(self) has no direct verdict; analyse it with the fixpoint command");
  }
  if (space.size() < 2) throw validation_error("answer space needs at least 2 values");
  if (o.guard_count == 0) throw validation_error("at least one guard is required");
  if (o.mode == roles_mode::exactly_one_each && o.guard_count != 2) {
    throw validation_error("roles=exactly-one-each requires exactly 2 guards");
  }
  if (o.asked_guard >= o.guard_count) {
    throw validation_error("asked guard " + std::to_string(o.asked_guard) +
                           " does not exist among " + std::to_string(o.guard_count));
  }
}

}  // namespace

std::vector<outcome_event> enumerate_outcomes(const answer_space& space, const liar_model& model,
                                              const question& prompt,
                                              const verify_options& options,
                                              const world_domain& domain) {
  validate(space, prompt, options);
  const auto assignments = enumerate_assignments(options.guard_count, options.mode);
  std::vector<outcome_event> events;
  for (value_t w : domain.valid) {
    for (const auto& roles : assignments) {
      try {
        if (is_adversarial(model)) {
          for (auto& branch : explore_behaviors(space, world{w}, roles, prompt,
                                                options.asked_guard)) {
            if (!branch.root_support) {
              events.emplace_back(stuck{w, roles, branch.witness, *branch.stuck_at,
                                        branch.stuck_reason});
              continue;
            }
            for (value_t a : *branch.root_support) {
              events.emplace_back(outcome{w, roles, branch.witness, a});
            }
          }
        } else {
          const eval_context ctx{space, world{w}, roles, model, options.asked_guard,
                                 false, std::nullopt, nullptr};
          for (value_t a : response_support(ctx, prompt)) {
            events.emplace_back(outcome{w, roles, std::nullopt, a});
          }
        }
      } catch (const eval_error& e) {
        events.emplace_back(stuck{w, roles, std::nullopt, e.at(), e.what()});
      }
    }
  }
  return events;
}

verdict verify(const answer_space& space, const liar_model& model, const question& prompt,
               const verify_options& options) {
  validate(space, prompt, options);
  verdict v;
  v.assumptions.push_back("every answer lies in the prescribed answer space");
  if (prompt.contains(question_kind::restricted)) {
    v.assumptions.push_back(
        "inside restrict(...) every agent is forced to answer within the two-element set");
    if (std::holds_alternative<fixed_rule>(model)) {
      v.assumptions.push_back(
          "a fixed-rule liar whose rule leaves the restricted set gives another false answer");
    }
  }
  if (prompt.contains(question_kind::ask_other) && options.guard_count != 2) {
    v.result = invalid{"other(...) needs exactly 2 guards"};
    return v;
  }
  v.domain = valid_worlds(space, model, prompt, options.guard_count, options.mode);
  if (v.domain.valid.empty()) {
    v.result = invalid{"no valid worlds: every world is excluded"};
    return v;
  }

  const auto events = enumerate_outcomes(space, model, prompt, options, v.domain);
  std::map<value_t, const outcome*> claimed;
  std::size_t outcomes = 0;
  for (const auto& ev : events) {
    if (const auto* s = std::get_if<stuck>(&ev)) {
      v.result = not_winning{*s};
      return v;
    }
    const auto& o = std::get<outcome>(ev);
    ++outcomes;
    auto [it, fresh] = claimed.emplace(o.answer, &o);
    if (!fresh && it->second->world != o.world) {
      v.result = not_winning{collision{o.answer, *it->second, o}};
      return v;
    }
  }
  std::map<value_t, value_t> table;
  for (const auto& [a, o] : claimed) table.emplace(a, o->world);
  v.result = winning{decoder(std::move(table)), outcomes};
  return v;
}

}  // namespace guardprompt
