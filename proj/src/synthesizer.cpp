#include "guardprompt/synthesizer.hpp"

#include <algorithm>

#include "guardprompt/adversary.hpp"
#include "guardprompt/semantics.hpp"

namespace guardprompt {

bool synthesis_report::is_winning(const question& q) const {
  return std::any_of(winning.begin(), winning.end(),
                     [&](const auto& c) { return c.prompt == q; });
}

bool synthesis_report::is_failing(const question& q) const {
  return std::any_of(failing.begin(), failing.end(),
                     [&](const auto& c) { return c.prompt == q; });
}

namespace {

std::vector<std::string> self_reference_notes(const answer_space& space, const liar_model& model,
                                              const question& q) {
  if (q.kind() != question_kind::could_provide_self) {
    return {"self-reference nested inside another question; no verdict"};
  }
  std::vector<std::string> notes;
  const world w{space.min()};
  const role_assignment roles{{role::truth_teller, role::liar}};
  for (std::size_t g = 0; g < 2; ++g) {
    const eval_context ctx{space, w, roles, model, g, false, std::nullopt, nullptr};
    const std::string who = to_string(roles.at(g));
    if (roles.at(g) == role::liar && is_adversarial(model)) {
      const bool none = enumerate_strategies(space, w, roles, q, g).empty();
      notes.push_back(who + ": " + (none ? "no falsity-consistent strategy (stuck)"
                                         : "consistent strategies exist"));
      continue;
    }
    notes.push_back(who + ": " + to_string(solve_self_reference(ctx), space.values(), "S"));
  }
  return notes;
}

}  // namespace

synthesis_report synthesize(const answer_space& space, const liar_model& model,
                            std::size_t max_depth, std::span<const set_template> templates,
                            const verify_options& options) {
  if (max_depth == 0) throw validation_error("max depth must be at least 1");
  if (space.size() < 2) throw validation_error("answer space needs at least 2 values");
  synthesis_report report;
  for (const question& q : enumerate_grammar(max_depth, templates)) {
    ++report.examined;
    if (q.contains_self_reference()) {
      report.diagnostic.push_back({q, self_reference_notes(space, model, q)});
      continue;
    }
    const verdict v = verify(space, model, q, options);
    if (const auto* win = v.win()) {
      report.winning.push_back({q, win->dec.closed_form(), win->outcome_count});
    } else if (const auto* cex = v.cex()) {
      report.failing.push_back({q, kind_name(*cex), to_string(*cex)});
    } else {
      report.failing.push_back({q, "invalid", std::get<invalid>(v.result).reason});
    }
  }
  return report;
}

}  // namespace guardprompt
