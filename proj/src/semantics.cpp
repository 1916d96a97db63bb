#include "guardprompt/semantics.hpp"

#include <algorithm>

namespace guardprompt {

const char* to_string(eval_failure f) {
  switch (f) {
    case eval_failure::invalid_restriction: return "invalid restriction";
    case eval_failure::arity: return "arity error";
    case eval_failure::strategy_required: return "strategy required";
    case eval_failure::inconsistent_strategy: return "inconsistent strategy";
    case eval_failure::fixed_rule_undefined: return "fixed rule undefined";
    case eval_failure::fixed_rule_out_of_range: return "fixed rule out of range";
    case eval_failure::stuck_liar: return "stuck liar";
    case eval_failure::stuck_respondent: return "stuck respondent";
    case eval_failure::self_reference: return "self-reference";
  }
  return "?";
}

eval_error::eval_error(eval_failure failure, const question& at, const std::string& detail)
    : std::runtime_error(std::string(to_string(failure)) + " at " + print(at) + ": " + detail),
      failure_(failure),
      at_(at) {}

role eval_context::respondent_role() const {
  const role r = roles.at(respondent);
  return hypothetical ? opposite(r) : r;
}

namespace {

// Lightweight view of an eval_context with the agent and restriction
// replaced; avoids copying the space on every recursive step.
struct frame {
  const eval_context& base;
  std::size_t respondent;
  bool hypothetical;
  const answer_set* restriction;

  [[nodiscard]] role agent_role() const {
    const role r = base.roles.at(respondent);
    return hypothetical ? opposite(r) : r;
  }
  [[nodiscard]] const answer_set& permissible() const {
    return restriction ? *restriction : base.space.values();
  }
  [[nodiscard]] frame with_restriction(const answer_set* r) const {
    return {base, respondent, hypothetical, r};
  }
};

answer_set instantiate(const frame& f, const question& q) {
  auto result = apply_template(*q.templ(), f.base.w, f.base.space);
  if (const auto* bad = std::get_if<invalid_world>(&result)) {
    throw eval_error(eval_failure::invalid_restriction, q, bad->reason);
  }
  return std::get<answer_set>(std::move(result));
}

answer_set support(const frame& f, const question& q);

// Truthful set in the reply frame (for restrict(...) the frame already
// carries the instantiated set).
answer_set raw_truthful(const frame& f, const question& q) {
  switch (q.kind()) {
    case question_kind::direct:
      return answer_set{f.base.w.weight};
    case question_kind::could_provide_self:
      throw eval_error(eval_failure::self_reference, q,
                       "self-referential question has no direct evaluation");
    case question_kind::ask_other: {
      if (f.base.roles.guard_count() != 2) {
        throw eval_error(eval_failure::arity, q,
                         "asking about the other guard needs exactly 2 guards, got " +
                             std::to_string(f.base.roles.guard_count()));
      }
      const frame other{f.base, 1 - f.respondent, false, f.restriction};
      return support(other, q.inner());
    }
    case question_kind::would_say_you:
    case question_kind::could_provide:
    case question_kind::restricted:
      return support(f, q.inner());
    case question_kind::opposite_avoids: {
      const frame hypothetical{f.base, f.respondent, !f.hypothetical, f.restriction};
      return f.permissible() - support(hypothetical, q.inner());
    }
  }
  return {};
}

answer_set truthful_in(const frame& f, const question& q) {
  if (q.kind() == question_kind::restricted) {
    const answer_set a = instantiate(f, q);
    const frame reply = f.with_restriction(&a);
    return raw_truthful(reply, q) & a;
  }
  return raw_truthful(f, q) & f.permissible();
}

answer_set liar_support(const frame& f, const question& q, const answer_set& truthful) {
  const answer_set& p = f.permissible();
  struct visitor {
    const frame& f;
    const question& q;
    const answer_set& truthful;
    const answer_set& p;

    answer_set operator()(const full_support&) const { return p - truthful; }

    answer_set operator()(const fixed_rule& rule) const {
      const auto t = truthful.single();
      if (!t) {
        throw eval_error(eval_failure::fixed_rule_undefined, q,
                         "truthful set " + truthful.to_string() + " is not a singleton");
      }
      const auto image = rule.apply(*t);
      if (image && p.contains(*image)) return answer_set{*image};
      // Inside a restriction the prescribed set dominates the rule.
      if (f.restriction) return p - truthful;
      throw eval_error(eval_failure::fixed_rule_out_of_range, q,
                       "f(" + std::to_string(*t) + ") " +
                           (image ? "= " + std::to_string(*image) + " is outside the space"
                                  : "is undefined"));
    }

    answer_set operator()(const adversarial&) const {
      if (!f.base.strat) {
        throw eval_error(eval_failure::strategy_required, q, "no strategy bound");
      }
      const auto v = f.base.strat->lookup(q);
      if (!v) throw eval_error(eval_failure::strategy_required, q, "question not bound");
      if (!p.contains(*v) || truthful.contains(*v)) {
        throw eval_error(eval_failure::inconsistent_strategy, q,
                         "bound answer " + std::to_string(*v) + " is not a permissible lie");
      }
      return answer_set{*v};
    }
  };
  return std::visit(visitor{f, q, truthful, p}, f.base.model);
}

answer_set support(const frame& f, const question& q) {
  std::optional<answer_set> a;
  if (q.kind() == question_kind::restricted) a = instantiate(f, q);
  const frame reply = a ? f.with_restriction(&*a) : f;
  const answer_set truthful = (a ? raw_truthful(reply, q) & *a
                                 : raw_truthful(reply, q) & reply.permissible());
  if (reply.agent_role() == role::truth_teller) {
    if (truthful.empty()) {
      throw eval_error(eval_failure::stuck_respondent, q, "no permissible true answer");
    }
    return truthful;
  }
  answer_set out = liar_support(reply, q, truthful);
  if (out.empty()) {
    throw eval_error(eval_failure::stuck_liar, q,
                     "no permissible false answer in " + reply.permissible().to_string());
  }
  return out;
}

frame root_frame(const eval_context& ctx) {
  return {ctx, ctx.respondent, ctx.hypothetical,
          ctx.restriction ? &*ctx.restriction : nullptr};
}

}  // namespace

answer_set truthful_set(const eval_context& ctx, const question& q) {
  return truthful_in(root_frame(ctx), q);
}

answer_set response_support(const eval_context& ctx, const question& q) {
  return support(root_frame(ctx), q);
}

std::vector<node_frame> evaluation_frames(const eval_context& ctx, const question& q) {
  std::vector<node_frame> frames;
  eval_context cur = ctx;
  for (const question* node = &q;; node = &node->inner()) {
    std::optional<answer_set> a;
    if (node->kind() == question_kind::restricted) {
      a = instantiate(root_frame(cur), *node);
    }
    node_frame nf{*node, cur, a ? *a : cur.permissible()};
    frames.push_back(nf);
    if (node->is_leaf()) break;

    if (a) cur.restriction = *a;
    switch (node->kind()) {
      case question_kind::ask_other:
        if (cur.roles.guard_count() != 2) {
          throw eval_error(eval_failure::arity, *node,
                           "asking about the other guard needs exactly 2 guards");
        }
        cur.respondent = 1 - cur.respondent;
        cur.hypothetical = false;
        break;
      case question_kind::opposite_avoids:
        cur.hypothetical = !cur.hypothetical;
        break;
      default:
        break;
    }
  }
  std::reverse(frames.begin(), frames.end());
  return frames;
}

answer_set self_reference_step(const eval_context& ctx, const answer_set& r) {
  const answer_set& p = ctx.permissible();
  const answer_set own = r & p;
  if (ctx.respondent_role() == role::truth_teller) return own;
  if (is_adversarial(ctx.model)) {
    throw std::invalid_argument(
        "adversarial self-reference is analysed by strategy enumeration");
  }
  if (const auto* rule = std::get_if<fixed_rule>(&ctx.model)) {
    if (const auto t = own.single()) {
      const auto image = rule->apply(*t);
      if (image && p.contains(*image)) return answer_set{*image};
    }
  }
  return p - own;
}

fixpoint_report solve_self_reference(const eval_context& ctx) {
  const answer_set& p = ctx.permissible();
  const answer_set empty;
  auto step = [&](const answer_set& r) { return self_reference_step(ctx, r); };

  const answer_set from_top = step(p);
  const answer_set from_bottom = step(empty);

  if (ctx.respondent_role() == role::truth_teller) {
    // F is the identity: both iterations stop immediately at distinct fixpoints.
    if (from_top == p && from_bottom == empty) {
      return underdetermined{"identity map; every subset is a fixpoint", empty, p};
    }
    return unique_fixpoint{from_bottom};
  }

  // A liar's reply set is disjoint from its argument, so only the empty set
  // can be fixed.
  if (from_bottom.empty()) return unique_fixpoint{empty};
  if (step(from_top) == p) return no_fixpoint{p, from_top};
  return no_fixpoint{empty, from_bottom};
}

std::string to_string(const fixpoint_report& r, const answer_set& permissible,
                      const std::string& permissible_name) {
  auto name = [&](const answer_set& s) {
    if (s.empty()) return std::string("∅");
    if (s == permissible) return permissible_name;
    return s.to_string();
  };
  if (const auto* u = std::get_if<unique_fixpoint>(&r)) {
    return "UNIQUE FIXPOINT: " + name(u->solution);
  }
  if (const auto* u = std::get_if<underdetermined>(&r)) {
    if (u->least.empty() && u->greatest == permissible) {
      return "UNDERDETERMINED: every subset of " + permissible_name + " is a fixpoint (2^" +
             std::to_string(permissible.size()) + " candidates)";
    }
    return "UNDERDETERMINED: " + u->description;
  }
  const auto& n = std::get<no_fixpoint>(r);
  return "NO FIXPOINT: oscillates between " + name(n.first) + " and " + name(n.second);
}

}  // namespace guardprompt
