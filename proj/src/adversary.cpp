#include "guardprompt/adversary.hpp"

#include <algorithm>
#include <set>

namespace guardprompt {

std::string strategy::to_string() const {
  std::vector<std::pair<question, value_t>> entries(assignment_.begin(), assignment_.end());
  std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return a.first.depth() < b.first.depth();
  });
  std::string out;
  for (const auto& [q, v] : entries) {
    if (!out.empty()) out += ", ";
    out += "sigma(" + print(q) + ")=" + std::to_string(v);
  }
  return out.empty() ? "no liar choices" : out;
}

namespace {

std::vector<node_frame> frames_for(const answer_space& space, world w,
                                   const role_assignment& roles, const question& prompt,
                                   std::size_t asked) {
  const eval_context ctx{space, w, roles, adversarial{}, asked, false, std::nullopt, nullptr};
  return evaluation_frames(ctx, prompt);
}

bool is_stuck(const eval_error& e) {
  return e.failure() == eval_failure::stuck_liar ||
         e.failure() == eval_failure::stuck_respondent;
}

void extend(const std::vector<node_frame>& frames, std::size_t k, const strategy& partial,
            std::vector<strategy>& out) {
  if (k == frames.size()) {
    out.push_back(partial);
    return;
  }
  const node_frame& nf = frames[k];
  eval_context ctx = nf.ctx;
  ctx.strat = &partial;
  const bool self_ref = nf.node.kind() == question_kind::could_provide_self;

  if (ctx.respondent_role() == role::truth_teller) {
    if (self_ref) {
      throw eval_error(eval_failure::self_reference, nf.node,
                       "truth-teller reply to could(self) is underdetermined");
    }
    extend(frames, k + 1, partial, out);
    return;
  }
  // A liar's answer to could(self) would have to differ from itself.
  if (self_ref) return;

  answer_set truthful;
  try {
    truthful = truthful_set(ctx, nf.node);
  } catch (const eval_error& e) {
    if (is_stuck(e)) return;
    throw;
  }
  for (value_t v : nf.reply_set - truthful) {
    strategy next = partial;
    next.bind(nf.node, v);
    extend(frames, k + 1, next, out);
  }
}

struct pending {
  strategy witness;
  std::vector<value_t> key;
  answer_set support;
};

}  // namespace

std::vector<strategy> enumerate_strategies(const answer_space& space, world w,
                                           const role_assignment& roles, const question& prompt,
                                           std::size_t asked) {
  const auto frames = frames_for(space, w, roles, prompt, asked);
  std::vector<strategy> out;
  extend(frames, 0, strategy{}, out);
  return out;
}

bool is_consistent(const strategy& s, const answer_space& space, world w,
                   const role_assignment& roles, const question& prompt, std::size_t asked) {
  try {
    const auto frames = frames_for(space, w, roles, prompt, asked);
    std::size_t liar_nodes = 0;
    for (const auto& nf : frames) {
      eval_context ctx = nf.ctx;
      ctx.strat = &s;
      const auto bound = s.lookup(nf.node);
      if (ctx.respondent_role() == role::truth_teller) {
        if (bound) return false;
        continue;
      }
      ++liar_nodes;
      if (!bound || nf.node.kind() == question_kind::could_provide_self) return false;
      if (!nf.reply_set.contains(*bound)) return false;
      if (truthful_set(ctx, nf.node).contains(*bound)) return false;
    }
    return liar_nodes == s.size();
  } catch (const eval_error&) {
    return false;
  }
}

std::vector<behavior_branch> explore_behaviors(const answer_space& space, world w,
                                               const role_assignment& roles,
                                               const question& prompt, std::size_t asked) {
  const auto frames = frames_for(space, w, roles, prompt, asked);
  std::vector<std::pair<std::vector<value_t>, behavior_branch>> done;
  std::vector<pending> states{pending{}};

  for (const node_frame& nf : frames) {
    std::vector<pending> next;
    std::set<answer_set> seen;
    auto stuck = [&](const pending& p, std::string reason) {
      done.emplace_back(p.key, behavior_branch{p.witness, std::nullopt, nf.node, std::move(reason)});
    };
    const bool self_ref = nf.node.kind() == question_kind::could_provide_self;

    for (const pending& p : states) {
      eval_context ctx = nf.ctx;
      ctx.strat = &p.witness;
      const bool liar = ctx.respondent_role() == role::liar;
      if (self_ref) {
        if (!liar) {
          throw eval_error(eval_failure::self_reference, nf.node,
                           "truth-teller reply to could(self) is underdetermined");
        }
        stuck(p, "no answer to could(self) differs from itself");
        continue;
      }
      const answer_set truthful = truthful_set(ctx, nf.node);
      if (!liar) {
        if (truthful.empty()) {
          stuck(p, "no permissible true answer");
        } else if (seen.insert(truthful).second) {
          next.push_back(pending{p.witness, p.key, truthful});
        }
        continue;
      }
      const answer_set lies = nf.reply_set - truthful;
      if (lies.empty()) {
        stuck(p, "no permissible false answer in " + nf.reply_set.to_string());
        continue;
      }
      for (value_t v : lies) {
        const answer_set chosen{v};
        if (!seen.insert(chosen).second) continue;
        pending q{p.witness, p.key, chosen};
        q.witness.bind(nf.node, v);
        q.key.push_back(v);
        next.push_back(std::move(q));
      }
    }
    states = std::move(next);
  }
  for (auto& p : states) {
    done.emplace_back(std::move(p.key),
                      behavior_branch{std::move(p.witness), std::move(p.support), std::nullopt, {}});
  }
  // Prefixes sort before their extensions, matching depth-first order.
  std::stable_sort(done.begin(), done.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<behavior_branch> out;
  out.reserve(done.size());
  for (auto& [key, branch] : done) out.push_back(std::move(branch));
  return out;
}

}  // namespace guardprompt
