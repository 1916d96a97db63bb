#include <doctest.h>

#include <map>

#include "guardprompt/adversary.hpp"
#include "guardprompt/semantics.hpp"
#include "guardprompt/verifier.hpp"

using namespace guardprompt;

namespace {

// Every (world, answer) pair the asked guard can produce, rebuilt from the
// semantics and the full strategy enumeration. Empty optional on any stuck
// or erroring triple.
std::optional<std::vector<std::pair<value_t, value_t>>> replay(const answer_space& s,
                                                               const liar_model& m,
                                                               const question& q,
                                                               const verify_options& o,
                                                               const std::vector<value_t>& worlds) {
  std::vector<std::pair<value_t, value_t>> out;
  try {
    for (value_t w : worlds) {
      for (const auto& roles : enumerate_assignments(o.guard_count, o.mode)) {
        if (is_adversarial(m)) {
          const auto all = enumerate_strategies(s, world{w}, roles, q, o.asked_guard);
          if (all.empty()) return std::nullopt;
          for (const auto& st : all) {
            const eval_context ctx{s, world{w}, roles, m, o.asked_guard, false, std::nullopt, &st};
            const auto support = response_support(ctx, q);
            for (value_t a : support.values()) out.emplace_back(w, a);
          }
        } else {
          const eval_context ctx{s, world{w}, roles, m, o.asked_guard, false, std::nullopt, nullptr};
          const auto support = response_support(ctx, q);
          for (value_t a : support.values()) out.emplace_back(w, a);
        }
      }
    }
  } catch (const eval_error&) {
    return std::nullopt;
  }
  return out;
}

// Winning iff the replayed pairs define a function from answers to worlds.
bool replay_winning(const answer_space& s, const liar_model& m, const question& q,
                    const verify_options& o, const std::vector<value_t>& worlds) {
  const auto pairs = replay(s, m, q, o, worlds);
  if (!pairs || worlds.empty()) return false;
  std::map<value_t, value_t> seen;
  for (const auto& [w, a] : *pairs) {
    auto [it, fresh] = seen.emplace(a, w);
    if (!fresh && it->second != w) return false;
  }
  return true;
}

void check_sound(const answer_space& s, const liar_model& m, const question& q,
                 const verify_options& o = {}) {
  const verdict v = verify(s, m, q, o);
  const auto pairs = replay(s, m, q, o, v.domain.valid);
  if (v.is_winning()) {
    REQUIRE(pairs);
    for (const auto& [w, a] : *pairs) CHECK(v.win()->dec.decode(a) == w);
  }
  if (const auto* c = v.cex()) {
    if (const auto* col = std::get_if<collision>(c)) {
      CHECK(col->first.world != col->second.world);
      CHECK(col->first.answer == col->answer);
      CHECK(col->second.answer == col->answer);
      for (const auto* o2 : {&col->first, &col->second}) {
        const strategy* st = o2->behavior ? &*o2->behavior : nullptr;
        const eval_context ctx{s, world{o2->world}, o2->assignment, m, o.asked_guard, false,
                               std::nullopt, st};
        CHECK(response_support(ctx, q).contains(col->answer));
      }
    }
  }
  if (!v.is_invalid()) {
    CHECK(v.is_winning() == replay_winning(s, m, q, o, v.domain.valid));
  }
}

}  // namespace

TEST_CASE("fixed rule relay across the other guard") {
  const auto s = make_space(0, 100);
  const verdict v = verify(s, fixed_rule::offset(10, s), parse("other(weight)"));
  REQUIRE(v.is_winning());
  CHECK(v.win()->dec.closed_form() == "answer - 10");
  CHECK(v.win()->outcome_count == 91 * 2);
  CHECK(v.domain.valid.front() == 0);
  CHECK(v.domain.valid.back() == 90);
  CHECK(v.domain.excluded.size() == 10);
  CHECK(decode(v.win()->dec, 80) == 70);
  CHECK_THROWS_AS(decode(v.win()->dec, 5), unknown_answer);
}

TEST_CASE("could(weight) under full support") {
  const auto s = make_space(0, 100);
  const verdict v = verify(s, full_support{}, parse("could(weight)"));
  REQUIRE(v.is_winning());
  CHECK(v.win()->dec.closed_form() == "identity");
  CHECK(v.win()->outcome_count == 202);
  CHECK(decode(v.win()->dec, 42) == 42);
  const auto events =
      enumerate_outcomes(s, full_support{}, parse("could(weight)"), {}, v.domain);
  CHECK(events.size() == 202);
  for (const auto& e : events) {
    const auto& o = std::get<outcome>(e);
    CHECK(o.answer == o.world);
  }
}

TEST_CASE("adversarial you(weight) collides") {
  const auto s = make_space(0, 2);
  const verdict v = verify(s, adversarial{}, parse("you(weight)"));
  REQUIRE(v.cex());
  const auto& col = std::get<collision>(*v.cex());
  // The liar's outer answer differs from both w and its own inner lie w'.
  const outcome& liar_side =
      col.first.assignment.at(0) == role::liar ? col.first : col.second;
  REQUIRE(liar_side.behavior);
  const value_t inner = *liar_side.behavior->lookup(parse("weight"));
  CHECK(col.answer != liar_side.world);
  CHECK(col.answer != inner);
  CHECK(kind_name(*v.cex()) == "collision");
  check_sound(s, adversarial{}, parse("you(weight)"));
}

TEST_CASE("classical binary puzzle") {
  const verdict v = verify(make_space(0, 1), full_support{}, parse("other(weight)"));
  REQUIRE(v.is_winning());
  CHECK(v.win()->dec.closed_form() == "1 - answer");
  CHECK(v.win()->dec.table() == std::map<value_t, value_t>{{0, 1}, {1, 0}});
}

TEST_CASE("restricted prompts win under every liar model") {
  const auto s = make_space(0, 100);
  for (const liar_model& m : {liar_model{full_support{}}, liar_model{adversarial{}},
                              liar_model{fixed_rule::offset(10, s)}}) {
    const verdict v = verify(s, m, parse("restrict({w,w+10}, weight)"));
    REQUIRE(v.is_winning());
    CHECK(v.win()->dec.closed_form() == "identity");
    CHECK(v.domain.valid.size() == 91);
  }
  const verdict c = verify(s, full_support{}, parse("restrict({0,w}, weight)"));
  REQUIRE(c.is_winning());
  REQUIRE(c.domain.excluded.size() == 1);
  CHECK(c.domain.excluded[0].world == 0);
}

TEST_CASE("verifier errors and invalid verdicts") {
  const auto s = make_space(0, 3);
  CHECK_THROWS_AS(verify(s, full_support{}, question::could_self()), self_reference_unsupported);
  CHECK_THROWS_AS(verify(s, full_support{}, parse("other(could(self))")),
                  self_reference_unsupported);
  CHECK_THROWS_AS(verify(make_space(4, 4), full_support{}, parse("weight")), validation_error);
  CHECK_THROWS_AS(verify(s, full_support{}, parse("weight"), {roles_mode::any, 2, 2}),
                  validation_error);
  CHECK_THROWS_AS(verify(s, full_support{}, parse("weight"),
                         {roles_mode::exactly_one_each, 3, 0}),
                  validation_error);
  CHECK(verify(make_space(1, 3), full_support{}, parse("restrict({0,w}, weight)")).is_invalid());
  CHECK(verify(s, full_support{}, parse("other(weight)"), {roles_mode::any, 3, 0}).is_invalid());
}

TEST_CASE("stuck triples surface as counterexamples") {
  // A liar confined to {w} by a one-sided pair has no lie left.
  const auto s = make_space(0, 3);
  const verdict v = verify(s, adversarial{}, parse("restrict({w,w+1}, avoid(opposite, weight))"));
  if (const auto* c = v.cex()) {
    if (const auto* st = std::get_if<stuck>(c)) {
      CHECK(!st->reason.empty());
      CHECK(kind_name(*c) == "stuck");
    }
  }
  check_sound(s, adversarial{}, parse("restrict({w,w+1}, avoid(opposite, weight))"));
}

TEST_CASE("soundness and counterexample replay over the grammar") {
  const std::vector<set_template> templates{offset_pair{1}, const_pair{0}};
  const auto s = make_space(0, 3);
  const std::vector<liar_model> models{full_support{}, adversarial{},
                                       fixed_rule::from_table({{0, 1}, {1, 2}, {2, 3}, {3, 0}}),
                                       fixed_rule::offset(1, s)};
  for (const auto& q : enumerate_grammar(3, templates)) {
    if (q.contains_self_reference()) continue;
    for (const auto& m : models) {
      check_sound(s, m, q);
      check_sound(s, m, q, {roles_mode::exactly_one_each, 2, 1});
    }
  }
}

TEST_CASE("guard symmetry under exactly-one-each") {
  const std::vector<set_template> templates{offset_pair{1}};
  const auto s = make_space(0, 4);
  for (const auto& q : enumerate_grammar(3, templates)) {
    if (q.contains_self_reference()) continue;
    for (const liar_model& m : {liar_model{full_support{}}, liar_model{adversarial{}}}) {
      const verdict a = verify(s, m, q, {roles_mode::exactly_one_each, 2, 0});
      const verdict b = verify(s, m, q, {roles_mode::exactly_one_each, 2, 1});
      CHECK(a.is_winning() == b.is_winning());
      CHECK(a.is_invalid() == b.is_invalid());
      if (a.is_winning() && b.is_winning()) CHECK(a.win()->dec.table() == b.win()->dec.table());
    }
  }
}

TEST_CASE("n-guard extension") {
  const auto s = make_space(0, 100);
  const verdict v = verify(s, full_support{}, parse("could(weight)"), {roles_mode::any, 3, 0});
  REQUIRE(v.is_winning());
  CHECK(v.win()->outcome_count == 101 * 8);
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(verify(make_space(0, 5), full_support{}, parse("avoid(opposite, weight)"),
                 {roles_mode::any, n, n - 1})
              .is_winning());
  }
}

TEST_CASE("permutation equivariance for template-free prompts") {
  // Reversal x -> 4 - x and a rotation-like bijection expressed as a new space.
  const auto s = make_space(0, 4);
  const answer_space relabeled({-7, 2, 3, 11, 40});
  auto image = [](value_t x) {
    static const value_t map[] = {-7, 2, 3, 11, 40};
    return map[x];
  };
  for (const auto& q : enumerate_grammar(3, {})) {
    if (q.contains_self_reference()) continue;
    for (const liar_model& m : {liar_model{full_support{}}, liar_model{adversarial{}}}) {
      const verdict a = verify(s, m, q);
      const verdict b = verify(relabeled, m, q);
      REQUIRE(a.is_winning() == b.is_winning());
      if (a.is_winning()) {
        std::map<value_t, value_t> conjugated;
        for (const auto& [ans, w] : a.win()->dec.table()) conjugated[image(ans)] = image(w);
        CHECK(b.win()->dec.table() == conjugated);
      }
    }
  }
}

TEST_CASE("model ordering") {
  const auto s = make_space(0, 4);
  const liar_model cyclic = fixed_rule::from_table({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  for (const auto& templ : {set_template{offset_pair{1}}, set_template{offset_pair{10}}}) {
    const std::vector<set_template> templates{templ};
    for (const auto& q : enumerate_grammar(2, templates)) {
      if (q.contains_self_reference()) continue;
      const verdict adv = verify(s, adversarial{}, q);
      if (!adv.is_winning()) continue;
      CHECK(verify(s, full_support{}, q).is_winning());
      CHECK(verify(s, cyclic, q).is_winning());
    }
  }
  CHECK(verify(s, full_support{}, parse("could(weight)")).is_winning());
  CHECK_FALSE(verify(s, adversarial{}, parse("could(weight)")).is_winning());
}
