#include <doctest.h>

#include <random>

#include "guardprompt/semantics.hpp"

using namespace guardprompt;

namespace {

struct random_context {
  std::vector<value_t> values;
  std::map<value_t, value_t> rule;  // fixed-rule table, unused under full support
  bool full = true;
  value_t w = 0;
  role_assignment roles;
  std::size_t respondent = 0;
  question q = question::direct();
};

question random_question(std::mt19937& rng, int depth, const std::vector<value_t>& values,
                         bool templates) {
  std::uniform_int_distribution<int> pick(0, templates ? 5 : 4);
  const int k = depth == 0 ? 0 : pick(rng);
  if (k == 0) return question::direct();
  const question inner = random_question(rng, depth - 1, values, templates);
  switch (k) {
    case 1: return question::other(inner);
    case 2: return question::you(inner);
    case 3: return question::could(inner);
    case 4: return question::avoid(inner);
    default: {
      std::uniform_int_distribution<int> coin(0, 1);
      if (coin(rng)) {
        std::uniform_int_distribution<value_t> d(1, 3);
        return question::restrict(offset_pair{coin(rng) ? d(rng) : -d(rng)}, inner);
      }
      std::uniform_int_distribution<std::size_t> i(0, values.size() - 1);
      return question::restrict(const_pair{values[i(rng)]}, inner);
    }
  }
}

random_context draw(std::mt19937& rng, bool templates) {
  random_context c;
  std::uniform_int_distribution<value_t> size(2, 7);
  const value_t n = size(rng);
  std::uniform_int_distribution<value_t> gap(1, 3);
  value_t next = std::uniform_int_distribution<value_t>(-5, 5)(rng);
  for (value_t i = 0; i < n; ++i) {
    c.values.push_back(next);
    next += templates ? 1 : gap(rng);
  }
  std::uniform_int_distribution<std::size_t> idx(0, c.values.size() - 1);
  for (value_t x : c.values) {
    value_t y = x;
    while (y == x) y = c.values[idx(rng)];
    c.rule[x] = y;
  }
  c.full = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
  c.w = c.values[idx(rng)];
  const bool tl = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
  c.roles = tl ? role_assignment{{role::truth_teller, role::liar}}
               : role_assignment{{role::liar, role::truth_teller}};
  c.respondent = std::uniform_int_distribution<std::size_t>(0, 1)(rng);
  c.q = random_question(rng, std::uniform_int_distribution<int>(0, 3)(rng), c.values, templates);
  return c;
}

eval_context to_ctx(const answer_space& s, const random_context& c) {
  const liar_model m = c.full ? liar_model{full_support{}} : liar_model{fixed_rule::from_table(c.rule)};
  return eval_context{s, world{c.w}, c.roles, m, c.respondent, false, std::nullopt, nullptr};
}

struct evaluated {
  answer_set truthful;
  answer_set support;
  answer_set reply;
};

std::optional<evaluated> evaluate(const eval_context& ctx, const question& q) {
  try {
    const auto frames = evaluation_frames(ctx, q);
    return evaluated{truthful_set(ctx, q), response_support(ctx, q), frames.back().reply_set};
  } catch (const eval_error&) {
    return std::nullopt;
  }
}

}  // namespace

TEST_CASE("semantic invariants over 1000 random contexts") {
  std::mt19937 rng(20240601);
  std::size_t defined = 0;
  std::size_t liar_checks = 0;
  std::size_t full_checks = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto c = draw(rng, true);
    const answer_space s(c.values);
    const auto ctx = to_ctx(s, c);
    const auto e = evaluate(ctx, c.q);
    // Purity: a second evaluation agrees, including on failure.
    const auto again = evaluate(ctx, c.q);
    REQUIRE(e.has_value() == again.has_value());
    if (!e) continue;
    ++defined;
    CHECK(e->support == again->support);
    CHECK(e->truthful == again->truthful);
    CHECK(e->support.is_subset_of(e->reply));
    CHECK(e->truthful.is_subset_of(e->reply));

    if (ctx.respondent_role() == role::truth_teller) {
      CHECK(e->support == e->truthful);
    } else {
      ++liar_checks;
      CHECK((e->support & e->truthful).empty());
      if (c.full) {
        ++full_checks;
        CHECK((e->support | e->truthful) == e->reply);
      }
    }
    if (e->reply.size() == 2 && e->truthful.size() == 1) CHECK(e->support.size() == 1);
  }
  CHECK(defined >= 500);
  CHECK(liar_checks >= 200);
  CHECK(full_checks >= 100);
}

TEST_CASE("relabeling commutes with evaluation for template-free prompts") {
  std::mt19937 rng(77);
  std::size_t defined = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto c = draw(rng, false);
    // Random bijection onto fresh values.
    std::vector<value_t> image(c.values.size());
    for (std::size_t i = 0; i < image.size(); ++i) image[i] = 100 + 3 * static_cast<value_t>(i);
    std::shuffle(image.begin(), image.end(), rng);
    std::map<value_t, value_t> g;
    for (std::size_t i = 0; i < image.size(); ++i) g[c.values[i]] = image[i];
    auto map_set = [&](const answer_set& a) {
      std::vector<value_t> out;
      for (value_t x : a.values()) out.push_back(g.at(x));
      return answer_set(out);
    };

    random_context d = c;
    std::sort(image.begin(), image.end());
    d.values = image;
    d.w = g.at(c.w);
    d.rule.clear();
    for (const auto& [x, y] : c.rule) d.rule[g.at(x)] = g.at(y);

    const auto before = evaluate(to_ctx(answer_space(c.values), c), c.q);
    const auto after = evaluate(to_ctx(answer_space(d.values), d), d.q);
    REQUIRE(before.has_value() == after.has_value());
    if (!before) continue;
    ++defined;
    CHECK(map_set(before->truthful) == after->truthful);
    CHECK(map_set(before->support) == after->support);
  }
  CHECK(defined >= 500);
}
