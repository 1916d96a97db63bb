#include "guardprompt/repl.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "guardprompt/adversary.hpp"
#include "guardprompt/domain.hpp"
#include "guardprompt/semantics.hpp"

namespace guardprompt {

namespace {

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& items) {
  std::uniform_int_distribution<std::size_t> dist(0, items.size() - 1);
  return items[dist(rng)];
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string unquote(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) {
    s = s.substr(1, s.size() - 2);
  }
  return std::string(s);
}

}  // namespace

session::session(const scenario& sc)
    : scenario_(sc), rng_(sc.seed.value_or(0)), remaining_(sc.budget) {
  std::vector<value_t> worlds = sc.space.values().values();
  if (sc.prompt && !sc.prompt->contains_self_reference()) {
    auto domain = valid_worlds(sc.space, sc.liar, *sc.prompt, sc.guard_count, sc.mode);
    if (!domain.valid.empty()) worlds = std::move(domain.valid);
  }
  world_ = pick(rng_, worlds);
  roles_ = pick(rng_, enumerate_assignments(sc.guard_count, sc.mode));
}

session::session(const scenario& sc, value_t hidden_world, role_assignment hidden_roles)
    : scenario_(sc),
      rng_(sc.seed.value_or(0)),
      world_(hidden_world),
      roles_(std::move(hidden_roles)),
      remaining_(sc.budget) {
  if (!sc.space.contains(hidden_world)) throw range_error("hidden world outside the space");
  if (roles_.guard_count() != sc.guard_count) {
    throw mode_error("hidden role assignment does not match the guard count");
  }
}

std::string session::banner() const {
  std::ostringstream os;
  os << "You face " << scenario_.guard_count << " guards (numbered 1.."
     << scenario_.guard_count << "). Permissible answers: " << scenario_.space.values().to_string()
     << ". Liar model: " << scenario_.liar_spec << ".\n"
     << "You may ask " << remaining_ << (remaining_ == 1 ? " question" : " questions")
     << ". Commands: ask <guard> <question> | guess <value> | reveal | help";
  return os.str();
}

repl_reply session::step(std::string_view input) {
  if (finished_) return {repl_status::finished, "the session is over"};
  input = trim(input);
  const auto space_at = input.find_first_of(" \t");
  const std::string_view command = input.substr(0, space_at);
  const std::string_view rest =
      space_at == std::string_view::npos ? std::string_view{} : trim(input.substr(space_at));

  if (command == "help") return {repl_status::bad_input, banner()};

  if (command == "reveal") {
    finished_ = true;
    return {repl_status::revealed, "hidden weight " + std::to_string(world_) + ", roles " +
                                       roles_.to_string()};
  }

  if (command == "guess") {
    value_t guess = 0;
    const auto token = std::string(rest);
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), guess);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      return {repl_status::bad_input, "usage: guess <value>"};
    }
    finished_ = true;
    if (guess == world_) return {repl_status::correct, "correct"};
    return {repl_status::incorrect, "incorrect: the weight was " + std::to_string(world_)};
  }

  if (command == "ask") {
    const auto sep = rest.find_first_of(" \t");
    const std::string guard_text(rest.substr(0, sep));
    std::size_t guard = 0;
    auto [ptr, ec] =
        std::from_chars(guard_text.data(), guard_text.data() + guard_text.size(), guard);
    if (guard_text.empty() || ec != std::errc{} || ptr != guard_text.data() + guard_text.size() ||
        sep == std::string_view::npos) {
      return {repl_status::bad_input, "usage: ask <guard> <question>"};
    }
    if (guard == 0 || guard > scenario_.guard_count) {
      return {repl_status::bad_input,
              "no guard " + guard_text + " (guards are 1.." +
                  std::to_string(scenario_.guard_count) + ")"};
    }
    return ask(guard, unquote(rest.substr(sep)));
  }
  return {repl_status::bad_input, "unknown command; try help"};
}

repl_reply session::ask(std::size_t guard, const std::string& text) {
  if (remaining_ == 0) {
    return {repl_status::budget_exhausted, "budget exhausted: no questions left, make a guess"};
  }
  question q = question::direct();
  try {
    q = parse(text);
  } catch (const parse_error& e) {
    return {repl_status::parse_error, std::string(e.what()) + "\n  " + text + "\n  " +
                                          std::string(e.offset(), ' ') + "^"};
  }
  if (q.contains_self_reference() && q.kind() != question_kind::could_provide_self) {
    return {repl_status::bad_input, "nested could(self) cannot be asked in play"};
  }

  --remaining_;
  const std::size_t index = guard - 1;
  const eval_context ctx{scenario_.space, world{world_}, roles_, scenario_.liar, index,
                         false, std::nullopt, nullptr};
  answer_set support;
  std::string stuck_reason;
  try {
    if (q.kind() == question_kind::could_provide_self) {
      if (roles_.at(index) == role::liar) {
        stuck_reason = "a liar has no consistent answer to could(self)";
      } else {
        // Every subset is a consistent reply set, so any permissible value is.
        support = scenario_.space.values();
      }
    } else if (is_adversarial(scenario_.liar)) {
      for (const auto& branch : explore_behaviors(scenario_.space, world{world_}, roles_, q, index)) {
        if (branch.root_support) {
          support = support | *branch.root_support;
        } else if (stuck_reason.empty()) {
          stuck_reason = branch.stuck_reason;
        }
      }
    } else {
      support = response_support(ctx, q);
    }
  } catch (const eval_error& e) {
    stuck_reason = e.what();
  }

  if (support.empty()) {
    transcript_.push_back({guard, print(q), std::nullopt});
    return {repl_status::stuck, "guard " + std::to_string(guard) +
                                    " cannot answer: " + stuck_reason};
  }
  const value_t answer = pick(rng_, support.values());
  transcript_.push_back({guard, print(q), answer});
  return {repl_status::answered, "guard " + std::to_string(guard) + " says " +
                                     std::to_string(answer)};
}

}  // namespace guardprompt
