#pragma once

// Decides whether a prompt is winning: whether one decoder recovers the
// hidden weight from the asked guard's answer across every valid world, role
// assignment and consistent liar behaviour.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "guardprompt/core.hpp"
#include "guardprompt/domain.hpp"
#include "guardprompt/question.hpp"
#include "guardprompt/strategy.hpp"

namespace guardprompt {

struct validation_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// could(self) has no single evaluation; use solve_self_reference.
struct self_reference_unsupported : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct unknown_answer : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct verify_options {
  roles_mode mode = roles_mode::exactly_one_each;
  std::size_t guard_count = 2;
  std::size_t asked_guard = 0;
};

struct outcome {
  value_t world;
  role_assignment assignment;
  std::optional<strategy> behavior;  // adversarial witness strategy
  value_t answer;

  [[nodiscard]] std::string to_string() const;
};

struct collision {
  value_t answer;
  outcome first;   // earlier outcome in enumeration order
  outcome second;  // first outcome whose answer was already claimed by another world
};

struct stuck {
  value_t world;
  role_assignment assignment;
  std::optional<strategy> behavior;
  question at;
  std::string reason;
};

using counterexample = std::variant<collision, stuck>;

class decoder {
 public:
  decoder() = default;
  explicit decoder(std::map<value_t, value_t> table) : table_(std::move(table)) {}

  // Throws unknown_answer when the answer was never realizable.
  [[nodiscard]] value_t decode(value_t answer) const;
  [[nodiscard]] const std::map<value_t, value_t>& table() const { return table_; }
  // "identity", "answer - 10", "1 - answer", or "table".
  [[nodiscard]] std::string closed_form() const;

 private:
  std::map<value_t, value_t> table_;
};

inline value_t decode(const decoder& d, value_t answer) { return d.decode(answer); }

struct winning {
  decoder dec;
  std::size_t outcome_count = 0;
};
struct not_winning {
  counterexample cex;
};
struct invalid {
  std::string reason;
};

struct verdict {
  std::variant<winning, not_winning, invalid> result;
  world_domain domain;
  // Assumptions the verdict rests on.
  std::vector<std::string> assumptions;

  [[nodiscard]] bool is_winning() const { return std::holds_alternative<winning>(result); }
  [[nodiscard]] bool is_invalid() const { return std::holds_alternative<invalid>(result); }
  [[nodiscard]] const winning* win() const { return std::get_if<winning>(&result); }
  [[nodiscard]] const counterexample* cex() const {
    const auto* n = std::get_if<not_winning>(&result);
    return n ? &n->cex : nullptr;
  }
};

// One enumerated event: an outcome or a stuck triple.
using outcome_event = std::variant<outcome, stuck>;

// All events in deterministic order: worlds ascending, assignments in
// enumeration order, behaviours in enumeration order, answers ascending.
// Throws validation_error / self_reference_unsupported like verify.
std::vector<outcome_event> enumerate_outcomes(const answer_space& space, const liar_model& model,
                                              const question& prompt,
                                              const verify_options& options,
                                              const world_domain& domain);

verdict verify(const answer_space& space, const liar_model& model, const question& prompt,
               const verify_options& options = {});

std::string to_string(const counterexample& c);
std::string kind_name(const counterexample& c);

}  // namespace guardprompt
