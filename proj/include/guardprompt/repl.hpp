#pragma once

// Interactive play: a human interrogates simulated guards.

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "guardprompt/core.hpp"
#include "guardprompt/scenario.hpp"

namespace guardprompt {

enum class repl_status {
  answered,
  stuck,             // the asked guard cannot answer; shown as an in-game event
  budget_exhausted,
  parse_error,
  bad_input,
  correct,
  incorrect,
  revealed,
  finished,          // session already over
};

struct repl_reply {
  repl_status status;
  std::string text;
};

struct transcript_entry {
  std::size_t guard;  // 1-based, as typed
  std::string question;
  std::optional<value_t> answer;  // empty when the guard was stuck

  friend bool operator==(const transcript_entry&, const transcript_entry&) = default;
};

class session {
 public:
  // Draws the hidden world and role assignment from the scenario's seed
  // (seed 0 when the scenario has none).
  explicit session(const scenario& sc);
  session(const scenario& sc, value_t hidden_world, role_assignment hidden_roles);

  // Accepts "ask <guard> <question>", "guess <value>", "reveal" and "help".
  repl_reply step(std::string_view input);

  [[nodiscard]] bool finished() const { return finished_; }
  [[nodiscard]] std::size_t remaining() const { return remaining_; }
  [[nodiscard]] const std::vector<transcript_entry>& transcript() const { return transcript_; }
  [[nodiscard]] value_t hidden_world() const { return world_; }
  [[nodiscard]] const role_assignment& hidden_roles() const { return roles_; }
  [[nodiscard]] std::string banner() const;

 private:
  repl_reply ask(std::size_t guard, const std::string& text);

  scenario scenario_;
  std::mt19937_64 rng_;
  value_t world_ = 0;
  role_assignment roles_;
  std::size_t remaining_;
  bool finished_ = false;
  std::vector<transcript_entry> transcript_;
};

}  // namespace guardprompt
