#pragma once

// Line-oriented scenario files:
//
//   # comment
//   space=0..100
//   guards=2
//   roles=exactly-one-each        # or: any
//   liar=full_support             # or: fixed(+10), adversarial
//   prompt="could(weight)"
//   seed=7
//   budget=1

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "guardprompt/core.hpp"
#include "guardprompt/question.hpp"

namespace guardprompt {

class file_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class field_error : public std::runtime_error {
 public:
  field_error(std::size_t line, std::string key, std::string reason);

  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] const std::string& key() const { return key_; }
  [[nodiscard]] const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::string key_;
  std::string reason_;
};

struct scenario {
  answer_space space = make_space(0, 1);
  std::size_t guard_count = 2;
  roles_mode mode = roles_mode::exactly_one_each;
  liar_model liar = full_support{};
  std::string liar_spec = "full_support";
  std::optional<question> prompt;
  std::optional<std::uint64_t> seed;
  std::size_t budget = 1;
};

// Parses a liar spec (full_support | fixed(<+/-int>) | adversarial) against
// the space. Throws std::invalid_argument with the reason.
liar_model parse_liar(const std::string& spec, const answer_space& space);

// Throws field_error carrying the offending line (line 1 for missing keys).
scenario parse_scenario(const std::string& text);

// Throws file_error when the file cannot be read, otherwise as parse_scenario.
scenario load_scenario(const std::filesystem::path& path);

}  // namespace guardprompt
