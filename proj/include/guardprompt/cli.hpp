#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "guardprompt/core.hpp"
#include "guardprompt/scenario.hpp"

namespace guardprompt {

enum class output_format { human, machine };

struct cli_flags {
  output_format format = output_format::human;
  std::size_t max_depth = 2;
  std::optional<value_t> world;
  std::size_t asked_guard = 0;
  std::vector<set_template> templates;  // synth only
};

namespace exit_code {
inline constexpr int success = 0;
inline constexpr int not_winning = 1;
inline constexpr int error = 2;
}  // namespace exit_code

// Runs verify | eval | synth | fixpoint | play against a loaded scenario.
// Reports go to `out`, diagnostics to `err`; play reads commands from `in`.
int run(const std::string& command, const scenario& sc, const cli_flags& flags,
        std::istream& in, std::ostream& out, std::ostream& err);

// Parses one setspec such as "{w,w+10}" or "{0,w}".
set_template parse_template(const std::string& text);

}  // namespace guardprompt
