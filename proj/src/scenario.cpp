#include "guardprompt/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace guardprompt {

field_error::field_error(std::size_t line, std::string key, std::string reason)
    : std::runtime_error("line " + std::to_string(line) + ": " +
                         (key.empty() ? "" : "'" + key + "': ") + reason),
      line_(line),
      key_(std::move(key)),
      reason_(std::move(reason)) {}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

template <typename T>
std::optional<T> to_number(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

struct raw_field {
  std::size_t line;
  std::string value;
};

}  // namespace

liar_model parse_liar(const std::string& spec, const answer_space& space) {
  if (spec == "full_support") return full_support{};
  if (spec == "adversarial") return adversarial{};
  if (spec.size() > 7 && spec.rfind("fixed(", 0) == 0 && spec.back() == ')') {
    const auto delta = to_number<value_t>(std::string_view(spec).substr(6, spec.size() - 7));
    if (!delta) throw std::invalid_argument("fixed(...) needs an integer offset");
    if (*delta == 0) throw std::invalid_argument("fixed rule must change the answer");
    return fixed_rule::offset(*delta, space);
  }
  throw std::invalid_argument("expected full_support, fixed(<+/-int>) or adversarial");
}

scenario parse_scenario(const std::string& text) {
  static const char* const known[] = {"space", "guards", "roles", "liar",
                                      "prompt", "seed", "budget"};
  std::map<std::string, raw_field> fields;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = trim(strip_comment(line));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw field_error(lineno, "", "expected key=value");
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      throw field_error(lineno, key, "unknown key");
    }
    if (!fields.emplace(key, raw_field{lineno, value}).second) {
      throw field_error(lineno, key, "duplicate key");
    }
  }

  auto require = [&](const char* key) -> const raw_field& {
    auto it = fields.find(key);
    if (it == fields.end()) throw field_error(1, key, "required");
    return it->second;
  };

  scenario sc;
  {
    const raw_field& f = require("space");
    const auto dots = f.value.find("..");
    if (dots == std::string::npos) throw field_error(f.line, "space", "expected <lo>..<hi>");
    const auto lo = to_number<value_t>(trim(f.value.substr(0, dots)));
    const auto hi = to_number<value_t>(trim(f.value.substr(dots + 2)));
    if (!lo || !hi) throw field_error(f.line, "space", "bounds must be integers");
    if (*lo > *hi) throw field_error(f.line, "space", "lower bound exceeds upper bound");
    if (*hi - *lo > 100000) throw field_error(f.line, "space", "range too large to enumerate");
    sc.space = make_space(*lo, *hi);
    if (sc.space.size() < 2) throw field_error(f.line, "space", "needs at least 2 values");
  }
  {
    const raw_field& f = require("liar");
    sc.liar_spec = f.value;
    try {
      sc.liar = parse_liar(f.value, sc.space);
    } catch (const std::invalid_argument& e) {
      throw field_error(f.line, "liar", e.what());
    }
  }
  if (auto it = fields.find("guards"); it != fields.end()) {
    const auto n = to_number<std::size_t>(it->second.value);
    if (!n || *n == 0 || *n > 16) {
      throw field_error(it->second.line, "guards", "expected a count between 1 and 16");
    }
    sc.guard_count = *n;
  }
  if (auto it = fields.find("roles"); it != fields.end()) {
    if (it->second.value == "exactly-one-each") {
      sc.mode = roles_mode::exactly_one_each;
    } else if (it->second.value == "any") {
      sc.mode = roles_mode::any;
    } else {
      throw field_error(it->second.line, "roles", "expected exactly-one-each or any");
    }
  }
  if (sc.mode == roles_mode::exactly_one_each && sc.guard_count != 2) {
    const auto it = fields.find("roles");
    const std::size_t at = it != fields.end() ? it->second.line : fields.at("guards").line;
    throw field_error(at, "roles", "exactly-one-each requires guards=2");
  }
  if (auto it = fields.find("prompt"); it != fields.end()) {
    std::string text = it->second.value;
    if (text.size() >= 2 && text.front() == '"' && text.back() == '"') {
      text = text.substr(1, text.size() - 2);
    }
    try {
      sc.prompt = parse(text);
    } catch (const parse_error& e) {
      throw field_error(it->second.line, "prompt", e.what());
    }
  }
  if (auto it = fields.find("seed"); it != fields.end()) {
    const auto seed = to_number<std::uint64_t>(it->second.value);
    if (!seed) throw field_error(it->second.line, "seed", "expected a non-negative integer");
    sc.seed = *seed;
  }
  if (auto it = fields.find("budget"); it != fields.end()) {
    const auto budget = to_number<std::size_t>(it->second.value);
    if (!budget || *budget == 0) {
      throw field_error(it->second.line, "budget", "expected a positive integer");
    }
    sc.budget = *budget;
  }
  return sc;
}

scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw file_error("cannot read scenario file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace guardprompt
