#pragma once

// Puzzle-core types: answer spaces, worlds, guard roles, liar behaviour
// models and world-dependent answer-set templates.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace guardprompt {

using value_t = std::int64_t;

struct range_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct mode_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct rule_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Sorted, duplicate-free set of answer values.
class answer_set {
 public:
  answer_set() = default;
  answer_set(std::initializer_list<value_t> values);
  explicit answer_set(std::vector<value_t> values);

  [[nodiscard]] bool contains(value_t v) const;
  [[nodiscard]] bool empty() const { return values_.empty(); }
  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] const std::vector<value_t>& values() const { return values_; }
  [[nodiscard]] auto begin() const { return values_.begin(); }
  [[nodiscard]] auto end() const { return values_.end(); }

  // The element when the set is a singleton.
  [[nodiscard]] std::optional<value_t> single() const;
  [[nodiscard]] bool is_subset_of(const answer_set& other) const;

  friend answer_set operator&(const answer_set& a, const answer_set& b);
  friend answer_set operator|(const answer_set& a, const answer_set& b);
  friend answer_set operator-(const answer_set& a, const answer_set& b);

  friend bool operator==(const answer_set&, const answer_set&) = default;
  friend auto operator<=>(const answer_set&, const answer_set&) = default;

  // Compact rendering with runs collapsed, e.g. "{0..69, 71..100}".
  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<value_t> values_;
};

// The finite set S of permissible answers. Nonempty and strictly increasing.
class answer_space {
 public:
  explicit answer_space(std::vector<value_t> values);

  [[nodiscard]] const answer_set& values() const { return values_; }
  [[nodiscard]] bool contains(value_t v) const { return values_.contains(v); }
  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] value_t min() const { return values_.values().front(); }
  [[nodiscard]] value_t max() const { return values_.values().back(); }

  friend bool operator==(const answer_space&, const answer_space&) = default;

 private:
  answer_set values_;
};

// {lo, lo+1, ..., hi}; throws range_error when lo > hi.
answer_space make_space(value_t lo, value_t hi);

struct world {
  value_t weight;
  friend bool operator==(const world&, const world&) = default;
};

enum class role { truth_teller, liar };

constexpr role opposite(role r) {
  return r == role::truth_teller ? role::liar : role::truth_teller;
}
const char* to_string(role r);

struct role_assignment {
  std::vector<role> roles;

  [[nodiscard]] std::size_t guard_count() const { return roles.size(); }
  [[nodiscard]] role at(std::size_t guard) const { return roles.at(guard); }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const role_assignment&, const role_assignment&) = default;
  friend auto operator<=>(const role_assignment&, const role_assignment&) = default;
};

enum class roles_mode { exactly_one_each, any };
const char* to_string(roles_mode m);

// exactly_one_each (n must be 2): [T,L], [L,T]. any: all 2^n vectors in
// binary counting order with guard 0 most significant, truth-teller first.
std::vector<role_assignment> enumerate_assignments(std::size_t guard_count, roles_mode mode);

// A deterministic lying function. Values without an entry, or whose image
// leaves the permissible set, are handled by the evaluator.
class fixed_rule {
 public:
  // x -> x + delta for every x in the space.
  static fixed_rule offset(value_t delta, const answer_space& space);
  // Throws rule_error if some entry maps x to itself.
  static fixed_rule from_table(std::map<value_t, value_t> table);

  [[nodiscard]] std::optional<value_t> apply(value_t x) const;
  [[nodiscard]] const std::map<value_t, value_t>& table() const { return table_; }
  // Some delta with f(x) = x + delta on the whole domain.
  [[nodiscard]] std::optional<value_t> constant_offset() const;

  friend bool operator==(const fixed_rule&, const fixed_rule&) = default;

 private:
  std::map<value_t, value_t> table_;
};

struct full_support {
  friend bool operator==(const full_support&, const full_support&) = default;
};
struct adversarial {
  friend bool operator==(const adversarial&, const adversarial&) = default;
};

using liar_model = std::variant<fixed_rule, full_support, adversarial>;

std::string describe(const liar_model& model);
inline bool is_adversarial(const liar_model& m) {
  return std::holds_alternative<adversarial>(m);
}

// {w, w + delta}
struct offset_pair {
  value_t delta;
  friend bool operator==(const offset_pair&, const offset_pair&) = default;
  friend auto operator<=>(const offset_pair&, const offset_pair&) = default;
};

// {c, w}
struct const_pair {
  value_t c;
  friend bool operator==(const const_pair&, const const_pair&) = default;
  friend auto operator<=>(const const_pair&, const const_pair&) = default;
};

using set_template = std::variant<offset_pair, const_pair>;

// Canonical DSL spelling, e.g. "{w,w+10}" or "{0,w}".
std::string to_string(const set_template& t);

struct invalid_world {
  std::string reason;
};

// Instantiates t at w. The result has exactly two distinct elements of s, or
// the world is invalid for the template.
std::variant<answer_set, invalid_world> apply_template(const set_template& t, world w,
                                                       const answer_space& s);

}  // namespace guardprompt
