#include "guardprompt/core.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace guardprompt {

answer_set::answer_set(std::initializer_list<value_t> values)
    : answer_set(std::vector<value_t>(values)) {}

answer_set::answer_set(std::vector<value_t> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

bool answer_set::contains(value_t v) const {
  return std::binary_search(values_.begin(), values_.end(), v);
}

std::optional<value_t> answer_set::single() const {
  if (values_.size() != 1) return std::nullopt;
  return values_.front();
}

bool answer_set::is_subset_of(const answer_set& other) const {
  return std::includes(other.values_.begin(), other.values_.end(), values_.begin(),
                       values_.end());
}

answer_set operator&(const answer_set& a, const answer_set& b) {
  answer_set out;
  std::set_intersection(a.values_.begin(), a.values_.end(), b.values_.begin(),
                        b.values_.end(), std::back_inserter(out.values_));
  return out;
}

answer_set operator|(const answer_set& a, const answer_set& b) {
  answer_set out;
  std::set_union(a.values_.begin(), a.values_.end(), b.values_.begin(), b.values_.end(),
                 std::back_inserter(out.values_));
  return out;
}

answer_set operator-(const answer_set& a, const answer_set& b) {
  answer_set out;
  std::set_difference(a.values_.begin(), a.values_.end(), b.values_.begin(),
                      b.values_.end(), std::back_inserter(out.values_));
  return out;
}

std::string answer_set::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < values_.size();) {
    std::size_t j = i;
    while (j + 1 < values_.size() && values_[j + 1] == values_[j] + 1) ++j;
    if (i != 0) os << ", ";
    if (j - i >= 2) {
      os << values_[i] << ".." << values_[j];
    } else {
      for (std::size_t k = i; k <= j; ++k) os << (k == i ? "" : ", ") << values_[k];
    }
    i = j + 1;
  }
  os << '}';
  return os.str();
}

answer_space::answer_space(std::vector<value_t> values) {
  if (values.empty()) throw range_error("answer space must be nonempty");
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i - 1] >= values[i]) {
      throw range_error("answer space values must be strictly increasing");
    }
  }
  values_ = answer_set(std::move(values));
}

answer_space make_space(value_t lo, value_t hi) {
  if (lo > hi) {
    throw range_error("empty range " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  std::vector<value_t> values;
  values.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (value_t v = lo; v <= hi; ++v) values.push_back(v);
  return answer_space(std::move(values));
}

const char* to_string(role r) { return r == role::truth_teller ? "truth-teller" : "liar"; }

std::string role_assignment::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < roles.size(); ++i) {
    if (i) out += ", ";
    out += roles[i] == role::truth_teller ? 'T' : 'L';
  }
  return out + "]";
}

const char* to_string(roles_mode m) {
  return m == roles_mode::exactly_one_each ? "exactly-one-each" : "any";
}

std::vector<role_assignment> enumerate_assignments(std::size_t guard_count, roles_mode mode) {
  if (mode == roles_mode::exactly_one_each) {
    if (guard_count != 2) {
      throw mode_error("exactly-one-each requires exactly 2 guards, got " +
                       std::to_string(guard_count));
    }
    return {role_assignment{{role::truth_teller, role::liar}},
            role_assignment{{role::liar, role::truth_teller}}};
  }
  if (guard_count == 0) throw mode_error("at least one guard is required");
  if (guard_count >= 20) throw mode_error("too many guards to enumerate");
  std::vector<role_assignment> out;
  const std::size_t total = std::size_t{1} << guard_count;
  out.reserve(total);
  for (std::size_t bits = 0; bits < total; ++bits) {
    role_assignment a;
    a.roles.reserve(guard_count);
    for (std::size_t g = 0; g < guard_count; ++g) {
      const bool lies = (bits >> (guard_count - 1 - g)) & 1U;
      a.roles.push_back(lies ? role::liar : role::truth_teller);
    }
    out.push_back(std::move(a));
  }
  return out;
}

fixed_rule fixed_rule::offset(value_t delta, const answer_space& space) {
  if (delta == 0) throw rule_error("fixed rule must change the answer");
  std::map<value_t, value_t> table;
  for (value_t x : space.values()) table.emplace(x, x + delta);
  fixed_rule r;
  r.table_ = std::move(table);
  return r;
}

fixed_rule fixed_rule::from_table(std::map<value_t, value_t> table) {
  for (const auto& [x, y] : table) {
    if (x == y) {
      throw rule_error("fixed rule must change the answer (f(" + std::to_string(x) +
                       ") = " + std::to_string(y) + ")");
    }
  }
  fixed_rule r;
  r.table_ = std::move(table);
  return r;
}

std::optional<value_t> fixed_rule::apply(value_t x) const {
  auto it = table_.find(x);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::optional<value_t> fixed_rule::constant_offset() const {
  if (table_.empty()) return std::nullopt;
  const value_t delta = table_.begin()->second - table_.begin()->first;
  for (const auto& [x, y] : table_) {
    if (y - x != delta) return std::nullopt;
  }
  return delta;
}

std::string describe(const liar_model& model) {
  struct visitor {
    std::string operator()(const fixed_rule& r) const {
      if (auto d = r.constant_offset()) {
        return std::string("fixed(") + (*d > 0 ? "+" : "") + std::to_string(*d) + ")";
      }
      return "fixed(table)";
    }
    std::string operator()(const full_support&) const { return "full_support"; }
    std::string operator()(const adversarial&) const { return "adversarial"; }
  };
  return std::visit(visitor{}, model);
}

std::string to_string(const set_template& t) {
  if (const auto* p = std::get_if<offset_pair>(&t)) {
    return std::string("{w,w") + (p->delta >= 0 ? "+" : "") + std::to_string(p->delta) + "}";
  }
  return "{" + std::to_string(std::get<const_pair>(t).c) + ",w}";
}

std::variant<answer_set, invalid_world> apply_template(const set_template& t, world w,
                                                       const answer_space& s) {
  const value_t other = std::holds_alternative<offset_pair>(t)
                            ? w.weight + std::get<offset_pair>(t).delta
                            : std::get<const_pair>(t).c;
  const std::string name = to_string(t) + " at w=" + std::to_string(w.weight);
  if (!s.contains(w.weight)) {
    return invalid_world{name + ": w is outside the answer space"};
  }
  if (other == w.weight) {
    return invalid_world{name + ": set collapses to {" + std::to_string(other) + "}"};
  }
  if (!s.contains(other)) {
    return invalid_world{name + ": " + std::to_string(other) + " is outside the answer space"};
  }
  return answer_set{w.weight, other};
}

}  // namespace guardprompt
