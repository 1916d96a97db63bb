#pragma once

// The question AST, its concrete syntax, and grammar enumeration.
//
//   question = "weight" | "could(self)"
//            | "other(" question ")" | "you(" question ")"
//            | "could(" question ")" | "avoid(opposite," question ")"
//            | "restrict(" setspec "," question ")" ;
//   setspec  = "{w,w" sign integer "}" | "{" integer ",w}" ;
//
// Keywords are lowercase ASCII. Whitespace between tokens is ignored.

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "guardprompt/core.hpp"

namespace guardprompt {

enum class question_kind {
  direct,              // weight
  ask_other,           // other(q)
  would_say_you,       // you(q)
  could_provide,       // could(q)
  could_provide_self,  // could(self)
  restricted,          // restrict(A, q)
  opposite_avoids,     // avoid(opposite, q)
};

class question {
 public:
  static question direct();
  static question could_self();
  static question other(question inner);
  static question you(question inner);
  static question could(question inner);
  static question avoid(question inner);
  static question restrict(set_template t, question inner);

  [[nodiscard]] question_kind kind() const { return kind_; }
  [[nodiscard]] bool is_leaf() const { return inner_ == nullptr; }
  // Precondition: !is_leaf().
  [[nodiscard]] const question& inner() const { return *inner_; }
  // Set only for restricted questions.
  [[nodiscard]] const std::optional<set_template>& templ() const { return template_; }

  [[nodiscard]] std::size_t depth() const;
  [[nodiscard]] std::size_t node_count() const { return depth(); }
  [[nodiscard]] bool contains_self_reference() const;
  [[nodiscard]] bool contains(question_kind k) const;

  friend bool operator==(const question& a, const question& b);
  friend std::strong_ordering operator<=>(const question& a, const question& b);

 private:
  question(question_kind kind, std::optional<set_template> t,
           std::shared_ptr<const question> inner)
      : kind_(kind), template_(std::move(t)), inner_(std::move(inner)) {}

  question_kind kind_;
  std::optional<set_template> template_;
  std::shared_ptr<const question> inner_;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t offset, std::string expected);

  [[nodiscard]] std::size_t offset() const { return offset_; }
  [[nodiscard]] const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

question parse(std::string_view text);
std::string print(const question& q);
std::ostream& operator<<(std::ostream& os, const question& q);

// Distinct subquestions of q, innermost first, ending with q itself.
std::vector<question> closure(const question& q);

// Every structurally distinct question of depth <= max_depth, ordered by
// depth, then constructor, then inner question. Restrict wrappers are built
// from the given templates only.
std::vector<question> enumerate_grammar(std::size_t max_depth,
                                        std::span<const set_template> templates);

}  // namespace guardprompt
