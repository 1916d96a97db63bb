#pragma once

#include <map>
#include <optional>
#include <string>

#include "guardprompt/core.hpp"
#include "guardprompt/question.hpp"

namespace guardprompt {

// A deterministic adversarial liar: one answer per liar-answered node of a
// prompt's question closure.
class strategy {
 public:
  strategy() = default;

  void bind(const question& q, value_t answer) { assignment_.insert_or_assign(q, answer); }
  [[nodiscard]] std::optional<value_t> lookup(const question& q) const {
    auto it = assignment_.find(q);
    if (it == assignment_.end()) return std::nullopt;
    return it->second;
  }
  [[nodiscard]] const std::map<question, value_t>& assignment() const { return assignment_; }
  [[nodiscard]] std::size_t size() const { return assignment_.size(); }

  // "sigma(weight)=80, sigma(restrict({w,w+10}, weight))=70"
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const strategy&, const strategy&) = default;

 private:
  std::map<question, value_t> assignment_;
};

}  // namespace guardprompt
