#include "guardprompt/question.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>

namespace guardprompt {

question question::direct() { return {question_kind::direct, std::nullopt, nullptr}; }

question question::could_self() {
  return {question_kind::could_provide_self, std::nullopt, nullptr};
}

question question::other(question inner) {
  return {question_kind::ask_other, std::nullopt,
          std::make_shared<const question>(std::move(inner))};
}

question question::you(question inner) {
  return {question_kind::would_say_you, std::nullopt,
          std::make_shared<const question>(std::move(inner))};
}

question question::could(question inner) {
  return {question_kind::could_provide, std::nullopt,
          std::make_shared<const question>(std::move(inner))};
}

question question::avoid(question inner) {
  return {question_kind::opposite_avoids, std::nullopt,
          std::make_shared<const question>(std::move(inner))};
}

question question::restrict(set_template t, question inner) {
  return {question_kind::restricted, t, std::make_shared<const question>(std::move(inner))};
}

std::size_t question::depth() const {
  std::size_t d = 1;
  for (const question* q = this; !q->is_leaf(); q = &q->inner()) ++d;
  return d;
}

bool question::contains(question_kind k) const {
  for (const question* q = this;; q = &q->inner()) {
    if (q->kind_ == k) return true;
    if (q->is_leaf()) return false;
  }
}

bool question::contains_self_reference() const {
  return contains(question_kind::could_provide_self);
}

bool operator==(const question& a, const question& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const question& a, const question& b) {
  const question* x = &a;
  const question* y = &b;
  while (true) {
    if (x == y) return std::strong_ordering::equal;
    if (auto c = x->kind_ <=> y->kind_; c != 0) return c;
    if (x->template_ != y->template_) {
      // Only restricted questions carry a template, so both are set here.
      return *x->template_ < *y->template_ ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
    }
    if (x->is_leaf() || y->is_leaf()) {
      return !x->is_leaf() <=> !y->is_leaf();
    }
    x = &x->inner();
    y = &y->inner();
  }
}

parse_error::parse_error(std::size_t offset, std::string expected)
    : std::runtime_error("parse error at offset " + std::to_string(offset) + ": expected " +
                         expected),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

class parser {
 public:
  explicit parser(std::string_view text) : text_(text) {}

  question parse_all() {
    question q = parse_question();
    skip_space();
    if (pos_ != text_.size()) throw parse_error(pos_, "end of input");
    return q;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view peek_word() {
    skip_space();
    std::size_t end = pos_;
    while (end < text_.size() && text_[end] >= 'a' && text_[end] <= 'z') ++end;
    return text_.substr(pos_, end - pos_);
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw parse_error(pos_, std::string("\"") + c + "\"");
  }

  void expect_word(std::string_view word) {
    if (peek_word() != word) throw parse_error(pos_, "\"" + std::string(word) + "\"");
    pos_ += word.size();
  }

  value_t parse_integer(bool allow_sign) {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_) throw parse_error(digits, "integer");
    value_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + digits, text_.data() + pos_, v);
    if (ec != std::errc{} || ptr != text_.data() + pos_) {
      throw parse_error(start, "integer in range");
    }
    return negative ? -v : v;
  }

  set_template parse_setspec() {
    expect('{');
    if (peek_word() == "w") {
      pos_ += 1;
      expect(',');
      expect_word("w");
      skip_space();
      const std::size_t sign_at = pos_;
      bool negative;
      if (accept('+')) {
        negative = false;
      } else if (accept('-')) {
        negative = true;
      } else {
        throw parse_error(sign_at, "\"+\" or \"-\"");
      }
      const std::size_t int_at = pos_;
      value_t delta = parse_integer(false);
      if (delta == 0) throw parse_error(int_at, "nonzero offset");
      expect('}');
      return offset_pair{negative ? -delta : delta};
    }
    value_t c = parse_integer(true);
    expect(',');
    expect_word("w");
    expect('}');
    return const_pair{c};
  }

  question parse_question() {
    const std::string_view word = peek_word();
    const std::size_t at = pos_;
    if (word == "weight") {
      pos_ += word.size();
      return question::direct();
    }
    if (word == "other" || word == "you" || word == "could" || word == "avoid" ||
        word == "restrict") {
      pos_ += word.size();
      expect('(');
      if (word == "could" && peek_word() == "self") {
        pos_ += 4;
        expect(')');
        return question::could_self();
      }
      if (word == "avoid") {
        expect_word("opposite");
        expect(',');
      }
      std::optional<set_template> t;
      if (word == "restrict") {
        t = parse_setspec();
        expect(',');
      }
      question inner = parse_question();
      expect(')');
      if (word == "other") return question::other(std::move(inner));
      if (word == "you") return question::you(std::move(inner));
      if (word == "could") return question::could(std::move(inner));
      if (word == "avoid") return question::avoid(std::move(inner));
      return question::restrict(*t, std::move(inner));
    }
    throw parse_error(at, "question (weight, other, you, could, avoid or restrict)");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

question parse(std::string_view text) { return parser(text).parse_all(); }

std::string print(const question& q) {
  switch (q.kind()) {
    case question_kind::direct:
      return "weight";
    case question_kind::could_provide_self:
      return "could(self)";
    case question_kind::ask_other:
      return "other(" + print(q.inner()) + ")";
    case question_kind::would_say_you:
      return "you(" + print(q.inner()) + ")";
    case question_kind::could_provide:
      return "could(" + print(q.inner()) + ")";
    case question_kind::opposite_avoids:
      return "avoid(opposite, " + print(q.inner()) + ")";
    case question_kind::restricted:
      return "restrict(" + to_string(*q.templ()) + ", " + print(q.inner()) + ")";
  }
  return {};
}

std::ostream& operator<<(std::ostream& os, const question& q) { return os << print(q); }

std::vector<question> closure(const question& q) {
  std::vector<question> chain;
  for (const question* p = &q;; p = &p->inner()) {
    chain.push_back(*p);
    if (p->is_leaf()) break;
  }
  // Every constructor is unary, so the chain has no repeated subterms.
  return {chain.rbegin(), chain.rend()};
}

std::vector<question> enumerate_grammar(std::size_t max_depth,
                                        std::span<const set_template> templates) {
  std::vector<question> out;
  if (max_depth == 0) return out;
  std::vector<set_template> distinct;
  for (const auto& t : templates) {
    if (std::find(distinct.begin(), distinct.end(), t) == distinct.end()) distinct.push_back(t);
  }
  std::vector<question> level{question::direct(), question::could_self()};
  out = level;
  for (std::size_t d = 2; d <= max_depth; ++d) {
    std::vector<question> next;
    for (const auto& q : level) next.push_back(question::other(q));
    for (const auto& q : level) next.push_back(question::you(q));
    for (const auto& q : level) next.push_back(question::could(q));
    for (const auto& q : level) next.push_back(question::avoid(q));
    for (const auto& t : distinct) {
      for (const auto& q : level) next.push_back(question::restrict(t, q));
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

}  // namespace guardprompt
