// Ordered recursive values: integers, symbols, and lists.
//
// Every payload that flows through the bicategory interfaces (1-cells,
// 2-cells, set elements, slice pairs) is a Val, so structural equality,
// total ordering and canonical printing are available uniformly. The
// ordering makes "lexicographically least" well-defined everywhere a
// canonical representative is required.

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace bcat {

class Val {
 public:
  using List = std::vector<Val>;

  Val() : v_(std::int64_t{0}) {}

  static Val num(std::int64_t n) { return Val(Repr(n)); }
  static Val str(std::string s) { return Val(Repr(std::move(s))); }
  static Val list(List xs) { return Val(Repr(std::move(xs))); }
  static Val pair(Val a, Val b) { return list({std::move(a), std::move(b)}); }

  bool is_num() const { return std::holds_alternative<std::int64_t>(v_); }
  bool is_str() const { return std::holds_alternative<std::string>(v_); }
  bool is_list() const { return std::holds_alternative<List>(v_); }

  std::int64_t num_value() const { return std::get<std::int64_t>(v_); }
  const std::string& str_value() const { return std::get<std::string>(v_); }
  const List& items() const { return std::get<List>(v_); }

  // variant compares by alternative index first, then by value; lists
  // compare lexicographically. Total and deterministic.
  friend bool operator==(const Val& a, const Val& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Val& a, const Val& b) { return !(a == b); }
  friend bool operator<(const Val& a, const Val& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Val& a, const Val& b) { return !(b < a); }
  friend bool operator>(const Val& a, const Val& b) { return b < a; }
  friend bool operator>=(const Val& a, const Val& b) { return !(a < b); }

  // Canonical text form: 12, foo, "needs quoting", [a,[1,2]].
  std::string show() const;

 private:
  using Repr = std::variant<std::int64_t, std::string, List>;
  explicit Val(Repr r) : v_(std::move(r)) {}
  Repr v_;
};

// True when s prints as a bare symbol (no quotes needed).
bool is_bare_symbol(const std::string& s);

// Sorts and deduplicates, giving the canonical carrier of a finite set.
Val::List sorted_set(Val::List xs);

}  // namespace bcat
