#pragma once

#include "roughcat/rational.hpp"

#include <cstdint>
#include <variant>

namespace roughcat {

/// Index into a finite algebra's carrier list.
struct Symbol {
  std::uint32_t index = 0;
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// A truth value. Which alternative is active is decided by the owning
/// algebra: booleans for BOOL2, rationals for the unit-interval algebras,
/// symbols for finite tables.
class Grade {
 public:
  using Value = std::variant<bool, Rational, Symbol>;

  Grade() = default;
  static Grade boolean(bool b) { return Grade(Value(b)); }
  static Grade rational(Rational r) { return Grade(Value(std::move(r))); }
  static Grade symbol(std::uint32_t index) { return Grade(Value(Symbol{index})); }

  bool is_boolean() const { return std::holds_alternative<bool>(value_); }
  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  bool is_symbol() const { return std::holds_alternative<Symbol>(value_); }

  bool as_bool() const { return std::get<bool>(value_); }
  const Rational& as_rational() const { return std::get<Rational>(value_); }
  std::uint32_t as_symbol() const { return std::get<Symbol>(value_).index; }

  const Value& value() const { return value_; }

  friend bool operator==(const Grade& a, const Grade& b) { return a.value_ == b.value_; }

 private:
  explicit Grade(Value v) : value_(std::move(v)) {}
  Value value_ = false;
};

}  // namespace roughcat
