#pragma once

// Exact scalars: Q at level 0 and, above it, fields of rational functions
// in named variables over the previous level.

#include <lieshift/rational.hpp>

#include <concepts>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace lieshift {

inline constexpr int kMaxTowerDepth = 3;

class Field;
class FieldElement;
class MPoly;
class RationalFunction;
using FieldPtr = std::shared_ptr<const Field>;

/// One level of the scalar tower.
class Field : public std::enable_shared_from_this<Field> {
 public:
  static FieldPtr rationals();
  /// K(t_1, ..., t_k) over `base`. Throws once the depth cap is exceeded.
  static FieldPtr extend(const FieldPtr& base, std::vector<std::string> variables);

  int level() const { return level_; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t num_variables() const { return variables_.size(); }
  const FieldPtr& base() const { return base_; }

  FieldElement variable(std::size_t i) const;

  /// True if `other` is this field or one of the fields below it.
  bool extends(const Field& other) const;
  bool operator==(const Field& other) const;

  std::string describe() const;

 private:
  Field(int level, std::vector<std::string> variables, FieldPtr base);

  int level_;
  std::vector<std::string> variables_;
  FieldPtr base_;
};

/// Element of some level of the tower. Constants are always stored at the
/// lowest level that contains them, so equality of canonical forms is
/// structural equality.
class FieldElement {
 public:
  FieldElement() : value_(Rational(0)) {}
  FieldElement(const Rational& value) : value_(value) { std::get<Rational>(value_).canonicalize(); }
  template <std::integral T>
  FieldElement(T value) : value_(Rational(static_cast<long>(value))) {}

  /// numerator / denominator over `field`'s variables, reduced to canonical form.
  static FieldElement fraction(const FieldPtr& field, MPoly numerator, MPoly denominator);
  static FieldElement polynomial(const FieldPtr& field, MPoly p);
  /// Wraps an already reduced pair with monic denominator; no checks.
  static FieldElement from_canonical(const FieldPtr& field, MPoly numerator, MPoly denominator);

  int level() const;
  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }
  const RationalFunction& function() const { return *std::get<1>(value_); }
  /// Field of a non-rational element; nullptr for rationals.
  FieldPtr field() const;

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(int exponent) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  std::string to_string() const;
  /// True when the rendering needs parentheses to act as a factor.
  bool is_compound() const;

 private:
  std::variant<Rational, std::shared_ptr<const RationalFunction>> value_;
};

/// Sparse multivariate polynomial with coefficients in the base of some
/// tower level; terms kept in descending graded-lexicographic order.
class MPoly {
 public:
  using Term = std::pair<Exponent, FieldElement>;

  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}
  static MPoly constant(std::size_t nvars, const FieldElement& c);
  static MPoly variable(std::size_t nvars, std::size_t i);
  static MPoly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  FieldElement constant_value() const;
  const FieldElement& leading_coefficient() const { return terms_.front().second; }
  const Exponent& leading_exponent() const { return terms_.front().first; }
  int total_degree() const;
  int degree_in(std::size_t var) const;

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly scale(const FieldElement& c) const;
  friend bool operator==(const MPoly& a, const MPoly& b);

  MPoly monic() const;
  FieldElement evaluate(std::span<const FieldElement> point) const;
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Descending graded-lexicographic comparison: true if a comes before b.
bool grlex_greater(const Exponent& a, const Exponent& b);

std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b);
/// Monic greatest common divisor (zero only if both inputs are zero).
MPoly gcd(const MPoly& a, const MPoly& b);
MPoly lcm(const MPoly& a, const MPoly& b);

class RationalFunction {
 public:
  RationalFunction(FieldPtr field, MPoly numerator, MPoly denominator)
      : field_(std::move(field)), num_(std::move(numerator)), den_(std::move(denominator)) {}
  const FieldPtr& field() const { return field_; }
  const MPoly& numerator() const { return num_; }
  const MPoly& denominator() const { return den_; }

 private:
  FieldPtr field_;
  MPoly num_;
  MPoly den_;
};

/// Writes `e` as numerator/denominator over the variables of `top`.
/// Lower-level elements become constants. Throws on unrelated fields.
std::pair<MPoly, MPoly> as_fraction(const FieldElement& e, const FieldPtr& top);

/// Highest field among the elements (nullptr when all are rational).
FieldPtr top_field(std::span<const FieldElement> elements);

/// Values for the tower variables, indexed by level - 1 then variable.
using TowerPoint = std::vector<std::vector<Rational>>;

/// Substitutes rational values for every tower variable. Empty when a
/// denominator vanishes at the point.
std::optional<Rational> specialize_tower(const FieldElement& e, const TowerPoint& point);

}  // namespace lieshift
