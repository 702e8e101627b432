#pragma once

// The symmetric algebra S(q): sparse polynomials in the basis of q with the
// Lie-Poisson bracket. Negative exponents are tolerated so that symbols of
// elements of U(q)[z^-1] can be represented.

#include <lieshift/lie_algebra.hpp>

#include <map>
#include <string>
#include <vector>

namespace lieshift {

class PolyElement {
 public:
  using Terms = std::map<Exponent, FieldElement>;

  PolyElement() = default;
  explicit PolyElement(std::size_t nvars) : nvars_(nvars) {}
  static PolyElement constant(std::size_t nvars, const FieldElement& c);
  static PolyElement variable(std::size_t nvars, std::size_t i);
  static PolyElement monomial(const Exponent& e, const FieldElement& c);
  /// The linear polynomial sum v_i x_i.
  static PolyElement linear(const Vector& v);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  FieldElement constant_value() const;
  FieldElement coefficient(const Exponent& e) const;
  /// Total degree of the top term (negative exponents count negatively); -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  PolyElement homogeneous_part(int d) const;

  void add_term(const Exponent& e, const FieldElement& c);

  PolyElement operator-() const;
  friend PolyElement operator+(const PolyElement& a, const PolyElement& b);
  friend PolyElement operator-(const PolyElement& a, const PolyElement& b);
  friend PolyElement operator*(const PolyElement& a, const PolyElement& b);
  PolyElement& operator+=(const PolyElement& o);
  PolyElement scale(const FieldElement& c) const;
  PolyElement pow(int k) const;
  friend bool operator==(const PolyElement& a, const PolyElement& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  PolyElement derivative(std::size_t i) const;
  /// sum_i v_i d/dx_i.
  PolyElement directional(const Vector& v) const;
  FieldElement evaluate(const Vector& point) const;
  /// Gradient at a point of q*.
  Vector differential_at(const Vector& point) const;

  /// Terms in descending graded-lexicographic order.
  std::vector<std::pair<Exponent, FieldElement>> sorted_terms() const;
  std::string to_string(const std::vector<std::string>& labels) const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

PolyElement poisson(const LieAlgebra& L, const PolyElement& F, const PolyElement& G);

/// k-th directional derivative along gamma (includes the k! factor).
PolyElement gamma_shift(const PolyElement& H, const LinearForm& gamma, int k);

/// All exponent vectors of total degree d in n variables, grlex descending.
std::vector<Exponent> monomials_of_degree(std::size_t n, int d);

std::string render_monomial(const Exponent& e, const std::vector<std::string>& labels);
/// Shared term-list renderer for polynomial-like containers.
std::string render_terms(const std::vector<std::pair<Exponent, FieldElement>>& terms,
                         const std::vector<std::string>& labels);

}  // namespace lieshift
