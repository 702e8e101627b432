#pragma once

// U(q) in PBW normal form. Central basis elements are ordered last and may
// carry negative exponents when declared Laurent. Quotients U(q)/(z - c)
// by a central basis element are enveloping algebras of the same kind
// with a scalar part in the bracket table.

#include <lieshift/lie_algebra.hpp>
#include <lieshift/poly.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace lieshift {

class PBWAlgebra;
class PBWElement;
using PBWAlgebraPtr = std::shared_ptr<const PBWAlgebra>;
using PBWTerms = std::map<Exponent, FieldElement>;

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept;
};

class PBWAlgebra : public std::enable_shared_from_this<PBWAlgebra> {
 public:
  /// Enveloping algebra of L; `laurent` lists central indices allowed to
  /// carry negative exponents.
  static PBWAlgebraPtr create(const LieAlgebra& L, const std::vector<std::size_t>& laurent = {});

  std::size_t nvars() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const FieldPtr& field() const { return field_; }
  /// Variables in normal order (central ones last).
  const std::vector<std::size_t>& order() const { return order_; }
  bool is_central(std::size_t i) const { return central_[i]; }
  bool is_laurent(std::size_t i) const { return laurent_[i]; }
  /// Lie algebra the variables come from (the unspecialized one for quotients).
  const LieAlgebra& lie() const { return lie_; }
  /// For a quotient: position of each variable in lie(); identity otherwise.
  const std::vector<std::size_t>& lie_index() const { return lie_index_; }
  /// Central specializations applied so far, as (lie index, value).
  const std::vector<std::pair<std::size_t, FieldElement>>& specialized() const { return specialized_; }

  /// [x_i, x_j] = linear part + scalar part.
  const Vector& bracket_linear(std::size_t i, std::size_t j) const { return lin_[i * nvars() + j]; }
  const FieldElement& bracket_scalar(std::size_t i, std::size_t j) const { return cst_[i * nvars() + j]; }

  /// U / (x_var - c); cached per (var, c).
  PBWAlgebraPtr specialize(std::size_t var, const FieldElement& c) const;

  /// Normal form of m * x_j for a monomial m.
  PBWTerms monomial_times_generator(const Exponent& m, std::size_t j) const;
  /// Normal form of a * b for monomials.
  PBWTerms monomial_product(const Exponent& a, const Exponent& b) const;
  /// Symmetrization of a monomial with nonnegative exponents.
  PBWTerms symmetrized_monomial(const Exponent& a) const;

  std::string render_monomial(const Exponent& e) const;

 private:
  PBWAlgebra() = default;
  void finish_setup(const std::vector<std::size_t>& laurent_vars);
  PBWTerms noncentral_times(const Exponent& n, std::size_t j) const;

  LieAlgebra lie_;
  FieldPtr field_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> lie_index_;
  std::vector<std::pair<std::size_t, FieldElement>> specialized_;
  std::vector<Vector> lin_;
  std::vector<FieldElement> cst_;
  std::vector<bool> central_;
  std::vector<bool> laurent_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> position_;

  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<Exponent, PBWTerms, ExponentHash> gen_memo_;
  mutable std::unordered_map<Exponent, PBWTerms, ExponentHash> mono_memo_;
  mutable std::unordered_map<Exponent, PBWTerms, ExponentHash> symm_memo_;
  mutable std::map<std::pair<std::size_t, std::string>, PBWAlgebraPtr> spec_cache_;
};

class PBWElement {
 public:
  PBWElement() = default;
  explicit PBWElement(PBWAlgebraPtr alg) : alg_(std::move(alg)) {}
  PBWElement(PBWAlgebraPtr alg, PBWTerms terms);
  static PBWElement constant(PBWAlgebraPtr alg, const FieldElement& c);
  static PBWElement generator(PBWAlgebraPtr alg, std::size_t i);
  static PBWElement monomial(PBWAlgebraPtr alg, const Exponent& e, const FieldElement& c = 1);
  /// Degree-one element sum v_i x_i.
  static PBWElement from_vector(PBWAlgebraPtr alg, const Vector& v);

  const PBWAlgebraPtr& algebra() const { return alg_; }
  const PBWTerms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  FieldElement constant_value() const;
  /// Filtration degree (negative exponents count negatively); -1 for zero.
  int degree() const;
  bool has_negative_exponents() const;

  PBWElement operator-() const;
  friend PBWElement operator+(const PBWElement& a, const PBWElement& b);
  friend PBWElement operator-(const PBWElement& a, const PBWElement& b);
  friend PBWElement operator*(const PBWElement& a, const PBWElement& b);
  PBWElement& operator+=(const PBWElement& o);
  PBWElement scale(const FieldElement& c) const;
  PBWElement pow(int k) const;
  friend bool operator==(const PBWElement& a, const PBWElement& b);

  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const FieldElement& c);
  PBWAlgebraPtr alg_;
  PBWTerms terms_;
};

PBWElement commutator(const PBWElement& u, const PBWElement& v);

/// Symmetrization S(q) -> U(q) (no Laurent content allowed in F).
PBWElement symmetrize(const PBWAlgebraPtr& alg, const PolyElement& F);

/// Top filtration component read as a polynomial.
PolyElement principal_symbol(const PBWElement& u);

/// [xi, u] = 0 for every basis vector xi of S.
bool ad_invariant(const PBWElement& u, const Subspace& S);

/// Image of u in U / (x_var - c).
PBWElement specialize_central(const PBWElement& u, std::size_t var, const FieldElement& c);

/// Basis of {u in U_d : [u, g] = 0 for all g in gens} (no Laurent content).
std::vector<PBWElement> centralizer_up_to_degree(const PBWAlgebraPtr& alg, const std::vector<PBWElement>& gens,
                                                 int d);

/// Algebra map defined on generators: x_i -> images[i] in the target algebra.
/// Negative exponents are allowed where the image is an invertible monomial.
PBWElement map_generators(const PBWElement& u, const std::vector<PBWElement>& images,
                          const PBWAlgebraPtr& target);

/// Monomials of filtration degree <= d, nonnegative exponents.
std::vector<Exponent> monomials_up_to_degree(std::size_t n, int d);

}  // namespace lieshift
