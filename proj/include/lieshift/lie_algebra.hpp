#pragma once

#include <lieshift/matrix.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lieshift {

/// Linear subspace of K^n given by an independent spanning set.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
  /// Keeps the vectors that are independent of the earlier ones, in order.
  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace whole(std::size_t ambient);
  static Subspace coordinate(std::size_t ambient, const std::vector<std::size_t>& indices);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the stored basis.
  std::optional<Vector> coordinates(const Vector& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// Standard basis indices completing this subspace to the whole space.
  std::vector<std::size_t> complement_indices() const;
  /// Basis of the annihilator in the dual space (rows vanishing on this subspace).
  std::vector<Vector> annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.dim() == b.dim() && a.contains(b);
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
};

/// Element of q*, written in the dual basis.
struct LinearForm {
  Vector coefficients;
  FieldElement operator()(const Vector& v) const { return dot(coefficients, v); }
};

/// Darboux data for a Heisenberg ideal: [x_i, y_j] = delta_ij z.
struct HeisenbergSplit {
  Subspace l_basis;
  std::vector<Vector> x;
  std::vector<Vector> y;
  Vector z;

  std::size_t n() const { return x.size(); }
  Subspace v() const;
  /// x_1..x_n, y_1..y_n, z.
  Subspace heisenberg() const;
};

struct Annotations {
  std::optional<std::vector<std::size_t>> central;
  std::optional<Subspace> levi;
  std::optional<Subspace> nilradical;
  std::optional<Subspace> solvable_radical;
  std::optional<HeisenbergSplit> heisenberg_split;
};

class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(FieldPtr field, std::vector<std::string> labels, std::string name = "");

  const FieldPtr& field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  std::optional<std::size_t> index_of(const std::string& label) const;

  /// Sets [x_i, x_j] = value and [x_j, x_i] = -value.
  void set_bracket(std::size_t i, std::size_t j, const Vector& value);
  const Vector& structure(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  Vector bracket(const Vector& a, const Vector& b) const;
  Vector basis_vector(std::size_t i) const { return unit_vector(dim(), i); }
  /// Human-readable linear combination of basis labels.
  std::string render(const Vector& v) const;

  Annotations& annotations() { return annotations_; }
  const Annotations& annotations() const { return annotations_; }

 private:
  FieldPtr field_;
  std::vector<std::string> labels_;
  std::string name_;
  std::vector<Vector> table_;
  Annotations annotations_;
};

}  // namespace lieshift
