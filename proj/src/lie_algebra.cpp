#include <lieshift/errors.hpp>
#include <lieshift/lie_algebra.hpp>

#include <algorithm>

namespace lieshift {

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  Subspace s(ambient);
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw InputError("vector has wrong length for subspace");
    if (is_zero(v) || s.contains(v)) continue;
    s.basis_.push_back(v);
  }
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.basis_.push_back(unit_vector(ambient, i));
  return s;
}

Subspace Subspace::coordinate(std::size_t ambient, const std::vector<std::size_t>& indices) {
  std::vector<Vector> vs;
  for (auto i : indices) {
    if (i >= ambient) throw InputError("basis index out of range");
    vs.push_back(unit_vector(ambient, i));
  }
  return span(ambient, vs);
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const Vector& v) { return contains(v); });
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_) throw InputError("vector has wrong length for subspace");
  if (is_zero(v)) return Vector(dim());
  if (basis_.empty()) return std::nullopt;
  return solve(Matrix::from_columns(basis_, ambient_), v);
}

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<Vector> vs = basis_;
  vs.insert(vs.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, vs);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (basis_.empty() || other.basis_.empty()) return Subspace(ambient_);
  std::vector<Vector> cols = basis_;
  for (const auto& w : other.basis_) cols.push_back(scale(w, -1));
  auto ker = kernel_basis(Matrix::from_columns(cols, ambient_));
  std::vector<Vector> out;
  for (const auto& k : ker) {
    Vector v(ambient_);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (!k[i].is_zero()) v = add(v, scale(basis_[i], k[i]));
    }
    out.push_back(clear_denominators(v));
  }
  return span(ambient_, out);
}

std::vector<std::size_t> Subspace::complement_indices() const {
  std::vector<std::size_t> out;
  Subspace s = *this;
  for (std::size_t i = 0; i < ambient_ && s.dim() < ambient_; ++i) {
    Vector e = unit_vector(ambient_, i);
    if (!s.contains(e)) {
      s.basis_.push_back(e);
      out.push_back(i);
    }
  }
  return out;
}

std::vector<Vector> Subspace::annihilator() const {
  if (basis_.empty()) return Subspace::whole(ambient_).basis();
  return kernel_basis(Matrix::from_rows(basis_, ambient_));
}

Subspace HeisenbergSplit::v() const {
  std::vector<Vector> vs = x;
  vs.insert(vs.end(), y.begin(), y.end());
  return Subspace::span(z.size(), vs);
}

Subspace HeisenbergSplit::heisenberg() const {
  std::vector<Vector> vs = x;
  vs.insert(vs.end(), y.begin(), y.end());
  vs.push_back(z);
  return Subspace::span(z.size(), vs);
}

LieAlgebra::LieAlgebra(FieldPtr field, std::vector<std::string> labels, std::string name)
    : field_(field ? std::move(field) : Field::rationals()),
      labels_(std::move(labels)),
      name_(std::move(name)),
      table_(labels_.size() * labels_.size(), Vector(labels_.size())) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw InputError("empty basis label");
    for (std::size_t j = 0; j < i; ++j) {
      if (labels_[i] == labels_[j]) throw InputError("duplicate basis label '" + labels_[i] + "'");
    }
  }
}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector& value) {
  if (i >= dim() || j >= dim()) throw InputError("bracket index out of range");
  if (value.size() != dim()) throw InputError("bracket value has wrong length");
  if (i == j) {
    if (!is_zero(value)) throw InputError("[x,x] must vanish");
    return;
  }
  table_[i * dim() + j] = value;
  table_[j * dim() + i] = scale(value, -1);
}

Vector LieAlgebra::bracket(const Vector& a, const Vector& b) const {
  const std::size_t n = dim();
  if (a.size() != n || b.size() != n) throw InputError("bracket argument has wrong length");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || b[j].is_zero()) continue;
      const Vector& c = structure(i, j);
      FieldElement f = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!c[k].is_zero()) out[k] += f * c[k];
      }
    }
  }
  return out;
}

std::string LieAlgebra::render(const Vector& v) const {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const FieldElement& c = v[i];
    if (c.is_zero()) continue;
    bool negative = c.is_rational() && c.rational() < 0;
    FieldElement mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (!mag.is_one()) {
      out += (mag.is_compound() ? "(" + mag.to_string() + ")" : mag.to_string()) + "*";
    }
    out += labels_[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace lieshift
