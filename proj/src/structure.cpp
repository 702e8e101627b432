#include <lieshift/errors.hpp>
#include <lieshift/structure.hpp>

#include <algorithm>
#include <set>

namespace lieshift {

namespace {

Vector combine(const std::vector<Vector>& basis, const Vector& coeffs, std::size_t n) {
  Vector v(n);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!coeffs[i].is_zero()) v = add(v, scale(basis[i], coeffs[i]));
  }
  return v;
}

// Kernel of the linear map c -> (f(sum c_i b_i)) where f is linear and
// returns a vector; result expressed back in ambient coordinates.
template <typename F>
Subspace solve_in(const std::vector<Vector>& basis, std::size_t n, F&& f) {
  if (basis.empty()) return Subspace(n);
  std::vector<Vector> cols;
  for (const auto& b : basis) cols.push_back(f(b));
  const std::size_t rows = cols.front().size();
  if (rows == 0) return Subspace::span(n, basis);
  std::vector<Vector> out;
  for (const auto& k : kernel_basis(Matrix::from_columns(cols, rows))) {
    out.push_back(clear_denominators(combine(basis, k, n)));
  }
  return Subspace::span(n, out);
}

bool is_solvable(const LieAlgebra& L, const Subspace& S) {
  auto d = derived_series(L, S);
  return d.back().dim() == 0;
}

}  // namespace

std::vector<std::string> check_split(const LieAlgebra& L, const HeisenbergSplit& s) {
  std::vector<std::string> out;
  const std::size_t n = s.n();
  const std::size_t dim = L.dim();
  if (s.y.size() != n) out.push_back("split: x and y have different lengths");
  if (s.z.size() != dim || is_zero(s.z)) out.push_back("split: z must be a nonzero vector");
  if (!out.empty()) return out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i < j && !is_zero(L.bracket(s.x[i], s.x[j]))) {
        out.push_back("split: [x" + std::to_string(i + 1) + ",x" + std::to_string(j + 1) + "] != 0");
      }
      if (i < j && !is_zero(L.bracket(s.y[i], s.y[j]))) {
        out.push_back("split: [y" + std::to_string(i + 1) + ",y" + std::to_string(j + 1) + "] != 0");
      }
      Vector expect = i == j ? s.z : Vector(dim);
      if (L.bracket(s.x[i], s.y[j]) != expect) {
        out.push_back("split: [x" + std::to_string(i + 1) + ",y" + std::to_string(j + 1) +
                      "] != " + (i == j ? "z" : "0"));
      }
    }
  }
  for (std::size_t k = 0; k < dim; ++k) {
    if (!is_zero(L.bracket(L.basis_vector(k), s.z))) {
      out.push_back("split: z is not central ([" + L.labels()[k] + ",z] != 0)");
    }
  }
  Subspace v = s.v();
  if (v.dim() != 2 * n) out.push_back("split: x, y are linearly dependent");
  for (const auto& l : s.l_basis.basis()) {
    for (const auto& w : v.basis()) {
      if (!v.contains(L.bracket(l, w))) {
        out.push_back("split: v is not stable under " + L.render(l));
        break;
      }
    }
  }
  return out;
}

ValidationReport validate(const LieAlgebra& L) {
  ValidationReport r;
  const std::size_t n = L.dim();
  const auto& lab = L.labels();
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_zero(L.structure(i, i))) r.failures.push_back("[" + lab[i] + "," + lab[i] + "] != 0");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (L.structure(i, j) != scale(L.structure(j, i), -1)) {
        r.failures.push_back("antisymmetry fails on (" + lab[i] + "," + lab[j] + ")");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector a = L.basis_vector(i), b = L.basis_vector(j), c = L.basis_vector(k);
        Vector s = add(add(L.bracket(a, L.bracket(b, c)), L.bracket(b, L.bracket(c, a))),
                       L.bracket(c, L.bracket(a, b)));
        if (!is_zero(s)) {
          r.failures.push_back("Jacobi fails on (" + lab[i] + "," + lab[j] + "," + lab[k] + ")");
        }
      }
    }
  }
  if (!r.ok()) return r;  // annotation checks assume a Lie algebra

  const auto& an = L.annotations();
  if (an.central) {
    for (auto c : *an.central) {
      if (c >= n) {
        r.failures.push_back("central index out of range");
        continue;
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (!is_zero(L.structure(c, k))) {
          r.failures.push_back("annotated central element " + lab[c] + " does not commute with " + lab[k]);
          break;
        }
      }
    }
  }
  if (an.nilradical) {
    if (!is_ideal(L, *an.nilradical)) r.failures.push_back("annotated nilradical is not an ideal");
    else if (!is_nilpotent(L, *an.nilradical)) r.failures.push_back("annotated nilradical is not nilpotent");
  }
  if (an.solvable_radical) {
    if (!is_ideal(L, *an.solvable_radical)) r.failures.push_back("annotated solvable radical is not an ideal");
    else if (!is_solvable(L, *an.solvable_radical)) {
      r.failures.push_back("annotated solvable radical is not solvable");
    }
  }
  if (an.levi) {
    if (!is_subalgebra(L, *an.levi)) {
      r.failures.push_back("annotated Levi part is not a subalgebra");
    } else {
      Subspace rad = solvable_radical(L);
      if (an.levi->dim() + rad.dim() != n || an.levi->intersect(rad).dim() != 0) {
        r.failures.push_back("annotated Levi part is not complementary to the solvable radical");
      }
    }
  }
  if (an.heisenberg_split) {
    for (auto& f : check_split(L, *an.heisenberg_split)) r.failures.push_back(f);
  }
  return r;
}

Matrix coadjoint_form(const LieAlgebra& L, const LinearForm& gamma) {
  const std::size_t n = L.dim();
  if (gamma.coefficients.size() != n) throw InputError("linear form has wrong length");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      FieldElement v = dot(gamma.coefficients, L.structure(i, j));
      m.at(j, i) = -v;
      m.at(i, j) = std::move(v);
    }
  }
  return m;
}

Subspace stabilizer(const LieAlgebra& L, const LinearForm& gamma) {
  return Subspace::span(L.dim(), kernel_basis(coadjoint_form(L, gamma)));
}

Subspace bracket_space(const LieAlgebra& L, const Subspace& A, const Subspace& B) {
  std::vector<Vector> vs;
  for (const auto& a : A.basis()) {
    for (const auto& b : B.basis()) vs.push_back(L.bracket(a, b));
  }
  return Subspace::span(L.dim(), vs);
}

bool is_subalgebra(const LieAlgebra& L, const Subspace& S) {
  const auto& b = S.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (!S.contains(L.bracket(b[i], b[j]))) return false;
    }
  }
  return true;
}

bool is_ideal(const LieAlgebra& L, const Subspace& S) {
  for (std::size_t k = 0; k < L.dim(); ++k) {
    for (const auto& v : S.basis()) {
      if (!S.contains(L.bracket(L.basis_vector(k), v))) return false;
    }
  }
  return true;
}

bool is_abelian(const LieAlgebra& L, const Subspace& S) {
  const auto& b = S.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (!is_zero(L.bracket(b[i], b[j]))) return false;
    }
  }
  return true;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& L, const Subspace& S) {
  std::vector<Subspace> out{S};
  while (true) {
    Subspace next = bracket_space(L, S, out.back());
    if (next.dim() == out.back().dim()) break;
    out.push_back(std::move(next));
    if (out.back().dim() == 0) break;
  }
  return out;
}

std::vector<Subspace> derived_series(const LieAlgebra& L, const Subspace& S) {
  std::vector<Subspace> out{S};
  while (out.back().dim() > 0) {
    Subspace next = bracket_space(L, out.back(), out.back());
    if (next.dim() == out.back().dim()) break;
    out.push_back(std::move(next));
  }
  return out;
}

bool is_nilpotent(const LieAlgebra& L, const Subspace& S) {
  return lower_central_series(L, S).back().dim() == 0;
}

Subspace center_of(const LieAlgebra& L, const Subspace& S) {
  const std::size_t n = L.dim();
  return solve_in(S.basis(), n, [&](const Vector& x) {
    Vector out;
    for (const auto& s : S.basis()) {
      Vector b = L.bracket(x, s);
      out.insert(out.end(), b.begin(), b.end());
    }
    return out;
  });
}

StructureSeries structure_series(const LieAlgebra& L) {
  StructureSeries s;
  Subspace q = Subspace::whole(L.dim());
  s.center = center_of(L, q);
  s.derived = bracket_space(L, q, q);
  s.lower_central_series = lower_central_series(L, q);
  s.is_nilpotent = s.lower_central_series.back().dim() == 0;
  s.is_abelian = s.derived.dim() == 0;
  return s;
}

Matrix ad_matrix(const LieAlgebra& L, const Vector& x) {
  const std::size_t n = L.dim();
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(L.bracket(x, L.basis_vector(j)));
  return Matrix::from_columns(cols, n);
}

namespace {

FieldElement trace_of_product(const Matrix& a, const Matrix& b) {
  FieldElement t;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!a.at(i, k).is_zero() && !b.at(k, i).is_zero()) t += a.at(i, k) * b.at(k, i);
    }
  }
  return t;
}

// Incrementally built basis with one pivot per row; insert reports whether
// the vector was new.
struct PivotRows {
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;

  bool insert(Vector v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const FieldElement c = v[pivots[r]];
      if (c.is_zero()) continue;
      for (std::size_t k = pivots[r]; k < v.size(); ++k) {
        if (!rows[r][k].is_zero()) v[k] -= c * rows[r][k];
      }
    }
    std::size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) return false;
    const FieldElement inv = v[p].inverse();
    for (std::size_t k = p; k < v.size(); ++k) {
      if (!v[k].is_zero()) v[k] *= inv;
    }
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
};

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  }
  return v;
}

}  // namespace

Matrix killing_form(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(ad_matrix(L, L.basis_vector(i)));
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      k.at(i, j) = trace_of_product(ads[i], ads[j]);
      k.at(j, i) = k.at(i, j);
    }
  }
  return k;
}

Subspace compute_solvable_radical(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  Subspace q = Subspace::whole(n);
  Subspace d = bracket_space(L, q, q);
  if (d.dim() == 0) return q;
  Matrix K = killing_form(L);
  std::vector<Vector> rows;
  for (const auto& v : d.basis()) rows.push_back(K.transpose() * v);
  return Subspace::span(n, kernel_basis(Matrix::from_rows(rows, n)));
}

Subspace compute_nilradical(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  Subspace r = solvable_radical(L);
  if (r.dim() == 0) return r;
  // Unital associative algebra generated by ad(r); its Jacobson radical is
  // the trace-orthogonal of the whole algebra.
  std::vector<Matrix> gens;
  for (const auto& v : r.basis()) gens.push_back(ad_matrix(L, v));
  std::vector<Matrix> basis{Matrix::identity(n)};
  PivotRows flat;
  flat.insert(flatten(basis[0]));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (const auto& g : gens) {
      Matrix p = basis[i] * g;
      if (!flat.insert(flatten(p))) continue;
      basis.push_back(std::move(p));
    }
  }
  return solve_in(r.basis(), n, [&](const Vector& x) {
    Matrix ax = ad_matrix(L, x);
    Vector out;
    for (const auto& b : basis) out.push_back(trace_of_product(ax, b));
    return out;
  });
}

Subspace solvable_radical(const LieAlgebra& L) {
  if (L.annotations().solvable_radical) return *L.annotations().solvable_radical;
  return compute_solvable_radical(L);
}

Subspace nilradical(const LieAlgebra& L) {
  if (L.annotations().nilradical) return *L.annotations().nilradical;
  return compute_nilradical(L);
}

bool is_reductive(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  Subspace rad = solvable_radical(L);
  Subspace z = center_of(L, Subspace::whole(n));
  if (!(rad == z)) return false;
  Subspace d = bracket_space(L, Subspace::whole(n), Subspace::whole(n));
  if (d.dim() == 0) return true;
  Matrix K = killing_form(L);
  Matrix restricted(d.dim(), d.dim());
  for (std::size_t i = 0; i < d.dim(); ++i) {
    Vector kv = K * d.basis()[i];
    for (std::size_t j = 0; j < d.dim(); ++j) restricted.at(i, j) = dot(kv, d.basis()[j]);
  }
  if (rank(restricted) != d.dim()) {
    throw VerificationError("radical equals center but the Killing form is degenerate on [q,q]");
  }
  return true;
}

LieAlgebra subalgebra(const LieAlgebra& L, const Subspace& S, std::vector<std::string> labels) {
  const auto& b = S.basis();
  if (labels.empty()) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::optional<std::size_t> unit;
      std::size_t nz = 0;
      for (std::size_t k = 0; k < b[i].size(); ++k) {
        if (b[i][k].is_zero()) continue;
        ++nz;
        if (b[i][k].is_one()) unit = k;
      }
      labels.push_back(nz == 1 && unit ? L.labels()[*unit] : "s" + std::to_string(i + 1));
    }
  }
  LieAlgebra sub(L.field(), std::move(labels), L.name().empty() ? "" : "sub(" + L.name() + ")");
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      auto c = S.coordinates(L.bracket(b[i], b[j]));
      if (!c) throw InputError("subspace is not closed under the bracket");
      sub.set_bracket(i, j, *c);
    }
  }
  return sub;
}

LieAlgebra direct_sum(const LieAlgebra& A, const LieAlgebra& B) {
  std::vector<std::string> labels = A.labels();
  for (const auto& l : B.labels()) {
    std::string name = l;
    while (std::find(labels.begin(), labels.end(), name) != labels.end()) name += "'";
    labels.push_back(name);
  }
  const std::size_t m = A.dim(), n = A.dim() + B.dim();
  LieAlgebra S(A.field(), labels, A.name() + "+" + B.name());
  for (std::size_t i = 0; i < A.dim(); ++i) {
    for (std::size_t j = i + 1; j < A.dim(); ++j) {
      Vector v(n);
      for (std::size_t k = 0; k < m; ++k) v[k] = A.structure(i, j)[k];
      S.set_bracket(i, j, v);
    }
  }
  for (std::size_t i = 0; i < B.dim(); ++i) {
    for (std::size_t j = i + 1; j < B.dim(); ++j) {
      Vector v(n);
      for (std::size_t k = 0; k < B.dim(); ++k) v[m + k] = B.structure(i, j)[k];
      S.set_bracket(m + i, m + j, v);
    }
  }
  return S;
}

std::string to_string(NilradicalKind kind) {
  switch (kind) {
    case NilradicalKind::trivial: return "trivial";
    case NilradicalKind::line: return "line";
    case NilradicalKind::heisenberg: return "heisenberg";
    case NilradicalKind::abelian_ideal: return "abelian_ideal";
  }
  return "?";
}

namespace {

// Coefficient c with [a, b] = c z; throws if [a, b] leaves the line.
FieldElement omega(const LieAlgebra& L, const Vector& a, const Vector& b, const Vector& z) {
  Vector br = L.bracket(a, b);
  if (is_zero(br)) return FieldElement();
  auto c = Subspace::span(L.dim(), {z}).coordinates(br);
  if (!c) throw VerificationError("Darboux construction failed: bracket leaves the center");
  return (*c)[0];
}

HeisenbergSplit darboux(const LieAlgebra& L, const Subspace& n, const Vector& z) {
  const std::size_t dim = L.dim();
  std::vector<Vector> pool;
  Subspace acc = Subspace::span(dim, {z});
  for (const auto& v : n.basis()) {
    if (acc.contains(v)) continue;
    acc = acc.sum(Subspace::span(dim, {v}));
    pool.push_back(v);
  }
  HeisenbergSplit s;
  s.z = z;
  while (!pool.empty()) {
    Vector a = pool.front();
    pool.erase(pool.begin());
    auto it = std::find_if(pool.begin(), pool.end(),
                           [&](const Vector& b) { return !omega(L, a, b, z).is_zero(); });
    if (it == pool.end()) {
      throw VerificationError("Darboux construction failed: degenerate form on n/z (not Heisenberg)");
    }
    Vector b = scale(*it, omega(L, a, *it, z).inverse());
    pool.erase(it);
    for (auto& w : pool) {
      FieldElement wy = omega(L, w, b, z), wx = omega(L, w, a, z);
      w = add(sub(w, scale(a, wy)), scale(b, wx));
    }
    s.x.push_back(std::move(a));
    s.y.push_back(std::move(b));
  }
  return s;
}

bool stabilizes(const LieAlgebra& L, const Subspace& l, const Subspace& v) {
  for (const auto& a : l.basis()) {
    for (const auto& w : v.basis()) {
      if (!v.contains(L.bracket(a, w))) return false;
    }
  }
  return true;
}

}  // namespace

NilradicalClass classify_nilradical(const LieAlgebra& L) {
  const std::size_t dim = L.dim();
  NilradicalClass out;
  Subspace q = Subspace::whole(dim);
  out.nilradical = nilradical(L);
  const Subspace& n = out.nilradical;
  if (n.dim() == 0) return out;

  std::vector<std::pair<std::string, Subspace>> candidates;
  candidates.emplace_back("center of nilradical", center_of(L, n));
  auto lcs = lower_central_series(L, n);
  for (auto it = lcs.rbegin(); it != lcs.rend(); ++it) {
    if (it->dim() > 0) {
      candidates.emplace_back("last lower central term", *it);
      break;
    }
  }
  auto ds = derived_series(L, n);
  for (std::size_t k = 0; k < ds.size(); ++k) {
    if (ds[k].dim() > 0) candidates.emplace_back("derived term " + std::to_string(k), ds[k]);
  }
  for (const auto& [label, h] : candidates) {
    if (h.dim() == 0 || !is_abelian(L, h) || !is_ideal(L, h)) continue;
    if (h.dim() > 1 || bracket_space(L, q, h).dim() > 0) {
      out.kind = NilradicalKind::abelian_ideal;
      out.ideal = h;
      out.candidate = label;
      return out;
    }
  }
  if (n.dim() == 1) {
    out.kind = NilradicalKind::line;
    return out;
  }
  Subspace z = center_of(L, n);
  if (z.dim() != 1) throw VerificationError("nilradical has no qualifying abelian ideal and is not Heisenberg");
  out.kind = NilradicalKind::heisenberg;
  out.split = darboux(L, n, z.basis()[0]);
  Subspace v = out.split.v();
  if (n.dim() == dim) {
    out.levi_stabilizes_v = true;  // q = n, so l = 0
    out.split.l_basis = Subspace(dim);
  } else if (L.annotations().levi && L.annotations().levi->dim() + n.dim() == dim &&
             stabilizes(L, *L.annotations().levi, v)) {
    out.levi_stabilizes_v = true;
    out.split.l_basis = *L.annotations().levi;
  } else {
    out.split.l_basis = ltilde(L, out.split);
  }
  return out;
}

Subspace ltilde(const LieAlgebra& L, const HeisenbergSplit& split) {
  const std::size_t dim = L.dim();
  Subspace v = split.v();
  if (v.dim() < 2) throw VerificationError("ltilde needs dim v >= 2");
  auto ann = v.annihilator();
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < dim; ++k) {
    Vector col;
    for (const auto& w : v.basis()) {
      Vector b = L.bracket(L.basis_vector(k), w);
      for (const auto& a : ann) col.push_back(dot(a, b));
    }
    cols.push_back(std::move(col));
  }
  Subspace lt = Subspace::span(dim, kernel_basis(Matrix::from_columns(cols, cols.front().size())));
  Subspace h = split.heisenberg();
  if (!is_subalgebra(L, lt)) throw VerificationError("ltilde is not closed under the bracket");
  if (lt.sum(h).dim() != dim) throw VerificationError("ltilde + h != q");
  if (!(lt.intersect(h) == Subspace::span(dim, {split.z}))) {
    throw VerificationError("ltilde ∩ h != span{z}");
  }
  return lt;
}

}  // namespace lieshift
