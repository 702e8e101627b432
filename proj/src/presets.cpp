#include <lieshift/errors.hpp>
#include <lieshift/presets.hpp>

#include <algorithm>
#include <cctype>
#include <optional>

namespace lieshift {

namespace {

Matrix elementary(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m.at(i, j) = 1;
  return m;
}

Matrix combo(const Matrix& a, const FieldElement& ca, const Matrix& b, const FieldElement& cb) {
  Matrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = ca * a.at(i, j) + cb * b.at(i, j);
  }
  return m;
}

Vector flat(const Matrix& m) {
  Vector v;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  }
  return v;
}

std::string idx(std::size_t i) { return std::to_string(i + 1); }

void set(LieAlgebra& L, const std::string& a, const std::string& b,
         const std::vector<std::pair<std::string, int>>& value) {
  Vector v(L.dim());
  for (const auto& [label, c] : value) v[*L.index_of(label)] = c;
  L.set_bracket(*L.index_of(a), *L.index_of(b), v);
}

Subspace labelled(const LieAlgebra& L, const std::vector<std::string>& labels) {
  std::vector<std::size_t> ids;
  for (const auto& l : labels) ids.push_back(*L.index_of(l));
  return Subspace::coordinate(L.dim(), ids);
}

void mark_semisimple(LieAlgebra& L) {
  L.annotations().levi = Subspace::whole(L.dim());
  L.annotations().solvable_radical = Subspace(L.dim());
  L.annotations().nilradical = Subspace(L.dim());
}

LieAlgebra sl(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      labels.push_back("E" + idx(i) + idx(j));
      mats.push_back(elementary(n, i, j));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      labels.push_back("E" + idx(j) + idx(i));
      mats.push_back(elementary(n, j, i));
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    labels.push_back("H" + idx(i));
    mats.push_back(combo(elementary(n, i, i), 1, elementary(n, i + 1, i + 1), -1));
  }
  LieAlgebra L = from_matrices("sl" + std::to_string(n), labels, mats);
  mark_semisimple(L);
  return L;
}

LieAlgebra sl2() {
  LieAlgebra L(Field::rationals(), {"e", "h", "f"}, "sl2");
  set(L, "e", "f", {{"h", 1}});
  set(L, "h", "e", {{"e", 2}});
  set(L, "h", "f", {{"f", -2}});
  mark_semisimple(L);
  return L;
}

LieAlgebra aff1() {
  LieAlgebra L(Field::rationals(), {"t", "y"}, "aff1");
  set(L, "t", "y", {{"y", 1}});
  L.annotations().solvable_radical = Subspace::whole(2);
  L.annotations().nilradical = labelled(L, {"y"});
  return L;
}

LieAlgebra borel_sl2() {
  LieAlgebra L(Field::rationals(), {"h", "e"}, "borel-sl2");
  set(L, "h", "e", {{"e", 2}});
  L.annotations().solvable_radical = Subspace::whole(2);
  L.annotations().nilradical = labelled(L, {"e"});
  return L;
}

LieAlgebra borel_sl3() {
  const std::size_t n = 3;
  std::vector<Matrix> mats{combo(elementary(n, 0, 0), 1, elementary(n, 1, 1), -1),
                           combo(elementary(n, 1, 1), 1, elementary(n, 2, 2), -1),
                           elementary(n, 0, 1), elementary(n, 0, 2), elementary(n, 1, 2)};
  LieAlgebra L = from_matrices("borel-sl3", {"H1", "H2", "E12", "E13", "E23"}, mats);
  L.annotations().solvable_radical = Subspace::whole(5);
  L.annotations().nilradical = labelled(L, {"E12", "E13", "E23"});
  return L;
}

LieAlgebra sl2_semidirect_h3() {
  LieAlgebra L(Field::rationals(), {"e", "h", "f", "x", "y", "z"}, "sl2-semidirect-h3");
  set(L, "e", "f", {{"h", 1}});
  set(L, "h", "e", {{"e", 2}});
  set(L, "h", "f", {{"f", -2}});
  set(L, "h", "x", {{"x", 1}});
  set(L, "h", "y", {{"y", -1}});
  set(L, "e", "y", {{"x", 1}});
  set(L, "f", "x", {{"y", 1}});
  set(L, "x", "y", {{"z", 1}});
  auto& an = L.annotations();
  an.central = std::vector<std::size_t>{5};
  an.levi = labelled(L, {"e", "h", "f"});
  an.nilradical = labelled(L, {"x", "y", "z"});
  an.solvable_radical = labelled(L, {"x", "y", "z"});
  HeisenbergSplit split;
  split.l_basis = *an.levi;
  split.x = {L.basis_vector(3)};
  split.y = {L.basis_vector(4)};
  split.z = L.basis_vector(5);
  an.heisenberg_split = split;
  return L;
}

LieAlgebra so(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      labels.push_back("L" + idx(i) + idx(j));
      mats.push_back(combo(elementary(n, i, j), 1, elementary(n, j, i), -1));
    }
  }
  LieAlgebra L = from_matrices("so" + std::to_string(n), labels, mats);
  mark_semisimple(L);
  return L;
}

LieAlgebra so3() {
  LieAlgebra L(Field::rationals(), {"L1", "L2", "L3"}, "so3");
  set(L, "L1", "L2", {{"L3", 1}});
  set(L, "L2", "L3", {{"L1", 1}});
  set(L, "L3", "L1", {{"L2", 1}});
  mark_semisimple(L);
  return L;
}

// "abelian(4)", "abelian:4" or "abelian4" -> ("abelian", 4).
std::pair<std::string, std::optional<std::size_t>> split_name(const std::string& raw) {
  std::string name;
  for (char c : raw) name += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (const std::string base : {"abelian", "heisenberg"}) {
    if (name.rfind(base, 0) != 0) continue;
    std::string rest = name.substr(base.size());
    if (rest.empty()) return {base, std::nullopt};
    if (rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
    else if (rest.front() == ':' || rest.front() == '-') rest = rest.substr(1);
    if (rest.empty() || rest.size() > 3 ||
        !std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw InputError("bad preset parameter in '" + raw + "'");
    }
    return {base, static_cast<std::size_t>(std::stoul(rest))};
  }
  return {name, std::nullopt};
}

}  // namespace

LieAlgebra abelian(std::size_t n) {
  if (n == 0) throw InputError("abelian preset needs n >= 1");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("a" + idx(i));
  LieAlgebra L(Field::rationals(), labels, "abelian(" + std::to_string(n) + ")");
  std::vector<std::size_t> all;
  for (std::size_t i = 0; i < n; ++i) all.push_back(i);
  L.annotations().central = all;
  L.annotations().nilradical = Subspace::whole(n);
  L.annotations().solvable_radical = Subspace::whole(n);
  return L;
}

LieAlgebra heisenberg(std::size_t n) {
  if (n == 0) throw InputError("heisenberg preset needs n >= 1");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(n == 1 ? "x" : "x" + idx(i));
  for (std::size_t i = 0; i < n; ++i) labels.push_back(n == 1 ? "y" : "y" + idx(i));
  labels.push_back("z");
  LieAlgebra L(Field::rationals(), labels, "heisenberg(" + std::to_string(n) + ")");
  const std::size_t dim = 2 * n + 1;
  for (std::size_t i = 0; i < n; ++i) L.set_bracket(i, n + i, unit_vector(dim, 2 * n));
  L.annotations().central = std::vector<std::size_t>{2 * n};
  L.annotations().nilradical = Subspace::whole(dim);
  L.annotations().solvable_radical = Subspace::whole(dim);
  return L;
}

LieAlgebra gl(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      labels.push_back("E" + idx(i) + idx(j));
      mats.push_back(elementary(n, i, j));
    }
  }
  LieAlgebra L = from_matrices("gl" + std::to_string(n), labels, mats);
  std::vector<Vector> identity{Vector(n * n)};
  for (std::size_t i = 0; i < n; ++i) identity[0][i * n + i] = 1;
  Subspace center = Subspace::span(n * n, identity);
  L.annotations().solvable_radical = center;
  L.annotations().nilradical = center;
  return L;
}

LieAlgebra from_matrices(std::string name, std::vector<std::string> labels,
                         const std::vector<Matrix>& matrices) {
  if (labels.size() != matrices.size()) throw InputError("one label per matrix required");
  const std::size_t d = matrices.size();
  std::vector<Vector> cols;
  for (const auto& m : matrices) cols.push_back(flat(m));
  const std::size_t len = cols.empty() ? 0 : cols.front().size();
  Matrix span = Matrix::from_columns(cols, len);
  if (rank(span) != d) throw InputError("matrices are linearly dependent");
  LieAlgebra L(Field::rationals(), std::move(labels), std::move(name));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      Matrix c = combo(matrices[i] * matrices[j], 1, matrices[j] * matrices[i], -1);
      auto coords = solve(span, flat(c));
      if (!coords) throw InputError("matrices are not closed under the commutator");
      L.set_bracket(i, j, *coords);
    }
  }
  return L;
}

std::vector<std::string> preset_names() {
  return {"abelian(n)", "heisenberg(n)", "aff1", "sl2", "sl3", "gl2", "gl3", "gl4",
          "borel-sl2", "borel-sl3", "sl2-semidirect-h3", "so3", "so4"};
}

LieAlgebra preset(const std::string& raw) {
  auto [name, param] = split_name(raw);
  if (name == "abelian") return abelian(param.value_or(3));
  if (name == "heisenberg") return heisenberg(param.value_or(1));
  if (name == "h3") return heisenberg(1);
  if (name == "aff1") return aff1();
  if (name == "sl2") return sl2();
  if (name == "sl3") return sl(3);
  if (name == "gl2" || name == "gl3" || name == "gl4") return gl(static_cast<std::size_t>(name[2] - '0'));
  if (name == "borel-sl2") return borel_sl2();
  if (name == "borel-sl3") return borel_sl3();
  if (name == "sl2-semidirect-h3") return sl2_semidirect_h3();
  if (name == "so3") return so3();
  if (name == "so4") return so(4);
  throw InputError("unknown preset '" + raw + "'");
}

}  // namespace lieshift
