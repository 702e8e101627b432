#include <doctest.h>

#include <lieshift/errors.hpp>
#include <lieshift/presets.hpp>
#include <lieshift/structure.hpp>

using namespace lieshift;

namespace {

Vector v_of(const LieAlgebra& L, std::initializer_list<std::pair<const char*, int>> terms) {
  Vector v(L.dim());
  for (auto [label, c] : terms) v[*L.index_of(label)] = c;
  return v;
}

LinearForm dual(const LieAlgebra& L, const char* label) {
  return {unit_vector(L.dim(), *L.index_of(label))};
}

}  // namespace

TEST_CASE("presets validate") {
  for (const char* name : {"abelian", "abelian(3)", "heisenberg", "heisenberg(2)", "aff1", "sl2", "sl3",
                           "gl2", "gl3", "gl4", "borel-sl2", "borel-sl3", "sl2-semidirect-h3", "so3", "so4"}) {
    CAPTURE(name);
    auto r = validate(preset(name));
    CHECK(r.ok());
  }
  CHECK_THROWS_AS(preset("nonsense"), InputError);
}

TEST_CASE("Jacobi failure is reported") {
  LieAlgebra L(Field::rationals(), {"x", "y", "z"});
  L.set_bracket(0, 1, unit_vector(3, 2));
  L.set_bracket(1, 2, unit_vector(3, 0));
  L.set_bracket(2, 0, unit_vector(3, 0));
  auto r = validate(L);
  REQUIRE_FALSE(r.ok());
  CHECK(r.failures[0].find("Jacobi") != std::string::npos);
}

TEST_CASE("brackets") {
  auto sl2 = preset("sl2");
  CHECK(sl2.bracket(v_of(sl2, {{"e", 1}}), v_of(sl2, {{"f", 1}})) == v_of(sl2, {{"h", 1}}));
  auto q = preset("sl2-semidirect-h3");
  CHECK(q.bracket(v_of(q, {{"e", 1}}), v_of(q, {{"y", 1}})) == v_of(q, {{"x", 1}}));
  Vector a = v_of(q, {{"e", 2}, {"x", -3}, {"z", 1}});
  CHECK(is_zero(q.bracket(a, a)));
}

TEST_CASE("coadjoint form and stabilizer") {
  auto sl2 = preset("sl2");
  Matrix g = coadjoint_form(sl2, dual(sl2, "h"));
  CHECK(g.at(0, 2) == FieldElement(1));
  CHECK(g.at(0, 1).is_zero());
  CHECK(g.at(1, 2).is_zero());
  CHECK(rank(g) == 2);
  CHECK(stabilizer(sl2, dual(sl2, "h")) == Subspace::coordinate(3, {1}));
  CHECK(stabilizer(sl2, {Vector(3)}).dim() == 3);

  auto h3 = preset("heisenberg");
  Matrix m = coadjoint_form(h3, dual(h3, "z"));
  CHECK(m.at(0, 1) == FieldElement(1));
  CHECK(m.at(1, 0) == FieldElement(-1));
  CHECK(rank(m) == 2);
  CHECK(stabilizer(h3, dual(h3, "z")) == Subspace::coordinate(3, {2}));
}

TEST_CASE("structure series") {
  auto h3 = structure_series(preset("heisenberg"));
  CHECK(h3.center == Subspace::coordinate(3, {2}));
  CHECK(h3.derived == Subspace::coordinate(3, {2}));
  CHECK(h3.is_nilpotent);
  auto ab = structure_series(preset("abelian(2)"));
  CHECK(ab.center.dim() == 2);
  CHECK(ab.is_abelian);
  auto s = structure_series(preset("sl2"));
  CHECK(s.center.dim() == 0);
  CHECK(s.derived.dim() == 3);
  CHECK_FALSE(s.is_nilpotent);
}

TEST_CASE("computed radicals") {
  auto q = preset("sl2-semidirect-h3");
  q.annotations() = {};
  CHECK(compute_solvable_radical(q) == Subspace::coordinate(6, {3, 4, 5}));
  CHECK(compute_nilradical(q) == Subspace::coordinate(6, {3, 4, 5}));
  auto b = preset("borel-sl3");
  CHECK(compute_nilradical(b) == Subspace::coordinate(5, {2, 3, 4}));
  CHECK(compute_solvable_radical(b).dim() == 5);
  CHECK(is_reductive(preset("gl3")));
  CHECK(is_reductive(preset("so4")));
  CHECK(is_reductive(preset("abelian(2)")));
  CHECK_FALSE(is_reductive(preset("aff1")));
  CHECK_FALSE(is_reductive(preset("heisenberg")));
  auto g = preset("gl2");
  g.annotations() = {};
  CHECK(compute_nilradical(g).dim() == 1);  // the center
  CHECK(compute_solvable_radical(g).dim() == 1);
}

TEST_CASE("classify nilradical") {
  auto c = classify_nilradical(preset("sl2-semidirect-h3"));
  CHECK(c.kind == NilradicalKind::heisenberg);
  CHECK(c.levi_stabilizes_v);
  CHECK(c.split.z == unit_vector(6, 5));
  CHECK(check_split(preset("sl2-semidirect-h3"), c.split).empty());

  auto a = classify_nilradical(preset("aff1"));
  CHECK(a.kind == NilradicalKind::abelian_ideal);
  CHECK(a.ideal == Subspace::coordinate(2, {1}));

  auto ab = classify_nilradical(preset("abelian(3)"));
  CHECK(ab.kind == NilradicalKind::abelian_ideal);
  CHECK(ab.ideal.dim() == 3);

  auto h = classify_nilradical(preset("heisenberg(2)"));
  CHECK(h.kind == NilradicalKind::heisenberg);
  CHECK(h.split.n() == 2);

  CHECK(classify_nilradical(preset("sl2")).kind == NilradicalKind::trivial);
  auto b = classify_nilradical(preset("borel-sl3"));
  CHECK(b.kind == NilradicalKind::abelian_ideal);
}

TEST_CASE("ltilde") {
  auto q = preset("sl2-semidirect-h3");
  auto split = *q.annotations().heisenberg_split;
  CHECK(ltilde(q, split) == Subspace::coordinate(6, {0, 1, 2, 5}));

  // Direct sum l + h3: everything in l preserves v.
  auto ds = direct_sum(preset("sl2"), preset("heisenberg"));
  HeisenbergSplit s2;
  s2.x = {unit_vector(6, 3)};
  s2.y = {unit_vector(6, 4)};
  s2.z = unit_vector(6, 5);
  CHECK(ltilde(ds, s2) == Subspace::coordinate(6, {0, 1, 2, 5}));

  // A derivation t with [t,x] = z is not in ltilde, but t + y is.
  LieAlgebra L(Field::rationals(), {"t", "x", "y", "z"});
  L.set_bracket(0, 1, unit_vector(4, 3));
  L.set_bracket(1, 2, unit_vector(4, 3));
  REQUIRE(validate(L).ok());
  HeisenbergSplit s3;
  s3.x = {unit_vector(4, 1)};
  s3.y = {unit_vector(4, 2)};
  s3.z = unit_vector(4, 3);
  Subspace lt = ltilde(L, s3);
  CHECK_FALSE(lt.contains(unit_vector(4, 0)));
  CHECK(lt.contains(Vector{1, 0, 1, 0}));
  CHECK(lt.contains(unit_vector(4, 3)));
}

TEST_CASE("subalgebra and direct sum") {
  auto q = preset("sl2-semidirect-h3");
  auto l = subalgebra(q, *q.annotations().levi);
  CHECK(l.labels() == std::vector<std::string>{"e", "h", "f"});
  CHECK(validate(l).ok());
  auto ds = direct_sum(preset("sl2"), preset("sl2"));
  CHECK(ds.dim() == 6);
  CHECK(ds.labels()[3] == "e'");
  CHECK(validate(ds).ok());
  CHECK_THROWS_AS(subalgebra(q, Subspace::coordinate(6, {0, 2})), InputError);
}
