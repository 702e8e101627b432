#include <doctest.h>

#include <lieshift/errors.hpp>
#include <lieshift/poly.hpp>
#include <lieshift/presets.hpp>

using namespace lieshift;

namespace {

PolyElement var(const LieAlgebra& L, const char* label) {
  return PolyElement::variable(L.dim(), *L.index_of(label));
}

PolyElement num(const LieAlgebra& L, const Rational& c) { return PolyElement::constant(L.dim(), c); }

}  // namespace

TEST_CASE("polynomial arithmetic and rendering") {
  auto L = preset("sl2-semidirect-h3");
  auto e = var(L, "e"), x = var(L, "x"), z = var(L, "z");
  auto p = num(L, 2) * e * z - x * x;
  CHECK(p.to_string(L.labels()) == "2*e*z - x^2");
  CHECK(p.degree() == 2);
  CHECK(p.is_homogeneous());
  CHECK((p - p).is_zero());
  CHECK((x * x).derivative(*L.index_of("x")) == num(L, 2) * x);
  CHECK((num(L, Rational(1, 2)) * x * var(L, "y")).to_string(L.labels()) == "1/2*x*y");
}

TEST_CASE("Lie-Poisson bracket") {
  auto L = preset("sl2");
  auto e = var(L, "e"), h = var(L, "h"), f = var(L, "f");
  CHECK(poisson(L, e, f) == h);
  auto C = h * h + num(L, 4) * e * f;
  for (auto g : {e, h, f}) CHECK(poisson(L, C, g).is_zero());

  auto Q = preset("sl2-semidirect-h3");
  auto qe = var(Q, "e"), qf = var(Q, "f"), qh = var(Q, "h"), x = var(Q, "x"), y = var(Q, "y"), z = var(Q, "z");
  auto a = qe * z - num(Q, Rational(1, 2)) * x * x;
  auto b = qf * z + num(Q, Rational(1, 2)) * y * y;
  CHECK(poisson(Q, a, b) == z * (z * qh + x * y));
  CHECK(poisson(Q, x, z * qh + x * y).is_zero());
}

TEST_CASE("gamma shifts") {
  auto L = preset("sl2");
  auto e = var(L, "e"), h = var(L, "h"), f = var(L, "f");
  auto C = h * h + num(L, 4) * e * f;
  LinearForm gamma{unit_vector(3, *L.index_of("h"))};
  CHECK(gamma_shift(C, gamma, 0) == C);
  CHECK(gamma_shift(C, gamma, 1) == num(L, 2) * h);
  CHECK(gamma_shift(C, gamma, 2) == num(L, 2));
  CHECK(gamma_shift(C, gamma, 3).is_zero());
  CHECK_THROWS_AS(gamma_shift(C, gamma, -1), InputError);
}

TEST_CASE("evaluation and monomial enumeration") {
  auto L = preset("sl2");
  auto C = var(L, "h") * var(L, "h") + num(L, 4) * var(L, "e") * var(L, "f");
  CHECK(C.evaluate({1, 2, 3}) == FieldElement(16));
  auto d = C.differential_at({1, 2, 3});
  CHECK(d == Vector{12, 4, 4});
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(monomials_of_degree(3, 2).front() == Exponent{2, 0, 0});
}
