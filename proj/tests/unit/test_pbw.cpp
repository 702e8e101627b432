#include <doctest.h>

#include <lieshift/errors.hpp>
#include <lieshift/pbw.hpp>
#include <lieshift/presets.hpp>

#include <thread>
#include <vector>

using namespace lieshift;

namespace {

struct U {
  PBWAlgebraPtr alg;
  PBWElement operator()(const char* label) const {
    return PBWElement::generator(alg, *alg->lie().index_of(label));
  }
  PBWElement c(const Rational& r) const { return PBWElement::constant(alg, r); }
};

}  // namespace

TEST_CASE("sl2 normal ordering") {
  U u{PBWAlgebra::create(preset("sl2"))};
  auto e = u("e"), h = u("h"), f = u("f");
  CHECK(f * e == e * f - h);
  CHECK(commutator(h, e) == u.c(2) * e);
  auto C = h * h + u.c(2) * h + u.c(4) * f * e;
  for (const auto& g : {e, h, f}) CHECK(commutator(C, g).is_zero());
  CHECK((e * f).degree() == 2);
}

TEST_CASE("symmetrization") {
  auto L = preset("sl2");
  U u{PBWAlgebra::create(L)};
  auto e = u("e"), h = u("h"), f = u("f");
  auto ef = PolyElement::variable(3, 0) * PolyElement::variable(3, 2);
  CHECK(symmetrize(u.alg, ef) == e * f - u.c(Rational(1, 2)) * h);
  // symm(C) is central; compare against the explicit average over orderings of e e f.
  Exponent eef{2, 0, 1};
  auto avg = (e * e * f + e * f * e + f * e * e).scale(Rational(1, 3));
  CHECK(PBWElement(u.alg, u.alg->symmetrized_monomial(eef)) == avg);
  auto Cpoly = PolyElement::variable(3, 1).pow(2) + PolyElement::constant(3, 4) * ef;
  auto sC = symmetrize(u.alg, Cpoly);
  CHECK(sC == h * h + u.c(4) * e * f - u.c(2) * h);
  for (const auto& g : {e, h, f}) CHECK(commutator(sC, g).is_zero());
}

TEST_CASE("central variables and Laurent exponents") {
  auto L = preset("sl2-semidirect-h3");
  const std::size_t zi = *L.index_of("z");
  U u{PBWAlgebra::create(L, {zi})};
  CHECK(u.alg->is_central(zi));
  CHECK(u.alg->order().back() == zi);
  auto x = u("x"), y = u("y"), z = u("z"), h = u("h");
  Exponent zinv(6, 0);
  zinv[zi] = -1;
  auto zi_el = PBWElement::monomial(u.alg, zinv);
  CHECK(zi_el * z == u.c(1));
  CHECK(zi_el.has_negative_exponents());
  auto zh = z * h + x * y;
  CHECK(commutator(x, zh).is_zero());
  CHECK(principal_symbol(zh).to_string(L.labels()) == "h*z + x*y");
  CHECK(y * x == x * y - z);
  CHECK_THROWS_AS(PBWAlgebra::create(L, {*L.index_of("x")}), InputError);
}

TEST_CASE("central specialization") {
  auto L = preset("heisenberg");
  const std::size_t zi = *L.index_of("z");
  U u{PBWAlgebra::create(L)};
  auto x = u("x"), y = u("y"), z = u("z");
  auto w = y * x * z;
  auto s = specialize_central(w, zi, 3);
  auto A = s.algebra();
  CHECK(A->nvars() == 2);
  CHECK(A->bracket_scalar(0, 1) == FieldElement(3));
  auto sx = PBWElement::generator(A, 0), sy = PBWElement::generator(A, 1);
  CHECK(s == (sx * sy).scale(3) - PBWElement::constant(A, 9));
  CHECK(sy * sx == sx * sy - PBWElement::constant(A, 3));
  CHECK_THROWS_AS(A->specialize(0, 1), InputError);
}

TEST_CASE("centralizer search") {
  U u{PBWAlgebra::create(preset("sl2"))};
  std::vector<PBWElement> gens{u("e"), u("h"), u("f")};
  auto c1 = centralizer_up_to_degree(u.alg, gens, 1);
  CHECK(c1.size() == 1);
  auto c2 = centralizer_up_to_degree(u.alg, gens, 2);
  CHECK(c2.size() == 2);
  for (const auto& c : c2) {
    for (const auto& g : gens) CHECK(commutator(c, g).is_zero());
  }
}

TEST_CASE("generator maps") {
  auto L = preset("heisenberg");
  U u{PBWAlgebra::create(L, {2})};
  auto x = u("x"), y = u("y"), z = u("z");
  // x -> y, y -> -x, z -> z preserves [x,y] = z.
  std::vector<PBWElement> images{y, -x, z};
  Exponent e{1, 1, -1};
  auto w = PBWElement::monomial(u.alg, e);
  auto img = map_generators(w, images, u.alg);
  Exponent zinv{0, 0, -1};
  CHECK(img == -(y * x) * PBWElement::monomial(u.alg, zinv));
}

TEST_CASE("specialization of the worked example") {
  auto L = preset("sl2-semidirect-h3");
  const std::size_t zi = *L.index_of("z");
  U u{PBWAlgebra::create(L, {zi})};
  auto x = u("x"), y = u("y"), z = u("z"), h = u("h");
  Exponent zinv(6, 0);
  zinv[zi] = -1;
  auto s = specialize_central(PBWElement::monomial(u.alg, zinv) * x, zi, 2);
  auto A = s.algebra();
  CHECK(s == PBWElement::generator(A, *A->lie().index_of("x")).scale(Rational(1, 2)));

  auto t = specialize_central(z * h + x * y, zi, 1);
  auto B = t.algebra();
  auto g = [&](const char* l) { return PBWElement::generator(B, *B->lie().index_of(l)); };
  CHECK(t == g("h") + g("x") * g("y"));

  // z(h^2 + 4ef) + 2(hxy - fx^2 + ey^2)
  auto var = [&](const char* l) { return PolyElement::variable(6, *L.index_of(l)); };
  auto two = PolyElement::constant(6, 2), four = PolyElement::constant(6, 4);
  auto H2 = var("z") * (var("h") * var("h") + four * var("e") * var("f")) +
            two * (var("h") * var("x") * var("y") - var("f") * var("x") * var("x") + var("e") * var("y") * var("y"));
  U v{PBWAlgebra::create(L)};
  std::vector<PBWElement> gens{v("z"), v("x"), v("z") * v("h") + v("x") * v("y"), symmetrize(v.alg, H2)};
  auto c = centralizer_up_to_degree(v.alg, gens, 1);
  CHECK(c.size() == 3);
  // span{1, z, x}: every element is a combination of these three.
  for (const auto& w : c) {
    for (const auto& [ex, coeff] : w.terms()) {
      int deg = 0;
      for (int k : ex) deg += k;
      bool ok = deg == 0 || (deg == 1 && (ex[*L.index_of("z")] == 1 || ex[*L.index_of("x")] == 1));
      CHECK(ok);
    }
  }
}

TEST_CASE("shared product memo under concurrent use") {
  const LieAlgebra L = preset("sl3");
  auto serial = PBWAlgebra::create(L);
  U s{serial};
  const PBWElement expected = (s("E12") + s("H1")).pow(3) * (s("E21") - s("E13")).pow(2);

  auto shared = PBWAlgebra::create(L);
  U u{shared};
  std::vector<PBWElement> results(4, PBWElement(shared));
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < results.size(); ++i) {
    threads.emplace_back([&, i] { results[i] = (u("E12") + u("H1")).pow(3) * (u("E21") - u("E13")).pow(2); });
  }
  for (auto& t : threads) t.join();
  for (const auto& r : results) CHECK(r.terms() == expected.terms());
}
