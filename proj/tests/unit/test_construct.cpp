#include <doctest.h>

#include <lieshift/construct.hpp>
#include <lieshift/errors.hpp>
#include <lieshift/presets.hpp>

using namespace lieshift;

namespace {

PolyElement var(const LieAlgebra& L, const char* label) {
  return PolyElement::variable(L.dim(), *L.index_of(label));
}

PolyElement num(const LieAlgebra& L, const Rational& c) { return PolyElement::constant(L.dim(), c); }

LinearForm dual(const LieAlgebra& L, const char* label) { return {unit_vector(L.dim(), *L.index_of(label))}; }

PolyElement sl2_casimir(const LieAlgebra& L) {
  return var(L, "h") * var(L, "h") + num(L, 4) * var(L, "e") * var(L, "f");
}

PolyElement section5_H2(const LieAlgebra& Q) {
  auto z = var(Q, "z"), e = var(Q, "e"), h = var(Q, "h"), f = var(Q, "f"), x = var(Q, "x"), y = var(Q, "y");
  return z * (h * h + num(Q, 4) * e * f) + num(Q, 2) * (h * x * y - f * x * x + e * y * y);
}

struct Gen {
  PBWAlgebraPtr U;
  PBWElement operator()(const char* label) const { return PBWElement::generator(U, *U->lie().index_of(label)); }
  PBWElement c(const Rational& r) const { return PBWElement::constant(U, r); }
};

}  // namespace

TEST_CASE("shift of argument on sl2") {
  auto L = preset("sl2");
  auto C = sl2_casimir(L);
  auto mf = mf_subalgebra(L, {C}, dual(L, "h"));
  REQUIRE(mf.size() == 2);
  CHECK(mf.poisson_elements[0] == C);
  CHECK(mf.poisson_elements[1] == num(L, 2) * var(L, "h"));
  CHECK(mf_subalgebra(L, {C}, LinearForm{Vector(3)}).size() == 1);
  CHECK_THROWS_AS(mf_subalgebra(L, {var(L, "e")}, dual(L, "h")), VerificationError);
  auto e_shift = mf_subalgebra(L, {C}, dual(L, "e"));
  CHECK(e_shift.poisson_elements[1] == num(L, 4) * var(L, "f"));

  auto U = PBWAlgebra::create(L);
  auto q = quantum_mf(U, {C}, dual(L, "h"));
  CHECK(q.commutative);
  CHECK(q.symbols_match);
  Gen g{U};
  CHECK(q.generators.associative_elements[0] == g("h") * g("h") + g.c(4) * g("e") * g("f") - g.c(2) * g("h"));
}

TEST_CASE("shift of argument on sl3 reaches b") {
  auto L = preset("sl3");
  auto cas = invariant_generators(L, 3);
  auto gamma = sample_regular_form(L, {}, index(L));
  auto mf = mf_subalgebra(L, cas, gamma);
  CHECK(mf.size() == 5);
  CHECK(trdeg_jacobian(mf, L.field()).value == 5);
}

TEST_CASE("hat map on the semidirect example") {
  auto L = preset("sl2-semidirect-h3");
  const auto& split = *L.annotations().heisenberg_split;
  auto U = PBWAlgebra::create(L, {*L.index_of("z")});
  Gen g{U};
  auto e_hat = hat_map(U, split, L.basis_vector(*L.index_of("e")));
  auto h_hat = hat_map(U, split, L.basis_vector(*L.index_of("h")));
  auto f_hat = hat_map(U, split, L.basis_vector(*L.index_of("f")));
  CHECK(g("z") * e_hat == g("z") * g("e") - g("x") * g("x").scale(Rational(1, 2)));
  CHECK(g("z") * h_hat == g("z") * g("h") + g("x") * g("y") - g("z").scale(Rational(1, 2)));
  CHECK(g("z") * f_hat == g("z") * g("f") + g("y") * g("y").scale(Rational(1, 2)));
  CHECK(commutator(e_hat, f_hat) == h_hat);
  for (const char* v : {"x", "y", "z"}) CHECK(commutator(g(v), h_hat).is_zero());

  auto rep = verify_hat_lemmas(L, split);
  CHECK(rep.ok());
  CHECK(rep.checks == 3 * 3 + 3);
}

TEST_CASE("hat map of a trivially acting element") {
  auto L = direct_sum(preset("heisenberg"), preset("abelian(1)"));
  HeisenbergSplit s;
  s.l_basis = Subspace::coordinate(4, {3});
  s.x = {L.basis_vector(0)};
  s.y = {L.basis_vector(1)};
  s.z = L.basis_vector(2);
  auto U = PBWAlgebra::create(L, {2});
  CHECK(hat_map(U, s, L.basis_vector(3)) == PBWElement::generator(U, 3));
  CHECK(verify_hat_lemmas(L, s).ok());
}

TEST_CASE("heisenberg lift") {
  auto L = preset("sl2-semidirect-h3");
  const auto& split = *L.annotations().heisenberg_split;
  auto frame = split_frame(L, split, split.l_basis);
  auto l = subalgebra(frame.algebra, Subspace::coordinate(6, frame.l_indices), {"e", "h", "f"});
  auto Ul = PBWAlgebra::create(l);
  auto C = symmetrize(Ul, sl2_casimir(l));
  auto h = PBWElement::generator(Ul, 1);

  auto full = heisenberg_lift(L, frame, GeneratorSet::of_associative({C, h}));
  CHECK(full.failures.empty());
  CHECK(full.trdeg.value == 4);
  Gen g{full.U};
  CHECK(full.generators.associative_elements[1] == g("z") * g("h") + g("x") * g("y") - g("z").scale(Rational(1, 2)));

  GeneratorSet none;
  none.flavor = Flavor::associative;
  auto bare = heisenberg_lift(L, frame, none);
  CHECK(bare.generators.size() == 2);
  CHECK(bare.trdeg.value == 2);

  auto only_h = heisenberg_lift(L, frame, GeneratorSet::of_associative({h}));
  CHECK(only_h.trdeg.value == 3);
}

TEST_CASE("abelian ideal reduction") {
  auto aff = preset("aff1");
  auto H = abelian_qhat(aff, Subspace::coordinate(2, {*aff.index_of("y")}));
  CHECK(H.algebra.dim() == 1);
  CHECK(H.expected_dim == 1);

  auto h3 = preset("h3");
  auto H2 = abelian_qhat(h3, Subspace::coordinate(3, {*h3.index_of("y"), *h3.index_of("z")}));
  CHECK(H2.algebra.dim() == 1);
  auto Hc = abelian_qhat(h3, Subspace::coordinate(3, {*h3.index_of("z")}));
  CHECK(Hc.algebra.dim() == 3);
  CHECK(b_of(Hc.algebra) == b_of(h3));

  CHECK_THROWS_AS(abelian_qhat(h3, Subspace::coordinate(3, {0, 1})), InputError);
  CHECK_THROWS_AS(abelian_qhat(h3, Subspace::coordinate(3, {0})), InputError);
}

TEST_CASE("central specialization search") {
  LieAlgebra L(Field::rationals(), {"h", "z"});
  auto U = PBWAlgebra::create(L);
  auto h = PBWElement::generator(U, 0), z = PBWElement::generator(U, 1);
  auto r = specialize_search(GeneratorSet::of_associative({z, z * h}), 1);
  REQUIRE(r.success);
  CHECK(r.value == FieldElement(1));
  CHECK(r.trdeg_before == 2);
  CHECK(r.trdeg_after == 1);
  auto r2 = specialize_search(GeneratorSet::of_associative({h}), 1);
  CHECK(r2.trdeg_after == r2.trdeg_before);
}

TEST_CASE("orchestrator certificates") {
  for (const char* name : {"abelian", "aff1", "heisenberg", "borel-sl2", "sl2", "gl2", "sl2-semidirect-h3"}) {
    CAPTURE(name);
    auto cert = construct_theorem(preset(name));
    CHECK(cert.success());
    CHECK(recheck(cert, {7, 5, 10000}).empty());
    CHECK_FALSE(cert.trace.empty());
  }
  auto aff = construct_theorem(preset("aff1"));
  REQUIRE(aff.generators.size() == 1);
  CHECK(aff.generators.associative_elements[0].to_string() == "y");
}

TEST_CASE("maximality probes") {
  auto L = preset("sl2-semidirect-h3");
  auto U = PBWAlgebra::create(L);
  Gen g{U};
  auto sH2 = symmetrize(U, section5_H2(L));
  auto second = GeneratorSet::of_associative({g("z"), g("x"), g.c(2) * g("e") * g("z") - g("x") * g("x"), sH2});
  auto r = maximality_probe(second, 1);
  REQUIRE(r.new_elements.size() == 1);
  CHECK(r.new_elements[0] == g("e"));
  CHECK(r.enlarged_commutative);
  CHECK_FALSE(r.trdeg_increases);

  auto first = GeneratorSet::of_associative({g("z"), g("x"), g("z") * g("h") + g("x") * g("y"), sH2});
  auto r1 = maximality_probe(first, 2);
  CHECK_FALSE(r1.trdeg_increases);

  auto A = preset("abelian");
  auto UA = PBWAlgebra::create(A);
  std::vector<PBWElement> basis;
  for (std::size_t i = 0; i < 3; ++i) basis.push_back(PBWElement::generator(UA, i));
  auto ra = maximality_probe(GeneratorSet::of_associative(basis), 1);
  CHECK(ra.centralizer.size() == 4);
  CHECK(ra.new_elements.empty());
}
