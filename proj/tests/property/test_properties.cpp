#include <doctest.h>

#include "random_algebras.hpp"

#include <lieshift/construct.hpp>
#include <lieshift/invariants.hpp>
#include <lieshift/structure.hpp>

using namespace lieshift;
using namespace lieshift::testing;

namespace {

constexpr int kCases = 100;

std::mt19937_64 rng_for(const char* name) {
  std::seed_seq seq(name, name + std::char_traits<char>::length(name));
  return std::mt19937_64(seq);
}

const LieAlgebra& cached_preset(const std::string& name) {
  static std::map<std::string, LieAlgebra> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, preset(name)).first;
  return it->second;
}

const LieAlgebra& pick_preset(std::mt19937_64& rng) {
  static const auto names = small_presets();
  return cached_preset(names[static_cast<std::size_t>(rand_int(rng, 0, static_cast<long>(names.size()) - 1))]);
}

FieldElement rand_poly_t(std::mt19937_64& rng, const FieldElement& t) {
  FieldElement out = rand_rational(rng);
  FieldElement power = 1;
  for (int k = 0; k < 2; ++k) {
    power *= t;
    out += FieldElement(rand_rational(rng)) * power;
  }
  return out;
}

/// Random element of Q(t) or Q(t)(s).
FieldElement rand_field_element(std::mt19937_64& rng, const FieldPtr& F) {
  if (F->level() == 1) {
    auto t = F->variable(0);
    FieldElement den = 0;
    while (den.is_zero()) den = rand_poly_t(rng, t);
    return rand_poly_t(rng, t) / den;
  }
  auto s = F->variable(0);
  auto lower = rand_field_element(rng, F->base());
  auto num = lower + rand_field_element(rng, F->base()) * s;
  FieldElement den = 0;
  while (den.is_zero()) den = rand_field_element(rng, F->base()) + FieldElement(rand_rational(rng)) * s * s;
  return num / den;
}

}  // namespace

// ------------------------------------------------------------------ scalars and linear algebra

TEST_CASE("field axioms on every tower level") {
  auto rng = rng_for("field axioms");
  auto F1 = Field::extend(Field::rationals(), {"t"});
  auto F2 = Field::extend(F1, {"s"});
  int cases = 0;
  for (const auto& F : {F1, F2}) {
    for (int i = 0; i < kCases; ++i, ++cases) {
      auto a = rand_field_element(rng, F), b = rand_field_element(rng, F), c = rand_field_element(rng, F);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }
  CHECK(cases >= kCases);
}

TEST_CASE("canonical forms are idempotent") {
  auto rng = rng_for("canonical");
  auto F = Field::extend(Field::rationals(), {"t"});
  auto U = PBWAlgebra::create(cached_preset("sl2-semidirect-h3"));
  for (int i = 0; i < kCases; ++i) {
    auto a = rand_field_element(rng, F);
    auto [num, den] = as_fraction(a, F);
    CHECK(FieldElement::fraction(F, num, den) == a);
    auto u = rand_pbw(rng, U, 3);
    CHECK(PBWElement(U, u.terms()) == u);
    CHECK(u * PBWElement::constant(U, 1) == u);
  }
}

TEST_CASE("kernel vectors and rank-nullity") {
  auto rng = rng_for("kernel");
  for (int i = 0; i < kCases; ++i) {
    std::size_t r = static_cast<std::size_t>(rand_int(rng, 1, 5)), c = static_cast<std::size_t>(rand_int(rng, 1, 6));
    Matrix M(r, c);
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t b = 0; b < c; ++b) M.at(a, b) = rand_int(rng, -3, 3);
    }
    // Force a dependency now and then.
    if (r >= 2 && rand_int(rng, 0, 1)) {
      for (std::size_t b = 0; b < c; ++b) M.at(r - 1, b) = M.at(0, b) * FieldElement(2) - M.at(1, b);
    }
    auto K = kernel_basis(M);
    for (const auto& v : K) CHECK(is_zero(M * v));
    CHECK(rank(M) + K.size() == c);
    CHECK(Subspace::span(c, K).dim() == K.size());
  }
}

// ------------------------------------------------------------------ Lie algebras

TEST_CASE("antisymmetry and Jacobi on random elements") {
  auto rng = rng_for("jacobi");
  for (int i = 0; i < kCases; ++i) {
    LieAlgebra L = i % 4 == 3 ? random_heisenberg_split(rng).L : pick_preset(rng);
    auto a = rand_vector(rng, L.dim()), b = rand_vector(rng, L.dim()), c = rand_vector(rng, L.dim());
    CHECK(L.bracket(a, b) == scale(L.bracket(b, a), -1));
    auto cyc = add(add(L.bracket(a, L.bracket(b, c)), L.bracket(b, L.bracket(c, a))), L.bracket(c, L.bracket(a, b)));
    CHECK(is_zero(cyc));
  }
}

TEST_CASE("stabilizers are never smaller than the index") {
  auto rng = rng_for("stabilizer");
  std::map<std::string, std::size_t> ind;
  for (int i = 0; i < kCases; ++i) {
    const auto& L = pick_preset(rng);
    if (!ind.count(L.name())) ind[L.name()] = index(L);
    LinearForm g{rand_vector(rng, L.dim(), 3)};
    CHECK(stabilizer(L, g).dim() >= ind[L.name()]);
  }
}

TEST_CASE("nilradical classification and ltilde") {
  auto rng = rng_for("classify");
  int cases = 0;
  for (int i = 0; cases < kCases; ++i) {
    LieAlgebra L;
    if (i % 2 == 0) {
      L = random_heisenberg_split(rng).L;
    } else {
      L = pick_preset(rng);
      if (is_reductive(L)) continue;
    }
    ++cases;
    CAPTURE(L.name());
    auto cls = classify_nilradical(L);
    if (cls.kind == NilradicalKind::abelian_ideal) {
      CHECK(is_abelian(L, cls.ideal));
      CHECK(is_ideal(L, cls.ideal));
    }
    if (cls.kind == NilradicalKind::heisenberg) {
      CHECK(check_split(L, cls.split).empty());
      Subspace lt = ltilde(L, cls.split);
      Subspace h = cls.split.heisenberg();
      CHECK(is_subalgebra(L, lt));
      CHECK(lt.sum(h).dim() == L.dim());
      CHECK(lt.intersect(h) == Subspace::span(L.dim(), {cls.split.z}));
    }
  }
}

// ------------------------------------------------------------------ Poisson structure

TEST_CASE("Lie-Poisson bracket: antisymmetry, Leibniz, Jacobi") {
  auto rng = rng_for("poisson");
  for (int i = 0; i < kCases; ++i) {
    const auto& L = pick_preset(rng);
    auto n = L.dim();
    auto F = rand_poly(rng, n, 0, 3), G = rand_poly(rng, n, 0, 3), H = rand_poly(rng, n, 0, 3);
    CHECK(poisson(L, F, G) == -poisson(L, G, F));
    CHECK(poisson(L, F, G * H) == poisson(L, F, G) * H + G * poisson(L, F, H));
    auto a = rand_poly(rng, n, 0, 2), b = rand_poly(rng, n, 0, 2), c = rand_poly(rng, n, 0, 2);
    auto jac = poisson(L, a, poisson(L, b, c)) + poisson(L, b, poisson(L, c, a)) + poisson(L, c, poisson(L, a, b));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("Poisson bracket agrees pointwise with gamma([dF, dG])") {
  auto rng = rng_for("pointwise");
  for (int i = 0; i < kCases; ++i) {
    const auto& L = pick_preset(rng);
    auto F = rand_poly(rng, L.dim(), 1, 3), G = rand_poly(rng, L.dim(), 1, 3);
    Vector gamma = rand_vector(rng, L.dim());
    auto lhs = poisson(L, F, G).evaluate(gamma);
    auto rhs = dot(gamma, L.bracket(F.differential_at(gamma), G.differential_at(gamma)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("gamma shifts compose") {
  auto rng = rng_for("shifts");
  for (int i = 0; i < kCases; ++i) {
    std::size_t n = static_cast<std::size_t>(rand_int(rng, 1, 6));
    auto H = rand_poly(rng, n, 0, 4, 4);
    LinearForm g{rand_vector(rng, n)};
    int k = static_cast<int>(rand_int(rng, 0, 3));
    CHECK(gamma_shift(gamma_shift(H, g, k), g, 1) == gamma_shift(H, g, k + 1));
  }
}

// ------------------------------------------------------------------ enveloping algebras

TEST_CASE("PBW multiplication is associative") {
  auto rng = rng_for("associativity");
  for (int i = 0; i < kCases; ++i) {
    auto U = PBWAlgebra::create(pick_preset(rng));
    auto a = rand_pbw(rng, U, 3, 2), b = rand_pbw(rng, U, 3, 2), c = rand_pbw(rng, U, 3, 2);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("principal symbols are multiplicative") {
  auto rng = rng_for("gr multiplicative");
  int cases = 0;
  while (cases < kCases) {
    auto U = PBWAlgebra::create(pick_preset(rng));
    auto a = rand_pbw(rng, U, 3), b = rand_pbw(rng, U, 3);
    if (a.is_zero() || b.is_zero()) continue;
    ++cases;
    CHECK(principal_symbol(a * b) == principal_symbol(a) * principal_symbol(b));
  }
}

TEST_CASE("gr of a symmetrization is the top component") {
  auto rng = rng_for("gr symm");
  int cases = 0;
  while (cases < kCases) {
    const auto& L = pick_preset(rng);
    auto U = PBWAlgebra::create(L);
    auto F = rand_poly(rng, L.dim(), 0, 4);
    if (F.is_zero()) continue;
    ++cases;
    CHECK(principal_symbol(symmetrize(U, F)) == F.homogeneous_part(F.degree()));
    auto top = F.homogeneous_part(F.degree());
    CHECK(principal_symbol(symmetrize(U, top)) == top);
  }
}

TEST_CASE("symmetrization is equivariant") {
  auto rng = rng_for("equivariance");
  for (int i = 0; i < kCases; ++i) {
    const auto& L = pick_preset(rng);
    auto U = PBWAlgebra::create(L);
    auto F = rand_poly(rng, L.dim(), 0, 3);
    auto sF = symmetrize(U, F);
    for (std::size_t x = 0; x < L.dim(); ++x) {
      auto xi = PolyElement::variable(L.dim(), x);
      CHECK(symmetrize(U, poisson(L, xi, F)) == commutator(PBWElement::generator(U, x), sF));
    }
  }
}

TEST_CASE("commutators drop the filtration degree") {
  auto rng = rng_for("filtration");
  int cases = 0;
  while (cases < kCases) {
    auto U = PBWAlgebra::create(pick_preset(rng));
    auto a = rand_pbw(rng, U, 3), b = rand_pbw(rng, U, 3);
    auto c = commutator(a, b);
    if (c.is_zero() || a.is_zero() || b.is_zero()) continue;
    CHECK(c.degree() <= a.degree() + b.degree() - 1);
    ++cases;
  }
}

// ------------------------------------------------------------------ invariants

TEST_CASE("index is additive on direct sums") {
  auto rng = rng_for("additivity");
  std::map<std::string, std::size_t> ind;
  auto cached_index = [&](const LieAlgebra& L) {
    if (!ind.count(L.name())) ind[L.name()] = index(L);
    return ind[L.name()];
  };
  for (int i = 0; i < kCases; ++i) {
    const auto& A = pick_preset(rng);
    const auto& B = pick_preset(rng);
    if (A.dim() + B.dim() > 14) {
      --i;
      continue;
    }
    CAPTURE(A.name());
    CAPTURE(B.name());
    CHECK(index(direct_sum(A, B)) == cached_index(A) + cached_index(B));
  }
}

TEST_CASE("symmetric invariants Poisson-commute with q") {
  int cases = 0;
  for (const auto& name : small_presets()) {
    const auto& L = cached_preset(name);
    int deg = L.dim() > 6 ? 3 : 4;
    for (const auto& p : symmetric_invariants(L, deg)) {
      for (std::size_t x = 0; x < L.dim(); ++x, ++cases) {
        CHECK(poisson(L, PolyElement::variable(L.dim(), x), p).is_zero());
      }
    }
  }
  CHECK(cases >= kCases);
}

TEST_CASE("trdeg is monotone and bounded by b on Poisson-commutative sets") {
  auto rng = rng_for("trdeg");
  const std::vector<std::string> reductive = {"sl2", "gl2", "so3", "so4", "sl3", "gl3"};
  std::map<std::string, std::vector<PolyElement>> casimirs;
  for (int i = 0; i < kCases; ++i) {
    const auto& L = cached_preset(reductive[static_cast<std::size_t>(rand_int(rng, 0, 5))]);
    if (!casimirs.count(L.name())) casimirs[L.name()] = invariant_generators(L, 3);
    LinearForm g{rand_vector(rng, L.dim(), 9)};
    auto mf = mf_subalgebra(L, casimirs[L.name()], g);
    SamplingOptions so;
    so.seed = static_cast<std::uint64_t>(i);
    auto full = trdeg_jacobian(mf, L.field(), so).value;
    CHECK(Rational(static_cast<long>(full)) <= b_of(L));
    auto partial = mf.poisson_elements;
    partial.resize(static_cast<std::size_t>(rand_int(rng, 0, static_cast<long>(partial.size()))));
    CHECK(trdeg_jacobian(partial, L.field(), so).value <= full);
  }
}

// ------------------------------------------------------------------ construction

TEST_CASE("hat map is linear and the hat lemmas hold on random splits") {
  auto rng = rng_for("hat");
  for (int i = 0; i < kCases; ++i) {
    auto rs = random_heisenberg_split(rng);
    CAPTURE(rs.kind);
    auto rep = verify_hat_lemmas(rs.L, rs.split);
    CHECK(rep.ok());
    auto U = PBWAlgebra::create(rs.L, {*rs.L.index_of("z")});
    auto xi = rand_vector(rng, rs.L.dim()), eta = rand_vector(rng, rs.L.dim());
    FieldElement a = rand_rational(rng), b = rand_rational(rng);
    auto lhs = hat_map(U, rs.split, add(scale(xi, a), scale(eta, b)));
    CHECK(lhs == hat_map(U, rs.split, xi).scale(a) + hat_map(U, rs.split, eta).scale(b));
  }
}

TEST_CASE("q-hat dimension matches independent stabilizer sampling") {
  auto rng = rng_for("qhat");
  int cases = 0;
  for (int i = 0; cases < kCases; ++i) {
    LieAlgebra L;
    std::vector<Vector> hv;
    switch (i % 5) {
      case 0: {
        L = cached_preset("aff1");
        hv = {unit_vector(2, *L.index_of("y"))};
        break;
      }
      case 1: {
        std::size_t n = static_cast<std::size_t>(rand_int(rng, 1, 2));
        L = cached_preset("heisenberg(" + std::to_string(n) + ")");
        std::size_t k = static_cast<std::size_t>(rand_int(rng, 0, static_cast<long>(n)));
        for (std::size_t j = 0; j < k; ++j) {
          Vector v(L.dim());
          for (std::size_t a = 0; a < n; ++a) v[a] = rand_int(rng, -2, 2);
          hv.push_back(v);
        }
        hv.push_back(unit_vector(L.dim(), L.dim() - 1));
        break;
      }
      case 2: {
        L = cached_preset("borel-sl3");
        const char* choices[3][2] = {{"E13", ""}, {"E12", "E13"}, {"E13", "E23"}};
        const auto& pick = choices[rand_int(rng, 0, 2)];
        for (const char* c : pick) {
          if (*c) hv.push_back(unit_vector(L.dim(), *L.index_of(c)));
        }
        break;
      }
      case 3: {
        L = cached_preset("abelian(3)");
        std::size_t k = static_cast<std::size_t>(rand_int(rng, 1, 3));
        for (std::size_t j = 0; j < k; ++j) hv.push_back(rand_vector(rng, 3, 3));
        break;
      }
      default: {
        L = cached_preset("borel-sl2");
        hv = {unit_vector(2, *L.index_of("e"))};
        break;
      }
    }
    Subspace h = Subspace::span(L.dim(), hv);
    if (!is_abelian(L, h) || !is_ideal(L, h)) continue;
    ++cases;
    CAPTURE(L.name());
    auto H = abelian_qhat(L, h, {static_cast<std::uint64_t>(i), 5, 10000});
    // min over random alpha in h* of dim {xi : alpha([xi, h]) = 0}
    std::size_t best = L.dim();
    for (int s = 0; s < 5; ++s) {
      Vector alpha = rand_vector(rng, h.dim(), 50);
      Matrix M(L.dim(), h.dim());
      for (std::size_t a = 0; a < L.dim(); ++a) {
        for (std::size_t j = 0; j < h.dim(); ++j) {
          auto coords = *h.coordinates(L.bracket(L.basis_vector(a), h.basis()[j]));
          M.at(a, j) = dot(alpha, coords);
        }
      }
      best = std::min(best, L.dim() - rank(M));
    }
    CHECK(H.algebra.dim() == best - h.dim() + 1);
  }
}

TEST_CASE("heisenberg lifts reach b(l) + n + 1") {
  auto rng = rng_for("lift");
  for (int i = 0; i < kCases; ++i) {
    auto rs = random_heisenberg_split(rng);
    CAPTURE(rs.kind);
    auto frame = split_frame(rs.L, rs.split, rs.split.l_basis);
    GeneratorSet A_l = GeneratorSet::of_associative({});
    Rational bl = 0;
    if (!frame.l_indices.empty()) {
      std::vector<std::string> labels;
      for (auto k : frame.l_indices) labels.push_back(frame.algebra.labels()[k]);
      auto lsub = subalgebra(frame.algebra, Subspace::coordinate(rs.L.dim(), frame.l_indices), labels);
      auto cert = construct_theorem(lsub);
      REQUIRE(cert.success());
      A_l = cert.generators;
      bl = b_of(lsub);
    }
    auto lift = heisenberg_lift(rs.L, frame, A_l);
    CHECK(lift.failures.empty());
    CHECK(Rational(static_cast<long>(lift.trdeg.value)) == bl + static_cast<long>(rs.split.n()) + 1);
    CHECK(noncommuting_pairs(lift.generators.associative_elements).empty());
  }
}

TEST_CASE("principal symbols of quantum shift generators") {
  auto rng = rng_for("quantum mf");
  const std::vector<std::string> names = {"sl2", "gl2", "so3", "so4"};
  std::map<std::string, std::vector<PolyElement>> casimirs;
  for (int i = 0; i < kCases; ++i) {
    const auto& L = cached_preset(names[static_cast<std::size_t>(rand_int(rng, 0, 3))]);
    if (!casimirs.count(L.name())) casimirs[L.name()] = invariant_generators(L, 2);
    LinearForm g{rand_vector(rng, L.dim(), 9)};
    auto q = quantum_mf(PBWAlgebra::create(L), casimirs[L.name()], g);
    auto mf = mf_subalgebra(L, casimirs[L.name()], g);
    REQUIRE(q.generators.size() == mf.size());
    for (std::size_t k = 0; k < mf.size(); ++k) {
      CHECK(principal_symbol(q.generators.associative_elements[k]) == mf.poisson_elements[k]);
    }
    CHECK(q.commutative);
  }
}

TEST_CASE("certificates re-verify and respect the trdeg bound") {
  auto rng = rng_for("certificates");
  const std::vector<std::string> names = {"abelian(3)", "aff1", "heisenberg(1)", "borel-sl2", "sl2", "gl2",
                                          "sl2-semidirect-h3", "so3"};
  for (int i = 0; i < kCases; ++i) {
    LieAlgebra L = i % 2 ? random_heisenberg_split(rng).L
                         : cached_preset(names[static_cast<std::size_t>(rand_int(rng, 0, 7))]);
    ConstructOptions opts;
    opts.sampling.seed = static_cast<std::uint64_t>(1000 + i);
    auto cert = construct_theorem(L, opts);
    CAPTURE(L.name());
    REQUIRE(cert.success());
    CHECK(noncommuting_pairs(cert.generators.associative_elements).empty());
    CHECK(Rational(static_cast<long>(cert.trdeg.value)) <= b_of(L, opts.sampling));
    CHECK(recheck(cert, {static_cast<std::uint64_t>(i), 5, 10000}).empty());
  }
}
