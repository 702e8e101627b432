#include <lieshift/errors.hpp>
#include <lieshift/invariants.hpp>

#include <algorithm>
#include <map>
#include <random>

namespace lieshift {

namespace {

constexpr int kMaxAttempts = 50;

long draw_nonzero(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  for (;;) {
    long v = dist(rng);
    if (v != 0 || bound == 0) return v;
  }
}

}  // namespace

SamplePoint draw_point(std::size_t n, const FieldPtr& field, const SamplingOptions& opts, int index, int attempt) {
  std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(attempt)};
  std::mt19937_64 rng(seq);
  const long bound = std::max(1L, opts.bound);
  SamplePoint p;
  p.point.reserve(n);
  for (std::size_t i = 0; i < n; ++i) p.point.emplace_back(Rational(draw_nonzero(rng, bound)));
  std::vector<FieldPtr> chain;
  for (FieldPtr f = field; f && f->level() > 0; f = f->base()) chain.push_back(f);
  std::reverse(chain.begin(), chain.end());
  for (const auto& f : chain) {
    std::vector<Rational> vals;
    for (std::size_t k = 0; k < f->num_variables(); ++k) vals.emplace_back(draw_nonzero(rng, bound));
    p.tower.push_back(std::move(vals));
  }
  return p;
}

std::optional<Matrix> specialize_matrix(const Matrix& m, const TowerPoint& point) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.at(i, j).is_rational()) {
        out.at(i, j) = m.at(i, j);
        continue;
      }
      auto v = specialize_tower(m.at(i, j), point);
      if (!v) return std::nullopt;
      out.at(i, j) = *v;
    }
  }
  return out;
}

std::optional<PolyElement> specialize_poly(const PolyElement& p, const TowerPoint& point) {
  PolyElement out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (c.is_rational()) {
      out.add_term(e, c);
      continue;
    }
    auto v = specialize_tower(c, point);
    if (!v) return std::nullopt;
    out.add_term(e, *v);
  }
  return out;
}

std::size_t SampledRank::agreement() const {
  return static_cast<std::size_t>(std::count(ranks.begin(), ranks.end(), max_rank));
}

namespace {

/// Runs `rank_at` on successive sample points, redrawing when it reports a
/// vanishing denominator.
template <class F>
SampledRank sample_max_rank(std::size_t n, const FieldPtr& field, const SamplingOptions& opts, F rank_at) {
  if (opts.samples < 1) throw InputError("at least one sample is required");
  SampledRank r;
  r.seed = opts.seed;
  bool have = false;
  for (int s = 0; s < opts.samples; ++s) {
    std::optional<std::size_t> rk;
    SamplePoint p;
    for (int attempt = 0; attempt < kMaxAttempts && !rk; ++attempt) {
      p = draw_point(n, field, opts, s, attempt);
      rk = rank_at(p);
    }
    if (!rk) throw ArithmeticError("could not find a sample point avoiding all denominators");
    r.ranks.push_back(*rk);
    if (!have || *rk > r.max_rank) {
      r.max_rank = *rk;
      r.witness = p;
      have = true;
    }
  }
  return r;
}

}  // namespace

SampledRank index_sampled(const LieAlgebra& L, const SamplingOptions& opts) {
  const std::size_t n = L.dim();
  auto r = sample_max_rank(n, L.field(), opts, [&](const SamplePoint& p) -> std::optional<std::size_t> {
    auto m = specialize_matrix(coadjoint_form(L, LinearForm{p.point}), p.tower);
    if (!m) return std::nullopt;
    return rank(*m);
  });
  r.value = n - r.max_rank;
  return r;
}

std::size_t index(const LieAlgebra& L, const SamplingOptions& opts) { return index_sampled(L, opts).value; }

Rational b_of(const LieAlgebra& L, const SamplingOptions& opts) {
  Rational b(static_cast<long>(L.dim() + index(L, opts)), 2);
  b.canonicalize();
  return b;
}

Rational b_rel(const LieAlgebra& L, const Subspace& l, const SamplingOptions& opts) {
  if (!is_subalgebra(L, l)) throw InputError("b-rel needs a subalgebra");
  LieAlgebra sub = subalgebra(L, l);
  return b_of(L, opts) - b_of(sub, opts) + Rational(static_cast<long>(index(sub, opts)));
}

namespace {

/// Homogeneous invariants of degree d, reduced echelon basis.
std::vector<PolyElement> invariants_of_degree(const LieAlgebra& L, int d) {
  const std::size_t n = L.dim();
  auto monos = monomials_of_degree(n, d);
  std::map<std::pair<std::size_t, Exponent>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, FieldElement>>> cols(monos.size());
  for (std::size_t m = 0; m < monos.size(); ++m) {
    const Exponent& e = monos[m];
    // {x_i, x^e} = sum_j e_j x^(e - e_j) [x_i, x_j]
    for (std::size_t i = 0; i < n; ++i) {
      std::map<Exponent, FieldElement> acc;
      for (std::size_t j = 0; j < n; ++j) {
        if (e[j] == 0) continue;
        const Vector& br = L.structure(i, j);
        for (std::size_t k = 0; k < n; ++k) {
          if (br[k].is_zero()) continue;
          Exponent f = e;
          --f[j];
          ++f[k];
          acc[f] += br[k] * FieldElement(e[j]);
        }
      }
      for (const auto& [f, c] : acc) {
        if (c.is_zero()) continue;
        auto it = row_of.try_emplace({i, f}, row_of.size()).first;
        cols[m].emplace_back(it->second, c);
      }
    }
  }
  std::vector<Vector> ker;
  if (row_of.empty()) {
    for (std::size_t m = 0; m < monos.size(); ++m) ker.push_back(unit_vector(monos.size(), m));
  } else {
    Matrix M(row_of.size(), monos.size());
    for (std::size_t m = 0; m < monos.size(); ++m) {
      for (const auto& [r, c] : cols[m]) M.at(r, m) = c;
    }
    ker = kernel_basis(M);
  }
  std::vector<PolyElement> out;
  if (ker.empty()) return out;
  auto red = row_reduce(Matrix::from_rows(ker, monos.size()));
  for (std::size_t r = 0; r < red.pivots.size(); ++r) {
    Vector v = clear_denominators(red.form.row(r));
    PolyElement p(n);
    for (std::size_t m = 0; m < monos.size(); ++m) {
      if (!v[m].is_zero()) p.add_term(monos[m], v[m]);
    }
    out.push_back(std::move(p));
  }
  return out;
}

/// Coefficient vector of a homogeneous polynomial on the degree-d monomials.
Vector coords(const PolyElement& p, const std::vector<Exponent>& monos) {
  Vector v(monos.size());
  for (std::size_t m = 0; m < monos.size(); ++m) v[m] = p.coefficient(monos[m]);
  return v;
}

/// All products of the given homogeneous generators with total degree d.
void products_of_degree(const std::vector<PolyElement>& gens, std::size_t from, int d, const PolyElement& acc,
                        std::vector<PolyElement>& out) {
  if (d == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t g = from; g < gens.size(); ++g) {
    int dg = gens[g].degree();
    if (dg <= 0 || dg > d) continue;
    products_of_degree(gens, g, d - dg, acc * gens[g], out);
  }
}

}  // namespace

std::vector<PolyElement> symmetric_invariants(const LieAlgebra& L, int max_deg) {
  if (max_deg < 1) throw InputError("max degree must be at least 1");
  std::vector<PolyElement> out;
  for (int d = 1; d <= max_deg; ++d) {
    auto inv = invariants_of_degree(L, d);
    out.insert(out.end(), inv.begin(), inv.end());
  }
  return out;
}

std::vector<PolyElement> invariant_generators(const LieAlgebra& L, int max_deg) {
  if (max_deg < 1) throw InputError("max degree must be at least 1");
  const std::size_t n = L.dim();
  std::vector<PolyElement> gens;
  for (int d = 1; d <= max_deg; ++d) {
    auto inv = invariants_of_degree(L, d);
    if (inv.empty()) continue;
    auto monos = monomials_of_degree(n, d);
    std::vector<PolyElement> prods;
    products_of_degree(gens, 0, d, PolyElement::constant(n, 1), prods);
    std::vector<Vector> span_vecs;
    for (const auto& p : prods) span_vecs.push_back(coords(p, monos));
    Subspace S = Subspace::span(monos.size(), span_vecs);
    for (const auto& p : inv) {
      Vector v = coords(p, monos);
      if (S.contains(v)) continue;
      gens.push_back(p);
      S = S.sum(Subspace::span(monos.size(), {v}));
    }
  }
  return gens;
}

GeneratorSet GeneratorSet::of_poisson(std::vector<PolyElement> elements, const std::string& note) {
  GeneratorSet g;
  g.flavor = Flavor::poisson;
  for (auto& p : elements) g.add(p, note);
  return g;
}

GeneratorSet GeneratorSet::of_associative(std::vector<PBWElement> elements, const std::string& note) {
  GeneratorSet g;
  g.flavor = Flavor::associative;
  for (auto& u : elements) g.add(u, note);
  return g;
}

std::size_t GeneratorSet::size() const {
  return flavor == Flavor::poisson ? poisson_elements.size() : associative_elements.size();
}

void GeneratorSet::add(const PolyElement& p, const std::string& note) {
  if (flavor != Flavor::poisson) throw InputError("polynomial added to an associative generator set");
  if (p.is_zero()) throw InputError("generator sets hold nonzero elements");
  poisson_elements.push_back(p);
  provenance.push_back(note);
}

void GeneratorSet::add(const PBWElement& u, const std::string& note) {
  if (flavor != Flavor::associative) throw InputError("U(q) element added to a Poisson generator set");
  if (u.is_zero()) throw InputError("generator sets hold nonzero elements");
  associative_elements.push_back(u);
  provenance.push_back(note);
}

std::vector<PolyElement> GeneratorSet::symbols() const {
  if (flavor == Flavor::poisson) return poisson_elements;
  std::vector<PolyElement> out;
  for (const auto& u : associative_elements) out.push_back(principal_symbol(u));
  return out;
}

std::vector<std::string> GeneratorSet::rendered(const std::vector<std::string>& labels) const {
  std::vector<std::string> out;
  for (const auto& p : poisson_elements) out.push_back(p.to_string(labels));
  for (const auto& u : associative_elements) out.push_back(u.to_string());
  return out;
}

SampledRank trdeg_jacobian(const std::vector<PolyElement>& polys, const FieldPtr& field,
                           const SamplingOptions& opts) {
  SampledRank r;
  if (polys.empty()) {
    r.seed = opts.seed;
    r.ranks.assign(static_cast<std::size_t>(std::max(opts.samples, 1)), 0);
    return r;
  }
  const std::size_t n = polys.front().nvars();
  std::vector<std::vector<PolyElement>> grads;
  for (const auto& p : polys) {
    if (p.nvars() != n) throw InputError("polynomials live in different rings");
    std::vector<PolyElement> g;
    for (std::size_t i = 0; i < n; ++i) g.push_back(p.derivative(i));
    grads.push_back(std::move(g));
  }
  r = sample_max_rank(n, field, opts, [&](const SamplePoint& p) -> std::optional<std::size_t> {
    Matrix J(polys.size(), n);
    for (std::size_t a = 0; a < polys.size(); ++a) {
      for (std::size_t i = 0; i < n; ++i) {
        if (grads[a][i].is_zero()) continue;
        auto s = specialize_poly(grads[a][i], p.tower);
        if (!s) return std::nullopt;
        J.at(a, i) = s->evaluate(p.point);
      }
    }
    return rank(J);
  });
  r.value = r.max_rank;
  return r;
}

SampledRank trdeg_jacobian(const GeneratorSet& G, const FieldPtr& field, const SamplingOptions& opts) {
  return trdeg_jacobian(G.symbols(), field, opts);
}

bool is_regular(const LieAlgebra& L, const LinearForm& gamma, std::size_t ind) {
  return stabilizer(L, gamma).dim() == ind;
}

bool in_linear_span(const PolyElement& p, const std::vector<PolyElement>& polys) {
  std::map<Exponent, std::size_t> column;
  for (const auto& q : polys) {
    for (const auto& [e, c] : q.terms()) column.emplace(e, 0);
  }
  for (const auto& [e, c] : p.terms()) {
    if (!column.count(e)) return false;
  }
  std::size_t k = 0;
  for (auto& [e, i] : column) i = k++;
  auto coords = [&](const PolyElement& q) {
    Vector v(column.size());
    for (const auto& [e, c] : q.terms()) v[column.at(e)] = c;
    return v;
  };
  std::vector<Vector> vs;
  for (const auto& q : polys) vs.push_back(coords(q));
  return Subspace::span(column.size(), vs).contains(coords(p));
}

}  // namespace lieshift
