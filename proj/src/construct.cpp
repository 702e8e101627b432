#include <lieshift/construct.hpp>
#include <lieshift/errors.hpp>

#include <algorithm>
#include <map>

namespace lieshift {

// ------------------------------------------------------------------ helpers

std::vector<std::pair<std::size_t, std::size_t>> noncommuting_pairs(const std::vector<PBWElement>& elements) {
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = a + 1; b < elements.size(); ++b) {
      if (!commutator(elements[a], elements[b]).is_zero()) bad.emplace_back(a, b);
    }
  }
  return bad;
}

namespace {

bool is_invariant(const LieAlgebra& L, const PolyElement& H) {
  for (std::size_t i = 0; i < L.dim(); ++i) {
    if (!poisson(L, PolyElement::variable(L.dim(), i), H).is_zero()) return false;
  }
  return true;
}

std::string unique_label(const std::vector<std::string>& taken, std::string base) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += "'";
  return base;
}

/// Index k if v = c e_k for a single k.
std::optional<std::size_t> coordinate_direction(const Vector& v) {
  std::optional<std::size_t> k;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (k) return std::nullopt;
    k = i;
  }
  return k;
}

std::optional<std::size_t> unit_index(const Vector& v) {
  auto k = coordinate_direction(v);
  if (k && v[*k].is_one()) return k;
  return std::nullopt;
}

PBWElement z_power(const PBWAlgebraPtr& U, std::size_t z, int k) {
  Exponent e(U->nvars(), 0);
  e[z] = k;
  return PBWElement::monomial(U, e);
}

}  // namespace

// ------------------------------------------------------------------ MF

GeneratorSet mf_subalgebra(const LieAlgebra& L, const std::vector<PolyElement>& casimirs, const LinearForm& gamma) {
  if (gamma.coefficients.size() != L.dim()) throw InputError("linear form has wrong length");
  GeneratorSet G;
  for (std::size_t c = 0; c < casimirs.size(); ++c) {
    const PolyElement& H = casimirs[c];
    if (!is_invariant(L, H)) throw VerificationError("invariant " + std::to_string(c + 1) + " is not ad-invariant");
    for (int k = 0; k < std::max(H.degree(), 1); ++k) {
      PolyElement s = gamma_shift(H, gamma, k);
      if (s.is_zero() || s.is_constant()) continue;
      G.add(s, "shift " + std::to_string(k) + " of invariant " + std::to_string(c + 1));
    }
  }
  const auto& P = G.poisson_elements;
  for (std::size_t a = 0; a < P.size(); ++a) {
    for (std::size_t b = a + 1; b < P.size(); ++b) {
      if (!poisson(L, P[a], P[b]).is_zero()) {
        throw VerificationError("shifts " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                                " do not Poisson-commute");
      }
    }
  }
  return G;
}

LinearForm sample_regular_form(const LieAlgebra& L, const SamplingOptions& opts, std::size_t ind) {
  constexpr int kAttempts = 100;
  for (int a = 0; a < kAttempts; ++a) {
    LinearForm g{draw_point(L.dim(), L.field(), opts, a, 1).point};
    if (is_regular(L, g, ind)) return g;
  }
  throw VerificationError("no regular linear form found among sampled points");
}

QuantumMF quantum_mf(const PBWAlgebraPtr& U, const std::vector<PolyElement>& casimirs, const LinearForm& gamma) {
  if (U->nvars() != U->lie().dim()) throw InputError("shift of argument needs an unspecialized enveloping algebra");
  QuantumMF out;
  out.poisson = mf_subalgebra(U->lie(), casimirs, gamma);
  out.generators.flavor = Flavor::associative;
  out.symbols_match = true;
  for (std::size_t k = 0; k < out.poisson.size(); ++k) {
    const PolyElement& P = out.poisson.poisson_elements[k];
    PBWElement u = symmetrize(U, P);
    out.generators.add(u, "symmetrized " + out.poisson.provenance[k]);
    if (!(principal_symbol(u) == P.homogeneous_part(P.degree()))) out.symbols_match = false;
  }
  auto bad = noncommuting_pairs(out.generators.associative_elements);
  out.commutative = bad.empty();
  for (auto [a, b] : bad) {
    out.failures.push_back("symmetrized generators " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                           " do not commute");
  }
  if (!out.symbols_match) out.failures.push_back("principal symbols differ from the Poisson generators");
  return out;
}

// ------------------------------------------------------------------ Heisenberg

SplitFrame split_frame(const LieAlgebra& L, const HeisenbergSplit& split, const Subspace& l) {
  const std::size_t n = L.dim();
  SplitFrame f;
  Subspace zs = Subspace::span(n, {split.z});
  const bool has_z = l.contains(split.z);
  std::vector<Vector> lprime;
  Subspace acc = has_z ? zs : Subspace(n);
  for (const auto& b : l.basis()) {
    if (acc.contains(b)) continue;
    lprime.push_back(b);
    acc = acc.sum(Subspace::span(n, {b}));
  }
  f.basis = lprime;
  f.basis.insert(f.basis.end(), split.x.begin(), split.x.end());
  f.basis.insert(f.basis.end(), split.y.begin(), split.y.end());
  f.basis.push_back(split.z);
  if (f.basis.size() != n || Subspace::span(n, f.basis).dim() != n) {
    throw VerificationError("l, x, y and z do not form a basis of q");
  }
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) {
    auto u = unit_index(f.basis[k]);
    labels.push_back(unique_label(labels, u ? L.labels()[*u] : "w" + std::to_string(k + 1)));
  }
  f.algebra = LieAlgebra(L.field(), labels, L.name());
  Matrix B = Matrix::from_columns(f.basis, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto c = solve(B, L.bracket(f.basis[i], f.basis[j]));
      if (!c) throw VerificationError("bracket not expressible in the new basis");
      f.algebra.set_bracket(i, j, *c);
    }
  }
  const std::size_t s = lprime.size(), m = split.n();
  for (std::size_t i = 0; i < s; ++i) f.l_indices.push_back(i);
  for (std::size_t i = 0; i < m; ++i) {
    f.x_indices.push_back(s + i);
    f.y_indices.push_back(s + m + i);
  }
  f.z_index = n - 1;
  if (has_z) f.l_indices.push_back(f.z_index);
  f.split.l_basis = Subspace::coordinate(n, f.l_indices);
  for (std::size_t i = 0; i < m; ++i) {
    f.split.x.push_back(unit_vector(n, f.x_indices[i]));
    f.split.y.push_back(unit_vector(n, f.y_indices[i]));
  }
  f.split.z = unit_vector(n, f.z_index);
  f.algebra.annotations().central = std::vector<std::size_t>{f.z_index};
  f.U = PBWAlgebra::create(f.algebra, {f.z_index});
  return f;
}

PBWElement hat_map(const PBWAlgebraPtr& U, const HeisenbergSplit& split, const Vector& xi) {
  const LieAlgebra& L = U->lie();
  auto k = coordinate_direction(split.z);
  if (!k || !U->is_laurent(*k)) throw InputError("hat map needs z to be an invertible basis direction");
  Exponent inv(U->nvars(), 0);
  inv[*k] = -1;
  PBWElement zinv = PBWElement::monomial(U, inv, split.z[*k].inverse());
  PBWElement corr(U);
  for (std::size_t i = 0; i < split.n(); ++i) {
    corr += PBWElement::from_vector(U, L.bracket(xi, split.x[i])) * PBWElement::from_vector(U, split.y[i]);
    corr = corr - PBWElement::from_vector(U, L.bracket(xi, split.y[i])) * PBWElement::from_vector(U, split.x[i]);
  }
  return PBWElement::from_vector(U, xi) + (zinv * corr).scale(Rational(1, 2));
}

HatLemmaReport verify_hat_lemmas(const LieAlgebra& L, const HeisenbergSplit& split) {
  HatLemmaReport r;
  r.failures = check_split(L, split);
  if (!r.ok()) return r;
  SplitFrame f = split_frame(L, split, split.l_basis);
  const auto& labels = f.algebra.labels();
  std::vector<std::size_t> h_idx = f.x_indices;
  h_idx.insert(h_idx.end(), f.y_indices.begin(), f.y_indices.end());
  h_idx.push_back(f.z_index);
  std::vector<PBWElement> hats;
  for (auto a : f.l_indices) hats.push_back(hat_map(f.U, f.split, unit_vector(L.dim(), a)));
  for (std::size_t a = 0; a < hats.size(); ++a) {
    for (auto v : h_idx) {
      ++r.checks;
      if (!commutator(PBWElement::generator(f.U, v), hats[a]).is_zero()) {
        r.failures.push_back("[" + labels[v] + ", hat " + labels[f.l_indices[a]] + "] != 0");
      }
    }
  }
  for (std::size_t a = 0; a < hats.size(); ++a) {
    for (std::size_t b = a + 1; b < hats.size(); ++b) {
      ++r.checks;
      Vector br = f.algebra.structure(f.l_indices[a], f.l_indices[b]);
      if (!(commutator(hats[a], hats[b]) == hat_map(f.U, f.split, br))) {
        r.failures.push_back("[hat " + labels[f.l_indices[a]] + ", hat " + labels[f.l_indices[b]] +
                             "] != hat of the bracket");
      }
    }
  }
  return r;
}

LiftResult heisenberg_lift(const LieAlgebra& L, const SplitFrame& frame, const GeneratorSet& A_l,
                           const SamplingOptions& opts, PBWAlgebraPtr target) {
  LiftResult out;
  out.U = target ? std::move(target) : PBWAlgebra::create(L);
  if (out.U->nvars() != L.dim()) throw InputError("target algebra does not match q");
  if (A_l.flavor != Flavor::associative) throw InputError("heisenberg_lift expects elements of U(l)");
  const std::size_t n = L.dim(), z = frame.z_index;
  std::vector<PBWElement> hats;
  for (auto a : frame.l_indices) hats.push_back(hat_map(frame.U, frame.split, unit_vector(n, a)));
  std::vector<PBWElement> back;
  for (const auto& b : frame.basis) back.push_back(PBWElement::from_vector(out.U, b));
  out.generators.flavor = Flavor::associative;

  auto push = [&](const PBWElement& in_frame, const std::string& note) {
    if (in_frame.has_negative_exponents()) throw VerificationError("z^-1 left after clearing");
    out.generators.add(map_generators(in_frame, back, out.U), note);
  };

  const PBWElement zgen = PBWElement::generator(frame.U, z);
  bool have_z = false;
  for (std::size_t g = 0; g < A_l.associative_elements.size(); ++g) {
    const PBWElement& a = A_l.associative_elements[g];
    if (a.algebra()->nvars() != frame.l_indices.size()) throw InputError("generator does not live in U(l)");
    PBWElement img = map_generators(a, hats, frame.U);
    int lowest = 0;
    for (const auto& [e, c] : img.terms()) lowest = std::min(lowest, e[z]);
    if (lowest < 0) img = z_power(frame.U, z, -lowest) * img;
    if (img == zgen) have_z = true;
    std::string note = "hat of l-generator " + std::to_string(g + 1);
    if (lowest < 0) note += " times z^" + std::to_string(-lowest);
    push(img, note);
  }
  for (std::size_t i = 0; i < frame.x_indices.size(); ++i) {
    push(PBWElement::generator(frame.U, frame.x_indices[i]), "x" + std::to_string(i + 1));
  }
  if (!have_z) push(zgen, "z");

  for (auto [a, b] : noncommuting_pairs(out.generators.associative_elements)) {
    out.failures.push_back("lifted generators " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                           " do not commute");
  }
  out.trdeg = trdeg_jacobian(out.generators, L.field(), opts);
  return out;
}

// ------------------------------------------------------------------ abelian ideal

HatAlgebra abelian_qhat(const LieAlgebra& L, const Subspace& h, const SamplingOptions& opts) {
  const std::size_t n = L.dim();
  if (h.dim() == 0) throw InputError("the ideal must be nonzero");
  if (!is_abelian(L, h)) throw InputError("h is not abelian");
  if (!is_ideal(L, h)) throw InputError("h is not an ideal");
  HatAlgebra H;
  H.ideal_basis = h.basis();
  const std::size_t r = h.dim();
  std::vector<std::string> names;
  for (std::size_t j = 0; j < r; ++j) {
    auto u = unit_index(H.ideal_basis[j]);
    names.push_back(unique_label(names, u ? L.labels()[*u] : "t" + std::to_string(j + 1)));
  }
  H.base_field = Field::extend(L.field(), names);
  const FieldPtr& F = H.base_field;
  H.complement = h.complement_indices();
  const std::size_t m = H.complement.size();

  // mu(i, l) = [xi_i, eta_l] read as a linear function on h*.
  auto as_linear = [&](const Vector& w) {
    auto c = h.coordinates(w);
    if (!c) throw VerificationError("h is not an ideal");
    FieldElement s;
    for (std::size_t j = 0; j < r; ++j) {
      if (!(*c)[j].is_zero()) s += (*c)[j] * F->variable(j);
    }
    return s;
  };
  Matrix MT(r, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t l = 0; l < r; ++l) {
      MT.at(l, i) = as_linear(L.bracket(L.basis_vector(H.complement[i]), H.ideal_basis[l]));
    }
  }
  H.qhat_vectors = kernel_basis(MT);
  const std::size_t p = H.qhat_vectors.size();

  std::vector<std::string> labels;
  for (std::size_t k = 0; k < p; ++k) labels.push_back("b" + std::to_string(k + 1));
  labels.push_back("delta");
  H.algebra = LieAlgebra(F, labels, L.name().empty() ? "qhat" : L.name() + "-hat");
  H.delta_index = p;

  std::vector<Vector> cols;
  for (auto c : H.complement) cols.push_back(L.basis_vector(c));
  cols.insert(cols.end(), H.ideal_basis.begin(), H.ideal_basis.end());
  const Matrix B = Matrix::from_columns(cols, n);
  const Matrix C = p ? Matrix::from_columns(H.qhat_vectors, m) : Matrix(m, 0);
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = a + 1; b < p; ++b) {
      Vector W(n);
      for (std::size_t i = 0; i < m; ++i) {
        const FieldElement& ca = H.qhat_vectors[a][i];
        if (ca.is_zero()) continue;
        for (std::size_t j = 0; j < m; ++j) {
          const FieldElement& cb = H.qhat_vectors[b][j];
          if (cb.is_zero() || i == j) continue;
          W = add(W, scale(L.structure(H.complement[i], H.complement[j]), ca * cb));
        }
      }
      auto coords = solve(B, W);
      if (!coords) throw VerificationError("bracket outside q");
      Vector w(coords->begin(), coords->begin() + static_cast<std::ptrdiff_t>(m));
      FieldElement s;
      for (std::size_t l = 0; l < r; ++l) s += (*coords)[m + l] * F->variable(l);
      auto k = solve(C, w);
      if (!k) throw VerificationError("complement part of [b" + std::to_string(a + 1) + ", b" +
                                      std::to_string(b + 1) + "] is not in q-hat");
      Vector v = *k;
      v.push_back(s);
      H.algebra.set_bracket(a, b, v);
    }
  }
  H.algebra.annotations().central = std::vector<std::size_t>{p};
  auto rep = validate(H.algebra);
  if (!rep.ok()) throw VerificationError("q-hat fails validation: " + rep.failures.front());

  // min over sampled alpha in h* of dim q_alpha, q_alpha = {xi : alpha([xi, h]) = 0}.
  std::size_t best = n;
  for (int s = 0; s < opts.samples; ++s) {
    std::optional<std::size_t> rk;
    for (int attempt = 0; attempt < 50 && !rk; ++attempt) {
      SamplePoint pt = draw_point(r, L.field(), opts, s, attempt);
      Matrix A(n, r);
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < r; ++j) {
          auto c = h.coordinates(L.bracket(L.basis_vector(k), H.ideal_basis[j]));
          A.at(k, j) = dot(*c, pt.point);
        }
      }
      auto spec = specialize_matrix(A, pt.tower);
      if (spec) rk = rank(*spec);
    }
    if (!rk) throw ArithmeticError("could not sample h*");
    best = std::min(best, n - *rk);
  }
  H.expected_dim = best - r + 1;
  if (H.algebra.dim() != H.expected_dim) {
    throw VerificationError("dim q-hat = " + std::to_string(H.algebra.dim()) + " but min dim q_alpha - dim h + 1 = " +
                            std::to_string(H.expected_dim));
  }
  Rational bq = b_of(L, opts), bh = b_of(H.algebra, opts);
  if (bh != bq - Rational(static_cast<long>(r)) + 1) {
    throw VerificationError("b(q-hat) = " + to_string(bh) + " but b(q) - dim h + 1 = " +
                            to_string(bq - Rational(static_cast<long>(r)) + 1));
  }
  return H;
}

SpecializeResult specialize_search(const GeneratorSet& A, std::size_t var, const SamplingOptions& opts,
                                   std::vector<FieldElement> candidates) {
  if (A.flavor != Flavor::associative) throw InputError("specialization acts on U(q) generators");
  SpecializeResult out;
  if (A.associative_elements.empty()) {
    out.success = true;
    out.value = 1;
    out.generators.flavor = Flavor::associative;
    return out;
  }
  const PBWAlgebraPtr& U = A.associative_elements.front().algebra();
  if (!U->is_central(var)) throw InputError("specialized variable must be central");
  if (!noncommuting_pairs(A.associative_elements).empty()) throw VerificationError("generator set is not commutative");
  if (candidates.empty()) {
    for (int c = 1; c <= 20; ++c) candidates.emplace_back(c);
  }
  out.trdeg_before = trdeg_jacobian(A, U->field(), opts).value;
  for (const auto& c : candidates) {
    GeneratorSet G;
    G.flavor = Flavor::associative;
    for (std::size_t k = 0; k < A.size(); ++k) {
      PBWElement s = specialize_central(A.associative_elements[k], var, c);
      if (s.is_zero() || s.is_constant()) continue;
      G.add(s, A.provenance[k]);
    }
    std::size_t after = G.size() ? trdeg_jacobian(G, U->field(), opts).value : 0;
    if (after + 1 >= out.trdeg_before) {
      out.success = true;
      out.value = c;
      out.generators = std::move(G);
      out.trdeg_after = after;
      return out;
    }
  }
  return out;
}

std::vector<PBWElement> lift_from_qhat(const HatAlgebra& H, const PBWAlgebraPtr& Uq,
                                       const std::vector<PBWElement>& elements) {
  const FieldPtr& F = H.base_field;
  const std::size_t r = H.ideal_basis.size();
  std::vector<PBWElement> etas;
  for (const auto& eta : H.ideal_basis) etas.push_back(PBWElement::from_vector(Uq, eta));
  Subspace hspan = Subspace::span(Uq->nvars(), H.ideal_basis);
  std::vector<PBWElement> out;
  for (const auto& u : elements) {
    const PBWAlgebraPtr& A = u.algebra();
    // Coefficients stay on the left: elements of q-hat commute with K(h*).
    std::map<Exponent, FieldElement> total;
    for (const auto& [e, coeff] : u.terms()) {
      std::map<Exponent, FieldElement> state{{Exponent(Uq->nvars(), 0), coeff}};
      for (std::size_t var : A->order()) {
        if (e[var] < 0) throw ArithmeticError("Laurent exponent in a q-hat element");
        const std::size_t b = A->lie_index()[var];
        if (b >= H.qhat_vectors.size()) throw ArithmeticError("delta survived specialization");
        const Vector& c = H.qhat_vectors[b];
        for (int rep = 0; rep < e[var]; ++rep) {
          std::map<Exponent, FieldElement> next;
          for (const auto& [m, f] : state) {
            for (std::size_t i = 0; i < c.size(); ++i) {
              if (c[i].is_zero()) continue;
              FieldElement fc = f * c[i];
              for (const auto& [m2, g] : Uq->monomial_times_generator(m, H.complement[i])) {
                next[m2] += fc * g;
              }
            }
          }
          std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
          state = std::move(next);
        }
      }
      for (const auto& [m, f] : state) total[m] += f;
    }
    std::erase_if(total, [](const auto& kv) { return kv.second.is_zero(); });
    if (total.empty()) continue;
    MPoly D = MPoly::constant(r, 1);
    std::map<Exponent, std::pair<MPoly, MPoly>> fr;
    for (const auto& [m, f] : total) {
      auto nd = as_fraction(f, F);
      D = lcm(D, nd.second);
      fr.emplace(m, std::move(nd));
    }
    PBWElement lifted(Uq);
    for (const auto& [m, nd] : fr) {
      auto q = divide_exact(D, nd.second);
      if (!q) throw ArithmeticError("denominator does not divide the common denominator");
      MPoly P = nd.first * *q;
      PBWElement coeff(Uq);
      for (const auto& [pe, pc] : P.terms()) {
        PBWElement t = PBWElement::constant(Uq, pc);
        for (std::size_t j = 0; j < r; ++j) {
          if (pe[j] > 0) t = t * etas[j].pow(pe[j]);
        }
        coeff += t;
      }
      lifted += coeff * PBWElement::monomial(Uq, m);
    }
    if (!ad_invariant(lifted, hspan)) throw VerificationError("lifted element is not h-invariant");
    out.push_back(std::move(lifted));
  }
  return out;
}

// ------------------------------------------------------------------ orchestrator

namespace {

struct Context {
  const ConstructOptions& opts;
  std::vector<TraceStep>& trace;
  void note(int depth, std::string label, std::string detail = "") {
    trace.push_back({depth, std::move(label), std::move(detail)});
  }
};

GeneratorSet build(const LieAlgebra& L, const PBWAlgebraPtr& U, int depth, Context& ctx,
                   const std::optional<LinearForm>& gamma_in);

GeneratorSet reductive_case(const LieAlgebra& L, const PBWAlgebraPtr& U, int depth, Context& ctx,
                            const std::optional<LinearForm>& gamma_in) {
  const auto& so = ctx.opts.sampling;
  const std::size_t ind = index(L, so);
  const Rational b = b_of(L, so);
  LinearForm gamma;
  if (gamma_in) {
    gamma = *gamma_in;
    ctx.note(depth, "gamma", is_regular(L, gamma, ind) ? "given, regular" : "given, not regular");
  } else {
    gamma = sample_regular_form(L, so, ind);
    ctx.note(depth, "gamma", "sampled regular form");
  }
  std::vector<PolyElement> casimirs;
  for (int d = 1; d <= ctx.opts.max_deg; ++d) {
    casimirs = invariant_generators(L, d);
    auto mf = mf_subalgebra(L, casimirs, gamma);
    if (Rational(static_cast<long>(trdeg_jacobian(mf, L.field(), so).value)) == b) break;
  }
  ctx.note(depth, "reductive", std::to_string(casimirs.size()) + " invariant generators");
  QuantumMF q = quantum_mf(U, casimirs, gamma);
  if (!q.commutative) {
    throw VerificationError("symmetrized shift of argument generators do not commute: " + q.failures.front());
  }
  return q.generators;
}

GeneratorSet abelian_case(const LieAlgebra& L, const PBWAlgebraPtr& U, const Subspace& h, int depth, Context& ctx,
                          const std::optional<LinearForm>& gamma_in) {
  const auto& so = ctx.opts.sampling;
  HatAlgebra H = abelian_qhat(L, h, so);
  ctx.note(depth, "abelian ideal",
           "dim h = " + std::to_string(h.dim()) + ", q-hat of dimension " + std::to_string(H.algebra.dim()) +
               " over " + H.base_field->describe());
  auto Uh = PBWAlgebra::create(H.algebra);
  if (gamma_in) ctx.note(depth, "gamma", "not carried to q-hat");
  GeneratorSet A = build(H.algebra, Uh, depth + 1, ctx, std::nullopt);
  PBWElement delta = PBWElement::generator(Uh, H.delta_index);
  if (std::none_of(A.associative_elements.begin(), A.associative_elements.end(),
                   [&](const PBWElement& u) { return u == delta; })) {
    A.add(delta, "delta");
  }
  auto spec = specialize_search(A, H.delta_index, so);
  if (!spec.success) throw VerificationError("no specialization of delta keeps the transcendence degree");
  if (!(spec.value == FieldElement(1))) {
    throw VerificationError("delta = 1 loses transcendence degree; the lift needs delta = 1");
  }
  ctx.note(depth, "specialize delta",
           "c = 1, trdeg " + std::to_string(spec.trdeg_before) + " -> " + std::to_string(spec.trdeg_after));
  GeneratorSet out;
  out.flavor = Flavor::associative;
  auto lifted = lift_from_qhat(H, U, spec.generators.associative_elements);
  for (std::size_t k = 0; k < lifted.size(); ++k) out.add(lifted[k], "lift of q-hat generator " + std::to_string(k + 1));
  for (std::size_t j = 0; j < H.ideal_basis.size(); ++j) {
    out.add(PBWElement::from_vector(U, H.ideal_basis[j]), "ideal basis " + L.render(H.ideal_basis[j]));
  }
  return out;
}

GeneratorSet heisenberg_case(const LieAlgebra& L, const PBWAlgebraPtr& U, const NilradicalClass& cls, int depth,
                             Context& ctx, const std::optional<LinearForm>& gamma_in) {
  const auto& so = ctx.opts.sampling;
  const bool algebraic = cls.levi_stabilizes_v;
  SplitFrame f = split_frame(L, cls.split, cls.split.l_basis);
  std::vector<std::string> labels;
  for (auto i : f.l_indices) labels.push_back(f.algebra.labels()[i]);
  ctx.note(depth, algebraic ? "heisenberg (algebraic)" : "heisenberg (ltilde)",
           "n = " + std::to_string(cls.split.n()) + ", l of dimension " + std::to_string(f.l_indices.size()));
  GeneratorSet A_l;
  A_l.flavor = Flavor::associative;
  std::optional<LieAlgebra> lsub;
  if (!f.l_indices.empty()) {
    lsub = subalgebra(f.algebra, Subspace::coordinate(L.dim(), f.l_indices), labels);
    std::optional<LinearForm> restricted;
    if (gamma_in) {
      restricted = LinearForm{};
      for (auto i : f.l_indices) restricted->coefficients.push_back((*gamma_in)(f.basis[i]));
    }
    A_l = build(*lsub, PBWAlgebra::create(*lsub), depth + 1, ctx, restricted);
  }
  LiftResult lift = heisenberg_lift(L, f, A_l, so, U);
  if (!lift.failures.empty()) throw VerificationError(lift.failures.front());
  if (algebraic) {
    Rational bl = lsub ? b_of(*lsub, so) : Rational(0);
    Rational target = bl + static_cast<long>(cls.split.n()) + 1;
    if (Rational(static_cast<long>(lift.trdeg.value)) != target) {
      throw VerificationError("lift has trdeg " + std::to_string(lift.trdeg.value) + ", expected b(l) + n + 1 = " +
                              to_string(target));
    }
  }
  return lift.generators;
}

GeneratorSet build(const LieAlgebra& L, const PBWAlgebraPtr& U, int depth, Context& ctx,
                   const std::optional<LinearForm>& gamma_in) {
  if (depth > ctx.opts.depth) throw VerificationError("recursion depth cap exceeded");
  auto rep = validate(L);
  if (!rep.ok()) throw InputError("invalid algebra: " + rep.failures.front());
  if (is_reductive(L)) return reductive_case(L, U, depth, ctx, gamma_in);
  NilradicalClass cls = classify_nilradical(L);
  switch (cls.kind) {
    case NilradicalKind::abelian_ideal:
      return abelian_case(L, U, cls.ideal, depth, ctx, gamma_in);
    case NilradicalKind::heisenberg:
      return heisenberg_case(L, U, cls, depth, ctx, gamma_in);
    case NilradicalKind::line:
      throw VerificationError("nilradical is a central line and q is not reductive");
    case NilradicalKind::trivial:
      break;
  }
  throw VerificationError("could not classify the nilradical");
}

int max_degree(const GeneratorSet& G) {
  int d = 0;
  for (const auto& u : G.associative_elements) d = std::max(d, u.degree());
  return d;
}

}  // namespace

ConstructionCertificate construct_theorem(const LieAlgebra& L, const ConstructOptions& opts) {
  ConstructionCertificate cert;
  cert.algebra = L;
  cert.U = PBWAlgebra::create(L);
  cert.generators.flavor = Flavor::associative;
  Context ctx{opts, cert.trace};
  try {
    cert.b_target = b_of(L, opts.sampling);
    if (opts.gamma && opts.gamma->coefficients.size() != L.dim()) throw InputError("gamma has wrong length");
    cert.generators = build(L, cert.U, 0, ctx, opts.gamma);
    cert.degree_bound = max_degree(cert.generators);
    auto bad = noncommuting_pairs(cert.generators.associative_elements);
    cert.commutative = bad.empty();
    for (auto [a, b] : bad) {
      cert.failures.push_back("generators " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                              " do not commute");
    }
    cert.trdeg = trdeg_jacobian(cert.generators, L.field(), opts.sampling);
    if (Rational(static_cast<long>(cert.trdeg.value)) != cert.b_target) {
      cert.failures.push_back("trdeg " + std::to_string(cert.trdeg.value) + " != b(q) = " + to_string(cert.b_target));
    }
  } catch (const Error& e) {
    cert.failures.push_back(e.what());
  }
  return cert;
}

std::vector<std::string> recheck(const ConstructionCertificate& cert, const SamplingOptions& opts) {
  std::vector<std::string> out;
  for (const auto& u : cert.generators.associative_elements) {
    if (u.algebra() != cert.U) out.push_back("generator outside the certificate's U(q)");
  }
  if (!out.empty()) return out;
  for (auto [a, b] : noncommuting_pairs(cert.generators.associative_elements)) {
    out.push_back("generators " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " do not commute");
  }
  auto t = trdeg_jacobian(cert.generators, cert.algebra.field(), opts);
  Rational b = b_of(cert.algebra, opts);
  if (Rational(static_cast<long>(t.value)) != b) {
    out.push_back("trdeg " + std::to_string(t.value) + " != b(q) = " + to_string(b));
  }
  return out;
}

// ------------------------------------------------------------------ maximality

namespace {

void products_up_to(const std::vector<PBWElement>& gens, std::size_t from, int budget, const PBWElement& acc,
                    std::vector<PBWElement>& out) {
  out.push_back(acc);
  for (std::size_t g = from; g < gens.size(); ++g) {
    int dg = gens[g].degree();
    if (dg <= 0 || dg > budget) continue;
    products_up_to(gens, g, budget - dg, acc * gens[g], out);
  }
}

}  // namespace

MaximalityReport maximality_probe(const GeneratorSet& A, int d, const SamplingOptions& opts) {
  if (A.flavor != Flavor::associative || A.associative_elements.empty()) {
    throw InputError("maximality probe needs a nonempty set in U(q)");
  }
  const auto& gens = A.associative_elements;
  const PBWAlgebraPtr& U = gens.front().algebra();
  if (!noncommuting_pairs(gens).empty()) throw VerificationError("generator set is not commutative");
  MaximalityReport r;
  r.degree = d;
  r.centralizer = centralizer_up_to_degree(U, gens, d);

  std::vector<PBWElement> prods;
  products_up_to(gens, 0, d, PBWElement::constant(U, 1), prods);
  auto monos = monomials_up_to_degree(U->nvars(), d);
  std::map<Exponent, std::size_t> pos;
  for (std::size_t i = 0; i < monos.size(); ++i) pos[monos[i]] = i;
  auto coords = [&](const PBWElement& u) -> std::optional<Vector> {
    Vector v(monos.size());
    for (const auto& [e, c] : u.terms()) {
      auto it = pos.find(e);
      if (it == pos.end()) return std::nullopt;
      v[it->second] = c;
    }
    return v;
  };
  std::vector<Vector> span;
  for (const auto& p : prods) {
    if (auto v = coords(p)) span.push_back(*v);
  }
  Subspace S = Subspace::span(monos.size(), span);
  for (const auto& c : r.centralizer) {
    auto v = coords(c);
    if (!v || S.contains(*v)) continue;
    r.new_elements.push_back(c);
    S = S.sum(Subspace::span(monos.size(), {*v}));
  }
  std::vector<PBWElement> enlarged = gens;
  enlarged.insert(enlarged.end(), r.new_elements.begin(), r.new_elements.end());
  r.enlarged_commutative = noncommuting_pairs(enlarged).empty();
  if (!r.new_elements.empty()) {
    GeneratorSet E = GeneratorSet::of_associative(enlarged);
    r.trdeg_increases = trdeg_jacobian(E, U->field(), opts).value > trdeg_jacobian(A, U->field(), opts).value;
  }
  return r;
}

}  // namespace lieshift
