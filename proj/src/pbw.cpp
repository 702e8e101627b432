#include <lieshift/errors.hpp>
#include <lieshift/pbw.hpp>

#include <algorithm>
#include <numeric>

namespace lieshift {

std::size_t ExponentHash::operator()(const Exponent& e) const noexcept {
  std::size_t h = e.size();
  for (int x : e) h ^= static_cast<std::size_t>(x + 0x9e3779b9) + (h << 6) + (h >> 2);
  return h;
}

namespace {

void add_into(PBWTerms& acc, const Exponent& e, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

void add_scaled(PBWTerms& acc, const PBWTerms& t, const FieldElement& c) {
  if (c.is_zero()) return;
  for (const auto& [e, v] : t) add_into(acc, e, c.is_one() ? v : v * c);
}

int total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

PBWAlgebraPtr PBWAlgebra::create(const LieAlgebra& L, const std::vector<std::size_t>& laurent) {
  std::shared_ptr<PBWAlgebra> a(new PBWAlgebra());
  const std::size_t n = L.dim();
  a->lie_ = L;
  a->field_ = L.field();
  a->labels_ = L.labels();
  a->lie_index_.resize(n);
  std::iota(a->lie_index_.begin(), a->lie_index_.end(), 0);
  a->lin_.resize(n * n);
  a->cst_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a->lin_[i * n + j] = L.structure(i, j);
  }
  a->finish_setup(laurent);
  return a;
}

void PBWAlgebra::finish_setup(const std::vector<std::size_t>& laurent_vars) {
  const std::size_t n = nvars();
  central_.assign(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_zero(lin_[i * n + j]) || !cst_[i * n + j].is_zero()) central_[i] = false;
    }
  }
  laurent_.assign(n, false);
  for (auto v : laurent_vars) {
    if (v >= n || !central_[v]) throw InputError("Laurent variables must be central basis elements");
    laurent_[v] = true;
  }
  order_.clear();
  for (std::size_t i = 0; i < n; ++i) {
    if (!central_[i]) order_.push_back(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (central_[i]) order_.push_back(i);
  }
  position_.assign(n, 0);
  for (std::size_t p = 0; p < n; ++p) position_[order_[p]] = p;
}

PBWAlgebraPtr PBWAlgebra::specialize(std::size_t var, const FieldElement& c) const {
  if (var >= nvars() || !central_[var]) throw InputError("specialization needs a central basis element");
  const auto key = std::make_pair(var, c.to_string());
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = spec_cache_.find(key);
    if (it != spec_cache_.end()) return it->second;
  }
  std::shared_ptr<PBWAlgebra> a(new PBWAlgebra());
  const std::size_t n = nvars(), m = n - 1;
  a->lie_ = lie_;
  a->field_ = field_;
  a->specialized_ = specialized_;
  a->specialized_.emplace_back(lie_index_[var], c);
  std::vector<std::size_t> keep, laurent;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == var) continue;
    if (laurent_[i]) laurent.push_back(keep.size());
    keep.push_back(i);
    a->labels_.push_back(labels_[i]);
    a->lie_index_.push_back(lie_index_[i]);
  }
  a->lin_.assign(m * m, Vector(m));
  a->cst_.assign(m * m, FieldElement());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Vector& l = bracket_linear(keep[i], keep[j]);
      Vector v(m);
      for (std::size_t k = 0; k < m; ++k) v[k] = l[keep[k]];
      a->lin_[i * m + j] = std::move(v);
      a->cst_[i * m + j] = bracket_scalar(keep[i], keep[j]) + c * l[var];
    }
  }
  a->finish_setup(laurent);
  std::lock_guard<std::mutex> lock(memo_mutex_);
  return spec_cache_.try_emplace(key, a).first->second;
}

PBWTerms PBWAlgebra::noncentral_times(const Exponent& n, std::size_t j) const {
  std::size_t k = nvars();
  for (std::size_t p = order_.size(); p-- > 0;) {
    if (n[order_[p]] > 0) {
      k = order_[p];
      break;
    }
  }
  if (k == nvars() || position_[k] <= position_[j]) {
    Exponent e = n;
    ++e[j];
    return PBWTerms{{std::move(e), FieldElement(1)}};
  }
  Exponent key = n;
  key.push_back(static_cast<int>(j));
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = gen_memo_.find(key);
    if (it != gen_memo_.end()) return it->second;
  }
  // n = n' x_k with x_k last; n x_j = (n' x_j) x_k + n' [x_k, x_j].
  Exponent np = n;
  --np[k];
  PBWTerms result;
  for (const auto& [m, c] : noncentral_times(np, j)) add_scaled(result, monomial_times_generator(m, k), c);
  const Vector& lin = bracket_linear(k, j);
  for (std::size_t l = 0; l < nvars(); ++l) {
    if (!lin[l].is_zero()) add_scaled(result, monomial_times_generator(np, l), lin[l]);
  }
  add_into(result, np, bracket_scalar(k, j));
  std::lock_guard<std::mutex> lock(memo_mutex_);
  return gen_memo_.try_emplace(std::move(key), std::move(result)).first->second;
}

PBWTerms PBWAlgebra::monomial_times_generator(const Exponent& m, std::size_t j) const {
  if (central_[j]) {
    Exponent e = m;
    ++e[j];
    return PBWTerms{{std::move(e), FieldElement(1)}};
  }
  Exponent n = m;
  bool has_central = false;
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (central_[i] && n[i] != 0) {
      n[i] = 0;
      has_central = true;
    }
  }
  PBWTerms t = noncentral_times(n, j);
  if (!has_central) return t;
  PBWTerms out;
  for (auto& [e, c] : t) {
    Exponent f = e;
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (central_[i]) f[i] += m[i];
    }
    add_into(out, f, c);
  }
  return out;
}

PBWTerms PBWAlgebra::monomial_product(const Exponent& a, const Exponent& b) const {
  const std::size_t n = nvars();
  Exponent an = a, bn = b, shift(n, 0);
  bool b_nonc = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (central_[i]) {
      shift[i] = a[i] + b[i];
      an[i] = bn[i] = 0;
    } else if (b[i] != 0) {
      b_nonc = true;
    }
  }
  PBWTerms prod;
  if (!b_nonc) {
    prod.emplace(an, FieldElement(1));
  } else {
    Exponent key = an;
    key.insert(key.end(), bn.begin(), bn.end());
    bool found = false;
    {
      std::lock_guard<std::mutex> lock(memo_mutex_);
      auto it = mono_memo_.find(key);
      if (it != mono_memo_.end()) {
        prod = it->second;
        found = true;
      }
    }
    if (!found) {
      prod.emplace(an, FieldElement(1));
      for (std::size_t var : order_) {
        for (int r = 0; r < bn[var]; ++r) {
          PBWTerms next;
          for (const auto& [m, c] : prod) add_scaled(next, monomial_times_generator(m, var), c);
          prod = std::move(next);
        }
      }
      std::lock_guard<std::mutex> lock(memo_mutex_);
      mono_memo_.try_emplace(std::move(key), prod);
    }
  }
  if (std::all_of(shift.begin(), shift.end(), [](int x) { return x == 0; })) return prod;
  PBWTerms out;
  for (const auto& [e, c] : prod) {
    Exponent f = e;
    for (std::size_t i = 0; i < n; ++i) f[i] += shift[i];
    add_into(out, f, c);
  }
  return out;
}

PBWTerms PBWAlgebra::symmetrized_monomial(const Exponent& a) const {
  const std::size_t n = nvars();
  Exponent core = a, shift(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < 0) throw ArithmeticError("symmetrization of a Laurent monomial");
    if (central_[i]) {
      shift[i] = a[i];
      core[i] = 0;
    }
  }
  const int k = total(core);
  PBWTerms result;
  if (k <= 1) {
    result.emplace(core, FieldElement(1));
  } else {
    bool found = false;
    {
      std::lock_guard<std::mutex> lock(memo_mutex_);
      auto it = symm_memo_.find(core);
      if (it != symm_memo_.end()) {
        result = it->second;
        found = true;
      }
    }
    if (!found) {
      // Average over orderings, split by the last letter.
      for (std::size_t i = 0; i < n; ++i) {
        if (core[i] == 0) continue;
        Exponent rest = core;
        --rest[i];
        FieldElement w(Rational(core[i], k));
        for (const auto& [m, c] : symmetrized_monomial(rest)) {
          add_scaled(result, monomial_times_generator(m, i), c * w);
        }
      }
      std::lock_guard<std::mutex> lock(memo_mutex_);
      symm_memo_.try_emplace(core, result);
    }
  }
  if (std::all_of(shift.begin(), shift.end(), [](int x) { return x == 0; })) return result;
  PBWTerms out;
  for (const auto& [e, c] : result) {
    Exponent f = e;
    for (std::size_t i = 0; i < n; ++i) f[i] += shift[i];
    out.emplace(std::move(f), c);
  }
  return out;
}

std::string PBWAlgebra::render_monomial(const Exponent& e) const {
  std::string s;
  for (std::size_t var : order_) {
    if (e[var] == 0) continue;
    if (!s.empty()) s += "*";
    s += labels_[var];
    if (e[var] != 1) s += "^" + std::to_string(e[var]);
  }
  return s;
}

// ---------------------------------------------------------------- PBWElement

PBWElement::PBWElement(PBWAlgebraPtr alg, PBWTerms terms) : alg_(std::move(alg)) {
  for (auto& [e, c] : terms) add_term(e, c);
}

void PBWElement::add_term(const Exponent& e, const FieldElement& c) {
  if (e.size() != alg_->nvars()) throw ArithmeticError("exponent length mismatch");
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 && !alg_->is_laurent(i)) {
      throw ArithmeticError("negative exponent at non-Laurent variable " + alg_->labels()[i]);
    }
  }
  add_into(terms_, e, c);
}

PBWElement PBWElement::constant(PBWAlgebraPtr alg, const FieldElement& c) {
  PBWElement u(alg);
  u.add_term(Exponent(alg->nvars(), 0), c);
  return u;
}

PBWElement PBWElement::generator(PBWAlgebraPtr alg, std::size_t i) {
  Exponent e(alg->nvars(), 0);
  e.at(i) = 1;
  return monomial(std::move(alg), e, 1);
}

PBWElement PBWElement::monomial(PBWAlgebraPtr alg, const Exponent& e, const FieldElement& c) {
  PBWElement u(std::move(alg));
  u.add_term(e, c);
  return u;
}

PBWElement PBWElement::from_vector(PBWAlgebraPtr alg, const Vector& v) {
  if (v.size() != alg->nvars()) throw InputError("vector has wrong length for this enveloping algebra");
  PBWElement u(alg);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    Exponent e(v.size(), 0);
    e[i] = 1;
    u.add_term(e, v[i]);
  }
  return u;
}

bool PBWElement::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total(terms_.begin()->first) == 0 &&
         std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(), [](int x) { return x == 0; });
}

FieldElement PBWElement::constant_value() const {
  if (!alg_) return FieldElement();
  auto it = terms_.find(Exponent(alg_->nvars(), 0));
  return it == terms_.end() ? FieldElement() : it->second;
}

int PBWElement::degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int t = total(e);
    if (first || t > d) d = t;
    first = false;
  }
  return d;
}

bool PBWElement::has_negative_exponents() const {
  for (const auto& [e, c] : terms_) {
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) return true;
  }
  return false;
}

namespace {

const PBWAlgebraPtr& common(const PBWElement& a, const PBWElement& b) {
  if (!a.algebra()) return b.algebra();
  if (!b.algebra() || a.algebra() == b.algebra()) return a.algebra();
  throw ArithmeticError("elements of different enveloping algebras");
}

}  // namespace

PBWElement PBWElement::operator-() const {
  PBWElement u = *this;
  for (auto& [e, c] : u.terms_) c = -c;
  return u;
}

PBWElement& PBWElement::operator+=(const PBWElement& o) {
  alg_ = common(*this, o);
  for (const auto& [e, c] : o.terms_) add_into(terms_, e, c);
  return *this;
}

PBWElement operator+(const PBWElement& a, const PBWElement& b) {
  PBWElement r = a;
  r += b;
  return r;
}

PBWElement operator-(const PBWElement& a, const PBWElement& b) { return a + (-b); }

PBWElement operator*(const PBWElement& a, const PBWElement& b) {
  PBWElement r(common(a, b));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      add_scaled(r.terms_, r.alg_->monomial_product(ea, eb), ca * cb);
    }
  }
  return r;
}

PBWElement PBWElement::scale(const FieldElement& c) const {
  if (c.is_zero()) return PBWElement(alg_);
  PBWElement u = *this;
  for (auto& [e, v] : u.terms_) v *= c;
  return u;
}

PBWElement PBWElement::pow(int k) const {
  if (k < 0) throw ArithmeticError("negative power in U(q)");
  PBWElement r = constant(alg_, 1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool operator==(const PBWElement& a, const PBWElement& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  return a.alg_ == b.alg_ && a.terms_ == b.terms_;
}

std::string PBWElement::to_string() const {
  if (terms_.empty()) return "0";
  const auto& order = alg_->order();
  std::vector<std::pair<Exponent, FieldElement>> sorted;
  std::vector<std::string> labels;
  for (auto v : order) labels.push_back(alg_->labels()[v]);
  for (const auto& [e, c] : terms_) {
    Exponent p(e.size());
    for (std::size_t k = 0; k < order.size(); ++k) p[k] = e[order[k]];
    sorted.emplace_back(std::move(p), c);
  }
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return grlex_greater(x.first, y.first); });
  return render_terms(sorted, labels);
}

PBWElement commutator(const PBWElement& u, const PBWElement& v) { return u * v - v * u; }

PBWElement symmetrize(const PBWAlgebraPtr& alg, const PolyElement& F) {
  if (F.nvars() != alg->nvars()) throw InputError("polynomial does not match the enveloping algebra");
  PBWTerms acc;
  for (const auto& [e, c] : F.terms()) add_scaled(acc, alg->symmetrized_monomial(e), c);
  return PBWElement(alg, std::move(acc));
}

PolyElement principal_symbol(const PBWElement& u) {
  if (!u.algebra()) return PolyElement();
  PolyElement p(u.algebra()->nvars());
  const int d = u.degree();
  for (const auto& [e, c] : u.terms()) {
    if (total(e) == d) p.add_term(e, c);
  }
  return p;
}

bool ad_invariant(const PBWElement& u, const Subspace& S) {
  for (const auto& xi : S.basis()) {
    if (!commutator(PBWElement::from_vector(u.algebra(), xi), u).is_zero()) return false;
  }
  return true;
}

PBWElement specialize_central(const PBWElement& u, std::size_t var, const FieldElement& c) {
  const auto& alg = u.algebra();
  PBWAlgebraPtr target = alg->specialize(var, c);
  PBWTerms acc;
  for (const auto& [e, coeff] : u.terms()) {
    if (e[var] < 0 && c.is_zero()) throw ArithmeticError("cannot specialize a Laurent variable to 0");
    Exponent f;
    f.reserve(e.size() - 1);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != var) f.push_back(e[i]);
    }
    add_into(acc, f, coeff * c.pow(e[var]));
  }
  return PBWElement(target, std::move(acc));
}

std::vector<Exponent> monomials_up_to_degree(std::size_t n, int d) {
  std::vector<Exponent> out;
  for (int k = d; k >= 0; --k) {
    auto m = monomials_of_degree(n, k);
    out.insert(out.end(), m.begin(), m.end());
  }
  return out;
}

std::vector<PBWElement> centralizer_up_to_degree(const PBWAlgebraPtr& alg, const std::vector<PBWElement>& gens,
                                                 int d) {
  if (d < 0) return {};
  auto monos = monomials_up_to_degree(alg->nvars(), d);
  std::map<std::pair<std::size_t, Exponent>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, FieldElement>>> cols(monos.size());
  for (std::size_t m = 0; m < monos.size(); ++m) {
    PBWElement u = PBWElement::monomial(alg, monos[m]);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const PBWElement br = commutator(u, gens[g]);
      for (const auto& [e, c] : br.terms()) {
        auto key = std::make_pair(g, e);
        auto it = row_of.try_emplace(key, row_of.size()).first;
        cols[m].emplace_back(it->second, c);
      }
    }
  }
  Matrix M(row_of.size(), monos.size());
  for (std::size_t m = 0; m < monos.size(); ++m) {
    for (const auto& [r, c] : cols[m]) M.at(r, m) = c;
  }
  std::vector<Vector> ker;
  if (row_of.empty()) {
    for (std::size_t m = 0; m < monos.size(); ++m) ker.push_back(unit_vector(monos.size(), m));
  } else {
    ker = kernel_basis(M);
  }
  std::vector<PBWElement> out;
  for (const auto& k : ker) {
    PBWTerms t;
    for (std::size_t m = 0; m < monos.size(); ++m) {
      if (!k[m].is_zero()) t.emplace(monos[m], k[m]);
    }
    out.emplace_back(alg, std::move(t));
  }
  return out;
}

PBWElement map_generators(const PBWElement& u, const std::vector<PBWElement>& images, const PBWAlgebraPtr& target) {
  const auto& alg = u.algebra();
  if (images.size() != alg->nvars()) throw InputError("one image per generator required");
  std::vector<std::optional<PBWElement>> inverses(images.size());
  auto inverse_of = [&](std::size_t i) -> const PBWElement& {
    if (!inverses[i]) {
      const PBWElement& im = images[i];
      if (im.terms().size() != 1) throw ArithmeticError("negative power of a non-monomial image");
      const auto& [e, c] = *im.terms().begin();
      Exponent f = e;
      for (auto& x : f) x = -x;
      inverses[i] = PBWElement::monomial(target, f, c.inverse());
    }
    return *inverses[i];
  };
  PBWElement out(target);
  for (const auto& [e, c] : u.terms()) {
    PBWElement t = PBWElement::constant(target, c);
    for (std::size_t var : alg->order()) {
      const int k = e[var];
      for (int r = 0; r < std::abs(k); ++r) t = t * (k > 0 ? images[var] : inverse_of(var));
    }
    out += t;
  }
  return out;
}

}  // namespace lieshift
