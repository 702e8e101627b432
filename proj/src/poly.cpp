#include <lieshift/errors.hpp>
#include <lieshift/poly.hpp>

#include <algorithm>
#include <numeric>

namespace lieshift {

namespace {

int total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

void check(const PolyElement& a, const PolyElement& b) {
  if (a.nvars() != b.nvars()) throw ArithmeticError("polynomials live in different rings");
}

}  // namespace

PolyElement PolyElement::constant(std::size_t nvars, const FieldElement& c) {
  PolyElement p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

PolyElement PolyElement::variable(std::size_t nvars, std::size_t i) {
  Exponent e(nvars, 0);
  e.at(i) = 1;
  return monomial(e, 1);
}

PolyElement PolyElement::monomial(const Exponent& e, const FieldElement& c) {
  PolyElement p(e.size());
  p.add_term(e, c);
  return p;
}

PolyElement PolyElement::linear(const Vector& v) {
  PolyElement p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    Exponent e(v.size(), 0);
    e[i] = 1;
    p.terms_.emplace(std::move(e), v[i]);
  }
  return p;
}

bool PolyElement::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                           [](int x) { return x == 0; });
}

FieldElement PolyElement::constant_value() const { return coefficient(Exponent(nvars_, 0)); }

FieldElement PolyElement::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? FieldElement() : it->second;
}

int PolyElement::degree() const {
  int d = -1;
  bool any = false;
  for (const auto& [e, c] : terms_) {
    int t = total(e);
    if (!any || t > d) d = t;
    any = true;
  }
  return any ? d : -1;
}

bool PolyElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return total(t.first) == d; });
}

PolyElement PolyElement::homogeneous_part(int d) const {
  PolyElement p(nvars_);
  for (const auto& [e, c] : terms_) {
    if (total(e) == d) p.terms_.emplace(e, c);
  }
  return p;
}

void PolyElement::add_term(const Exponent& e, const FieldElement& c) {
  if (e.size() != nvars_) throw ArithmeticError("exponent length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PolyElement PolyElement::operator-() const {
  PolyElement p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

PolyElement& PolyElement::operator+=(const PolyElement& o) {
  check(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

PolyElement operator+(const PolyElement& a, const PolyElement& b) {
  PolyElement r = a;
  r += b;
  return r;
}

PolyElement operator-(const PolyElement& a, const PolyElement& b) { return a + (-b); }

PolyElement operator*(const PolyElement& a, const PolyElement& b) {
  check(a, b);
  PolyElement r(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

PolyElement PolyElement::scale(const FieldElement& c) const {
  if (c.is_zero()) return PolyElement(nvars_);
  PolyElement p = *this;
  for (auto& [e, v] : p.terms_) v *= c;
  return p;
}

PolyElement PolyElement::pow(int k) const {
  if (k < 0) throw ArithmeticError("negative power of a polynomial");
  PolyElement r = constant(nvars_, 1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

PolyElement PolyElement::derivative(std::size_t i) const {
  PolyElement p(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent f = e;
    --f[i];
    p.add_term(f, c * FieldElement(e[i]));
  }
  return p;
}

PolyElement PolyElement::directional(const Vector& v) const {
  if (v.size() != nvars_) throw ArithmeticError("direction has wrong length");
  PolyElement p(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (!v[i].is_zero()) p += derivative(i).scale(v[i]);
  }
  return p;
}

FieldElement PolyElement::evaluate(const Vector& point) const {
  if (point.size() != nvars_) throw ArithmeticError("evaluation point has wrong length");
  FieldElement s;
  for (const auto& [e, c] : terms_) {
    FieldElement t = c;
    for (std::size_t k = 0; k < nvars_ && !t.is_zero(); ++k) {
      if (e[k] != 0) t *= point[k].pow(e[k]);
    }
    s += t;
  }
  return s;
}

Vector PolyElement::differential_at(const Vector& point) const {
  Vector g(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) g[i] = derivative(i).evaluate(point);
  return g;
}

std::vector<std::pair<Exponent, FieldElement>> PolyElement::sorted_terms() const {
  std::vector<std::pair<Exponent, FieldElement>> t(terms_.begin(), terms_.end());
  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return grlex_greater(a.first, b.first); });
  return t;
}

std::string render_monomial(const Exponent& e, const std::vector<std::string>& labels) {
  std::string mono;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!mono.empty()) mono += "*";
    mono += labels.at(k);
    if (e[k] != 1) mono += "^" + std::to_string(e[k]);
  }
  return mono;
}

std::string render_terms(const std::vector<std::pair<Exponent, FieldElement>>& terms,
                         const std::vector<std::string>& labels) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms) {
    bool negative = c.is_rational() && c.rational() < 0;
    FieldElement mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono = render_monomial(e, labels);
    std::string coeff = mag.is_compound() ? "(" + mag.to_string() + ")" : mag.to_string();
    if (mono.empty()) out += coeff;
    else if (mag.is_one()) out += mono;
    else out += coeff + "*" + mono;
  }
  return out;
}

std::string PolyElement::to_string(const std::vector<std::string>& labels) const {
  return render_terms(sorted_terms(), labels);
}

PolyElement poisson(const LieAlgebra& L, const PolyElement& F, const PolyElement& G) {
  const std::size_t n = L.dim();
  if (F.nvars() != n || G.nvars() != n) throw ArithmeticError("polynomial does not match the algebra");
  std::vector<PolyElement> dF(n), dG(n);
  for (std::size_t i = 0; i < n; ++i) {
    dF[i] = F.derivative(i);
    dG[i] = G.derivative(i);
  }
  PolyElement out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector& c = L.structure(i, j);
      if (is_zero(c)) continue;
      PolyElement coeff = dF[i] * dG[j] - dF[j] * dG[i];
      if (coeff.is_zero()) continue;
      out += coeff * PolyElement::linear(c);
    }
  }
  return out;
}

PolyElement gamma_shift(const PolyElement& H, const LinearForm& gamma, int k) {
  if (k < 0) throw InputError("shift order must be nonnegative");
  PolyElement p = H;
  for (int i = 0; i < k && !p.is_zero(); ++i) p = p.directional(gamma.coefficients);
  return p;
}

std::vector<Exponent> monomials_of_degree(std::size_t n, int d) {
  std::vector<Exponent> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponent e(n, 0);
  // Recursive fill: first coordinate from d down to 0 gives grlex descending.
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos + 1 == n) {
      e[pos] = left;
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[pos] = a;
      self(self, pos + 1, left - a);
    }
  };
  rec(rec, 0, d);
  return out;
}

}  // namespace lieshift
