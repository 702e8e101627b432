#include <lieshift/errors.hpp>
#include <lieshift/field.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace lieshift {

// ---------------------------------------------------------------- Field

Field::Field(int level, std::vector<std::string> variables, FieldPtr base)
    : level_(level), variables_(std::move(variables)), base_(std::move(base)) {}

FieldPtr Field::rationals() {
  static const FieldPtr q(new Field(0, {}, nullptr));
  return q;
}

FieldPtr Field::extend(const FieldPtr& base, std::vector<std::string> variables) {
  const FieldPtr b = base ? base : rationals();
  if (b->level() + 1 > kMaxTowerDepth) {
    throw Error("field tower depth cap (" + std::to_string(kMaxTowerDepth) + ") exceeded");
  }
  if (variables.empty()) throw InputError("field extension needs at least one variable");
  return FieldPtr(new Field(b->level() + 1, std::move(variables), b));
}

FieldElement Field::variable(std::size_t i) const {
  if (i >= variables_.size()) throw InputError("field variable index out of range");
  return FieldElement::polynomial(shared_from_this(), MPoly::variable(variables_.size(), i));
}

bool Field::extends(const Field& other) const {
  for (const Field* f = this; f != nullptr; f = f->base_.get()) {
    if (*f == other) return true;
  }
  return false;
}

bool Field::operator==(const Field& other) const {
  if (this == &other) return true;
  if (level_ != other.level_ || variables_ != other.variables_) return false;
  if (level_ == 0) return true;
  return *base_ == *other.base_;
}

std::string Field::describe() const {
  if (level_ == 0) return "Q";
  std::string s = base_->describe() + "(";
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i) s += ",";
    s += variables_[i];
  }
  return s + ")";
}

// ---------------------------------------------------------------- MPoly

bool grlex_greater(const Exponent& a, const Exponent& b) {
  int da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

struct GrlexDesc {
  bool operator()(const Exponent& a, const Exponent& b) const { return grlex_greater(a, b); }
};

using TermMap = std::map<Exponent, FieldElement, GrlexDesc>;

MPoly from_map(std::size_t nvars, TermMap&& m) {
  std::vector<MPoly::Term> terms;
  terms.reserve(m.size());
  for (auto& [e, c] : m) {
    if (!c.is_zero()) terms.emplace_back(e, std::move(c));
  }
  return MPoly::from_terms(nvars, std::move(terms));
}

void check_nvars(const MPoly& a, const MPoly& b) {
  if (a.nvars() != b.nvars()) throw ArithmeticError("polynomials over different variable sets");
}

}  // namespace

MPoly MPoly::constant(std::size_t nvars, const FieldElement& c) {
  MPoly p(nvars);
  if (!c.is_zero()) p.terms_.emplace_back(Exponent(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t i) {
  MPoly p(nvars);
  Exponent e(nvars, 0);
  e.at(i) = 1;
  p.terms_.emplace_back(std::move(e), FieldElement(1));
  return p;
}

// Assumes distinct exponents; sorts and drops zeros.
MPoly MPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  MPoly p(nvars);
  for (auto& t : terms) {
    if (t.first.size() != nvars) throw ArithmeticError("exponent length mismatch");
    if (!t.second.is_zero()) p.terms_.push_back(std::move(t));
  }
  std::sort(p.terms_.begin(), p.terms_.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.first, b.first); });
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (int e : terms_.front().first) {
    if (e != 0) return false;
  }
  return true;
}

FieldElement MPoly::constant_value() const {
  if (terms_.empty()) return FieldElement();
  return terms_.back().second;  // only meaningful when is_constant()
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (int e : terms_.front().first) d += e;
  return d;
}

int MPoly::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  check_nvars(a, b);
  MPoly r(a.nvars_);
  auto i = a.terms_.begin(), j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && grlex_greater(i->first, j->first))) {
      r.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || grlex_greater(j->first, i->first)) {
      r.terms_.push_back(*j++);
    } else {
      FieldElement c = i->second + j->second;
      if (!c.is_zero()) r.terms_.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  check_nvars(a, b);
  if (a.is_zero() || b.is_zero()) return MPoly(a.nvars_);
  TermMap acc;
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      auto [it, inserted] = acc.try_emplace(e, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  return from_map(a.nvars_, std::move(acc));
}

MPoly MPoly::scale(const FieldElement& c) const {
  if (c.is_zero()) return MPoly(nvars_);
  MPoly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

MPoly MPoly::monic() const {
  if (terms_.empty() || terms_.front().second.is_one()) return *this;
  return scale(terms_.front().second.inverse());
}

FieldElement MPoly::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != nvars_) throw ArithmeticError("evaluation point has wrong length");
  FieldElement sum;
  for (const auto& [e, c] : terms_) {
    FieldElement t = c;
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (e[k] != 0) t *= point[k].pow(e[k]);
    }
    sum += t;
  }
  return sum;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool constant_term = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    bool negative = c.is_rational() && c.rational() < 0;
    FieldElement mag = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(k);
      if (e[k] != 1) mono += "^" + std::to_string(e[k]);
    }
    if (constant_term) {
      out += mag.is_compound() ? "(" + mag.to_string() + ")" : mag.to_string();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += (mag.is_compound() ? "(" + mag.to_string() + ")" : mag.to_string()) + "*" + mono;
    }
  }
  return out;
}

std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b) {
  check_nvars(a, b);
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  const std::size_t n = a.nvars();
  const Exponent& lb = b.leading_exponent();
  const FieldElement lcb_inv = b.leading_coefficient().inverse();
  MPoly q(n), r = a;
  std::vector<MPoly::Term> qterms;
  while (!r.is_zero()) {
    const Exponent& lr = r.leading_exponent();
    Exponent d(n);
    for (std::size_t k = 0; k < n; ++k) {
      d[k] = lr[k] - lb[k];
      if (d[k] < 0) return std::nullopt;
    }
    FieldElement c = r.leading_coefficient() * lcb_inv;
    MPoly t = MPoly::from_terms(n, {{d, c}});
    qterms.emplace_back(std::move(d), std::move(c));
    r = r - t * b;
  }
  return MPoly::from_terms(n, std::move(qterms));
}

namespace {

// Coefficients of p viewed as a polynomial in variable v.
std::vector<MPoly> coefficients_in(const MPoly& p, std::size_t v) {
  int deg = std::max(p.degree_in(v), 0);
  std::vector<std::vector<MPoly::Term>> parts(deg + 1);
  for (const auto& [e, c] : p.terms()) {
    Exponent f = e;
    f[v] = 0;
    parts[e[v]].emplace_back(std::move(f), c);
  }
  std::vector<MPoly> out;
  out.reserve(parts.size());
  for (auto& t : parts) out.push_back(MPoly::from_terms(p.nvars(), std::move(t)));
  return out;
}

MPoly var_power(std::size_t nvars, std::size_t v, int k) {
  Exponent e(nvars, 0);
  e[v] = k;
  return MPoly::from_terms(nvars, {{e, FieldElement(1)}});
}

MPoly content_in(const MPoly& p, std::size_t v) {
  MPoly g(p.nvars());
  for (const auto& c : coefficients_in(p, v)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

MPoly primitive_part(const MPoly& p, std::size_t v) {
  if (p.is_zero()) return p;
  return *divide_exact(p, content_in(p, v));
}

// Pseudo-remainder of a by b in variable v.
MPoly pseudo_remainder(MPoly a, const MPoly& b, std::size_t v) {
  const int db = b.degree_in(v);
  const MPoly lb = coefficients_in(b, v).back();
  while (!a.is_zero() && a.degree_in(v) >= db) {
    const int da = a.degree_in(v);
    const MPoly la = coefficients_in(a, v).back();
    a = lb * a - la * var_power(a.nvars(), v, da - db) * b;
  }
  return a;
}

}  // namespace

namespace {

// Polynomials over a transcendental level are moved to Q[all tower
// variables] for gcds: Euclid over Q(t) blows up the coefficient degrees.
// Variables of level j sit after those of levels 1..j-1.

std::size_t tower_size(const FieldPtr& f) {
  std::size_t n = 0;
  for (const Field* g = f.get(); g && g->level() > 0; g = g->base().get()) n += g->num_variables();
  return n;
}

struct Flat {
  MPoly num;
  MPoly den;
};

Flat flatten_poly(const MPoly& p, std::size_t offset, std::size_t nv);

Flat flatten_element(const FieldElement& e, std::size_t nv) {
  if (e.is_rational()) return {MPoly::constant(nv, e), MPoly::constant(nv, 1)};
  const FieldPtr& f = e.field();
  const std::size_t off = tower_size(f->base());
  Flat n = flatten_poly(e.function().numerator(), off, nv);
  Flat d = flatten_poly(e.function().denominator(), off, nv);
  return {n.num * d.den, n.den * d.num};
}

Flat flatten_poly(const MPoly& p, std::size_t offset, std::size_t nv) {
  std::vector<std::pair<Exponent, Flat>> parts;
  MPoly L = MPoly::constant(nv, 1);
  for (const auto& [e, c] : p.terms()) {
    Exponent shifted(nv, 0);
    for (std::size_t k = 0; k < e.size(); ++k) shifted[offset + k] = e[k];
    Flat fc = flatten_element(c, nv);
    if (!fc.den.is_constant()) L = lcm(L, fc.den);
    parts.emplace_back(std::move(shifted), std::move(fc));
  }
  MPoly num(nv);
  for (auto& [e, fc] : parts) {
    MPoly mono = MPoly::from_terms(nv, {{e, FieldElement(1)}});
    MPoly scale = fc.den.is_constant() ? L.scale(fc.den.constant_value().inverse()) : *divide_exact(L, fc.den);
    num = num + fc.num * scale * mono;
  }
  return {num, L};
}

// Flat polynomial in the variables of f and below, read back as an element of f.
FieldElement unflatten_element(const MPoly& P, const FieldPtr& f) {
  if (!f || f->level() == 0) return P.is_zero() ? FieldElement() : P.constant_value();
  const std::size_t off = tower_size(f->base()), k = f->num_variables(), nv = P.nvars();
  std::map<Exponent, std::vector<MPoly::Term>> groups;
  for (const auto& [e, c] : P.terms()) {
    Exponent top(e.begin() + static_cast<long>(off), e.begin() + static_cast<long>(off + k));
    Exponent rest = e;
    for (std::size_t i = off; i < off + k; ++i) rest[i] = 0;
    groups[top].emplace_back(std::move(rest), c);
  }
  std::vector<MPoly::Term> terms;
  for (auto& [top, ts] : groups) {
    terms.emplace_back(top, unflatten_element(MPoly::from_terms(nv, std::move(ts)), f->base()));
  }
  MPoly poly = MPoly::from_terms(k, std::move(terms));
  if (poly.is_constant()) return poly.constant_value();
  return FieldElement::from_canonical(f, std::move(poly), MPoly::constant(k, 1));
}

FieldPtr coefficient_field(const MPoly& a, const MPoly& b) {
  std::vector<FieldElement> cs;
  for (const auto& [e, c] : a.terms()) cs.push_back(c);
  for (const auto& [e, c] : b.terms()) cs.push_back(c);
  return top_field(cs);
}

// Scales a polynomial over Q to integer coefficients with content 1.
MPoly integer_primitive(const MPoly& p) {
  mpz_class L = 1, G = 0;
  for (const auto& [e, c] : p.terms()) {
    const Rational& r = c.rational();
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), r.get_den_mpz_t());
    mpz_gcd(G.get_mpz_t(), G.get_mpz_t(), r.get_num_mpz_t());
  }
  if (G == 0) return p;
  Rational f(L, G);
  f.canonicalize();
  return p.scale(FieldElement(f));
}

// True when a specialization of the variables other than v, keeping both
// leading coefficients in v, has coprime images. Then the gcd of a and b
// has degree 0 in v.
bool coprime_image(const MPoly& a, const MPoly& b, std::size_t v) {
  const std::size_t n = a.nvars();
  for (long attempt = 0; attempt < 3; ++attempt) {
    std::vector<Rational> vals(n);
    for (std::size_t k = 0; k < n; ++k) vals[k] = Rational(static_cast<long>(k) * 3 + 2 + attempt * 7);
    auto image = [&](const MPoly& p) {
      std::map<int, Rational> coeffs;
      for (const auto& [e, c] : p.terms()) {
        Rational x = c.rational();
        for (std::size_t k = 0; k < n; ++k) {
          if (k == v) continue;
          for (int i = 0; i < e[k]; ++i) x *= vals[k];
        }
        coeffs[e[v]] += x;
      }
      std::vector<MPoly::Term> terms;
      for (auto& [d, c] : coeffs) {
        if (sgn(c) != 0) terms.emplace_back(Exponent{d}, FieldElement(c));
      }
      return MPoly::from_terms(1, std::move(terms));
    };
    MPoly ia = image(a), ib = image(b);
    if (ia.degree_in(0) != a.degree_in(v) || ib.degree_in(0) != b.degree_in(v)) continue;
    return gcd(ia, ib).degree_in(0) <= 0;
  }
  return false;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  check_nvars(a, b);
  const std::size_t n = a.nvars();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return MPoly::constant(n, 1);

  if (FieldPtr B = coefficient_field(a, b)) {
    const std::size_t off = tower_size(B), nv = off + n;
    MPoly g = gcd(flatten_poly(a, off, nv).num, flatten_poly(b, off, nv).num);
    std::map<Exponent, std::vector<MPoly::Term>> groups;
    for (const auto& [e, c] : g.terms()) {
      Exponent top(e.begin() + static_cast<long>(off), e.end());
      Exponent rest = e;
      for (std::size_t i = off; i < nv; ++i) rest[i] = 0;
      groups[top].emplace_back(std::move(rest), c);
    }
    std::vector<MPoly::Term> terms;
    for (auto& [top, ts] : groups) terms.emplace_back(top, unflatten_element(MPoly::from_terms(nv, std::move(ts)), B));
    MPoly out = MPoly::from_terms(n, std::move(terms));
    return out.is_constant() ? MPoly::constant(n, 1) : out.monic();
  }

  // Main variable: the one of lowest degree, so contents carry the rest.
  std::size_t v = n;
  int best = 0;
  for (std::size_t k = 0; k < n; ++k) {
    int d = std::max(a.degree_in(k), b.degree_in(k));
    if (d > 0 && (v == n || d < best)) {
      v = k;
      best = d;
    }
  }
  if (a.degree_in(v) == 0) return gcd(a, content_in(b, v));
  if (b.degree_in(v) == 0) return gcd(content_in(a, v), b);

  MPoly ca = content_in(a, v), cb = content_in(b, v);
  if (n >= 2 && coprime_image(a, b, v)) return gcd(ca, cb);
  MPoly pa = integer_primitive(*divide_exact(a, ca)), pb = integer_primitive(*divide_exact(b, cb));
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  while (true) {
    MPoly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      pb = MPoly::constant(n, 1);
      break;
    }
    pa = std::move(pb);
    pb = integer_primitive(primitive_part(r, v));
  }
  return (gcd(ca, cb) * primitive_part(pb, v)).monic();
}

MPoly lcm(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly(a.nvars());
  return (*divide_exact(a * b, gcd(a, b))).monic();
}

// ---------------------------------------------------------------- FieldElement

namespace {

FieldElement make_canonical(const FieldPtr& field, MPoly num, MPoly den, bool reduced) {
  if (den.is_zero()) throw ArithmeticError("division by zero");
  if (num.is_zero()) return FieldElement();
  if (!reduced) {
    MPoly g = gcd(num, den);
    if (!g.is_constant()) {
      num = *divide_exact(num, g);
      den = *divide_exact(den, g);
    }
  }
  if (!den.leading_coefficient().is_one()) {
    FieldElement inv = den.leading_coefficient().inverse();
    num = num.scale(inv);
    den = den.scale(inv);
  }
  if (den.is_constant() && num.is_constant()) return num.constant_value();
  return FieldElement::from_canonical(field, std::move(num), std::move(den));
}

}  // namespace

FieldElement FieldElement::fraction(const FieldPtr& field, MPoly numerator, MPoly denominator) {
  if (!field || field->level() == 0) throw ArithmeticError("fraction needs a transcendental level");
  if (numerator.nvars() != field->num_variables() || denominator.nvars() != field->num_variables()) {
    throw ArithmeticError("polynomial does not match field variables");
  }
  return make_canonical(field, std::move(numerator), std::move(denominator), false);
}

FieldElement FieldElement::from_canonical(const FieldPtr& field, MPoly numerator, MPoly denominator) {
  FieldElement out;
  out.value_ = std::make_shared<const RationalFunction>(field, std::move(numerator),
                                                        std::move(denominator));
  return out;
}

FieldElement FieldElement::polynomial(const FieldPtr& field, MPoly p) {
  MPoly one = MPoly::constant(field->num_variables(), 1);
  return fraction(field, std::move(p), std::move(one));
}

int FieldElement::level() const { return is_rational() ? 0 : function().field()->level(); }

FieldPtr FieldElement::field() const { return is_rational() ? nullptr : function().field(); }

bool FieldElement::is_zero() const { return is_rational() && sgn(rational()) == 0; }

bool FieldElement::is_one() const { return is_rational() && rational() == 1; }

FieldElement FieldElement::operator-() const {
  if (is_rational()) return FieldElement(Rational(-rational()));
  const auto& f = function();
  return from_canonical(f.field(), -f.numerator(), f.denominator());
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  if (is_rational()) return FieldElement(Rational(1 / rational()));
  const auto& f = function();
  return make_canonical(f.field(), f.denominator(), f.numerator(), true);
}

FieldElement FieldElement::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  FieldElement result(1), base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

std::pair<MPoly, MPoly> as_fraction(const FieldElement& e, const FieldPtr& top) {
  const std::size_t n = top->num_variables();
  if (e.is_rational() || e.level() < top->level()) {
    if (!e.is_rational() && !top->extends(*e.field())) {
      throw ArithmeticError("tower mismatch: " + e.field()->describe() + " vs " + top->describe());
    }
    return {MPoly::constant(n, e), MPoly::constant(n, 1)};
  }
  if (!(*e.field() == *top)) {
    throw ArithmeticError("tower mismatch: " + e.field()->describe() + " vs " + top->describe());
  }
  return {e.function().numerator(), e.function().denominator()};
}

namespace {

FieldPtr common_field(const FieldElement& a, const FieldElement& b) {
  FieldPtr fa = a.field(), fb = b.field();
  if (!fa) return fb;
  if (!fb) return fa;
  if (fa->level() >= fb->level()) {
    if (!fa->extends(*fb)) throw ArithmeticError("tower mismatch: " + fa->describe() + " vs " + fb->describe());
    return fa;
  }
  if (!fb->extends(*fa)) throw ArithmeticError("tower mismatch: " + fa->describe() + " vs " + fb->describe());
  return fb;
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  if (a.is_rational() && b.is_rational()) return FieldElement(Rational(a.rational() + b.rational()));
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  FieldPtr top = common_field(a, b);
  auto [na, da] = as_fraction(a, top);
  auto [nb, db] = as_fraction(b, top);
  if (da == db) return make_canonical(top, na + nb, da, false);
  if (da.is_constant()) return make_canonical(top, na * db + nb, db, true);
  if (db.is_constant()) return make_canonical(top, na + nb * da, da, true);
  // With g = gcd(da, db), any common factor of the sum and da db divides g.
  MPoly g = gcd(da, db);
  if (g.is_constant()) return make_canonical(top, na * db + nb * da, da * db, true);
  MPoly da1 = *divide_exact(da, g), db1 = *divide_exact(db, g);
  MPoly num = na * db1 + nb * da1;
  if (num.is_zero()) return FieldElement();
  MPoly h = gcd(num, g);
  if (!h.is_constant()) {
    num = *divide_exact(num, h);
    g = *divide_exact(g, h);
  }
  return make_canonical(top, std::move(num), da1 * db1 * g, true);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  if (a.is_rational() && b.is_rational()) return FieldElement(Rational(a.rational() * b.rational()));
  if (a.is_zero() || b.is_zero()) return FieldElement();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  FieldPtr top = common_field(a, b);
  auto [na, da] = as_fraction(a, top);
  auto [nb, db] = as_fraction(b, top);
  if (a.level() < top->level()) return make_canonical(top, nb.scale(a), db, true);
  if (b.level() < top->level()) return make_canonical(top, na.scale(b), da, true);
  // Cross-cancel before multiplying to keep the gcd small.
  MPoly g1 = gcd(na, db), g2 = gcd(nb, da);
  if (!g1.is_constant()) {
    na = *divide_exact(na, g1);
    db = *divide_exact(db, g1);
  }
  if (!g2.is_constant()) {
    nb = *divide_exact(nb, g2);
    da = *divide_exact(da, g2);
  }
  return make_canonical(top, na * nb, da * db, true);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  if (b.is_zero()) throw ArithmeticError("division by zero");
  return a * b.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.is_rational() != b.is_rational()) return false;
  if (a.is_rational()) return a.rational() == b.rational();
  const auto& fa = a.function();
  const auto& fb = b.function();
  return *fa.field() == *fb.field() && fa.numerator() == fb.numerator() &&
         fa.denominator() == fb.denominator();
}

bool FieldElement::is_compound() const {
  if (is_rational()) return false;
  const auto& f = function();
  return f.numerator().terms().size() > 1 || !f.denominator().is_constant();
}

std::string FieldElement::to_string() const {
  if (is_rational()) return lieshift::to_string(rational());
  const auto& f = function();
  const auto& names = f.field()->variables();
  std::string num = f.numerator().to_string(names);
  if (f.denominator().is_constant()) return num;
  if (f.numerator().terms().size() > 1) num = "(" + num + ")";
  std::string den = f.denominator().to_string(names);
  if (f.denominator().terms().size() > 1 || !f.denominator().leading_coefficient().is_one()) {
    den = "(" + den + ")";
  } else {
    const auto& e = f.denominator().leading_exponent();
    int nz = 0;
    for (int x : e) nz += x != 0;
    if (nz > 1) den = "(" + den + ")";
  }
  return num + "/" + den;
}

FieldPtr top_field(std::span<const FieldElement> elements) {
  FieldPtr top;
  for (const auto& e : elements) {
    FieldPtr f = e.field();
    if (!f) continue;
    if (!top || f->level() > top->level()) {
      if (top && !f->extends(*top)) throw ArithmeticError("tower mismatch");
      top = f;
    } else if (!top->extends(*f)) {
      throw ArithmeticError("tower mismatch");
    }
  }
  return top;
}

namespace {

std::optional<Rational> eval_poly(const MPoly& p, const std::vector<Rational>& values,
                                  const TowerPoint& point) {
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) {
    auto cv = specialize_tower(c, point);
    if (!cv) return std::nullopt;
    Rational t = *cv;
    for (std::size_t k = 0; k < e.size(); ++k) {
      for (int j = 0; j < e[k]; ++j) t *= values[k];
    }
    sum += t;
  }
  return sum;
}

}  // namespace

std::optional<Rational> specialize_tower(const FieldElement& e, const TowerPoint& point) {
  if (e.is_rational()) return e.rational();
  const auto& f = e.function();
  const std::size_t lvl = static_cast<std::size_t>(f.field()->level());
  if (point.size() < lvl || point[lvl - 1].size() < f.field()->num_variables()) {
    throw ArithmeticError("tower point does not cover field " + f.field()->describe());
  }
  auto n = eval_poly(f.numerator(), point[lvl - 1], point);
  auto d = eval_poly(f.denominator(), point[lvl - 1], point);
  if (!n || !d || *d == 0) return std::nullopt;
  return Rational(*n / *d);
}

}  // namespace lieshift
