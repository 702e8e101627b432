#include <lieshift/errors.hpp>
#include <lieshift/matrix.hpp>

#include <algorithm>

namespace lieshift {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("matrix row has wrong length");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw InputError("matrix column has wrong length");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = columns[j][i];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw ArithmeticError("matrix-vector dimension mismatch");
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    FieldElement s;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!at(i, j).is_zero() && !v[j].is_zero()) s += at(i, j) * v[j];
    }
    out[i] = std::move(s);
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ArithmeticError("matrix dimension mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldElement& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b.at(k, j).is_zero()) c.at(i, j) += x * b.at(k, j);
      }
    }
  }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const FieldElement& e) { return e.is_zero(); });
}

std::string Matrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += ", ";
      s += at(i, j).to_string();
    }
  }
  return s + "]";
}

namespace {

// Multiplies a row by a common denominator so elimination runs over the
// polynomial ring (or Z) instead of the fraction field.
void clear_row(Matrix& m, std::size_t i) {
  const std::size_t n = m.cols();
  Vector row = m.row(i);
  if (is_zero(row)) return;
  FieldPtr top = top_field(row);
  if (!top) {
    Integer l = 1;
    for (const auto& e : row) {
      if (!e.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.rational().get_den_mpz_t());
    }
    if (l == 1) return;
    for (std::size_t j = 0; j < n; ++j) {
      if (!m.at(i, j).is_zero()) m.at(i, j) = FieldElement(Rational(m.at(i, j).rational() * l));
    }
    return;
  }
  MPoly l = MPoly::constant(top->num_variables(), 1);
  for (const auto& e : row) {
    if (e.level() == top->level()) l = lcm(l, e.function().denominator());
  }
  if (l.is_constant()) return;
  FieldElement f = FieldElement::polynomial(top, l);
  for (std::size_t j = 0; j < n; ++j) {
    if (!m.at(i, j).is_zero()) m.at(i, j) *= f;
  }
}

std::size_t weight(const FieldElement& e) {
  if (e.is_rational()) return 0;
  return e.function().numerator().terms().size() + e.function().denominator().terms().size();
}

}  // namespace

Echelon echelon(const Matrix& input) {
  Matrix m = input;
  const std::size_t R = m.rows(), C = m.cols();
  for (std::size_t i = 0; i < R; ++i) clear_row(m, i);
  std::vector<std::size_t> pivots;
  FieldElement prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = R;
    for (std::size_t i = r; i < R; ++i) {
      if (m.at(i, c).is_zero()) continue;
      if (p == R || weight(m.at(i, c)) < weight(m.at(p, c))) p = i;
    }
    if (p == R) continue;
    if (p != r) {
      for (std::size_t j = 0; j < C; ++j) std::swap(m.at(p, j), m.at(r, j));
    }
    const FieldElement piv = m.at(r, c);
    for (std::size_t i = r + 1; i < R; ++i) {
      const FieldElement a = m.at(i, c);
      for (std::size_t j = c + 1; j < C; ++j) {
        FieldElement v = piv * m.at(i, j);
        if (!a.is_zero() && !m.at(r, j).is_zero()) v -= a * m.at(r, j);
        if (!prev.is_one() && !v.is_zero()) v /= prev;
        m.at(i, j) = std::move(v);
      }
      m.at(i, c) = FieldElement();
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return echelon(m).pivots.size(); }

Echelon row_reduce(const Matrix& m) {
  Echelon e = echelon(m);
  Matrix& a = e.form;
  const std::size_t C = a.cols();
  for (std::size_t r = e.pivots.size(); r-- > 0;) {
    const std::size_t c = e.pivots[r];
    const FieldElement inv = a.at(r, c).inverse();
    for (std::size_t j = c; j < C; ++j) {
      if (!a.at(r, j).is_zero()) a.at(r, j) *= inv;
    }
    for (std::size_t i = 0; i < r; ++i) {
      const FieldElement f = a.at(i, c);
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < C; ++j) {
        if (!a.at(r, j).is_zero()) a.at(i, j) -= f * a.at(r, j);
      }
    }
  }
  return e;
}

namespace {

// Solves the echelon system with the given values for free columns.
Vector back_substitute(const Echelon& e, std::size_t n, Vector x, const Vector* rhs) {
  const Matrix& a = e.form;
  for (std::size_t r = e.pivots.size(); r-- > 0;) {
    const std::size_t c = e.pivots[r];
    FieldElement s = rhs ? (*rhs)[r] : FieldElement();
    for (std::size_t j = c + 1; j < n; ++j) {
      if (!a.at(r, j).is_zero() && !x[j].is_zero()) s -= a.at(r, j) * x[j];
    }
    x[c] = s / a.at(r, c);
  }
  return x;
}

}  // namespace

std::vector<Vector> kernel_basis(const Matrix& m) {
  const std::size_t n = m.cols();
  Echelon e = echelon(m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector x(n);
    x[f] = 1;
    basis.push_back(clear_denominators(back_substitute(e, n, std::move(x), nullptr)));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  const std::size_t R = m.rows(), C = m.cols();
  if (b.size() != R) throw ArithmeticError("right-hand side has wrong length");
  Matrix aug(R, C + 1);
  for (std::size_t i = 0; i < R; ++i) {
    for (std::size_t j = 0; j < C; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, C) = b[i];
  }
  Echelon e = echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == C) return std::nullopt;
  Vector rhs(e.pivots.size());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) rhs[r] = e.form.at(r, C);
  return back_substitute(e, C, Vector(C), &rhs);
}

Vector clear_denominators(const Vector& v) {
  if (is_zero(v)) return v;
  FieldPtr top = top_field(v);
  Vector out = v;
  if (!top) {
    Integer l = 1, g = 0;
    for (const auto& e : v) {
      if (!e.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.rational().get_den_mpz_t());
    }
    for (const auto& e : v) {
      if (e.is_zero()) continue;
      Integer num = e.rational().get_num() * (l / e.rational().get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    Rational f(l, g);
    for (const auto& e : v) {
      if (!e.is_zero()) {
        if (e.rational() < 0) f = -f;
        break;
      }
    }
    f.canonicalize();
    for (auto& e : out) {
      if (!e.is_zero()) e = FieldElement(Rational(e.rational() * f));
    }
    return out;
  }
  const std::size_t nv = top->num_variables();
  MPoly l = MPoly::constant(nv, 1);
  for (const auto& e : v) {
    if (e.level() == top->level()) l = lcm(l, e.function().denominator());
  }
  std::vector<MPoly> nums;
  for (const auto& e : v) {
    auto [n, d] = as_fraction(e, top);
    nums.push_back(e.is_zero() ? MPoly(nv) : *divide_exact(n * l, d));
  }
  MPoly g(nv);
  for (const auto& p : nums) {
    if (!p.is_zero()) g = gcd(g, p);
  }
  FieldElement lead;
  for (std::size_t i = 0; i < nums.size(); ++i) {
    if (nums[i].is_zero()) continue;
    nums[i] = *divide_exact(nums[i], g);
    if (lead.is_zero()) lead = nums[i].leading_coefficient();
  }
  FieldElement inv = lead.inverse();
  for (std::size_t i = 0; i < nums.size(); ++i) {
    out[i] = FieldElement::polynomial(top, nums[i].scale(inv));
  }
  return out;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldElement& e) { return e.is_zero(); });
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw ArithmeticError("vector length mismatch");
  Vector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw ArithmeticError("vector length mismatch");
  Vector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

Vector scale(const Vector& v, const FieldElement& c) {
  Vector out(v.size());
  if (c.is_zero()) return out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out[i] = v[i] * c;
  }
  return out;
}

FieldElement dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw ArithmeticError("vector length mismatch");
  FieldElement s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

}  // namespace lieshift
