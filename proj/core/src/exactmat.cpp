#include "affinv/exactmat.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <utility>

#include "affinv/errors.hpp"

namespace affinv {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

void require_same_dim(const RatMatrix& a, const RatMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(op) + ": " + std::to_string(a.dim()) + "x" + std::to_string(a.dim()) +
                            " vs " + std::to_string(b.dim()) + "x" + std::to_string(b.dim()));
  }
}

Rational det_cofactor(const RatMatrix& x) {
  switch (x.dim()) {
    case 1:
      return x(0, 0);
    case 2:
      return Rational(x(0, 0) * x(1, 1) - x(0, 1) * x(1, 0));
    default:
      return Rational(x(0, 0) * (x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1)) -
                      x(0, 1) * (x(1, 0) * x(2, 2) - x(1, 2) * x(2, 0)) +
                      x(0, 2) * (x(1, 0) * x(2, 1) - x(1, 1) * x(2, 0)));
  }
}

// Bareiss elimination on integers. Row r of x is scaled by the lcm of its
// denominators, so det(x) = det(scaled) / prod(scales).
Rational det_bareiss(const RatMatrix& x) {
  const std::size_t n = x.dim();
  std::vector<Integer> m(n * n);
  Integer scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < n; ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x(r, c).get_den_mpz_t());
    }
    scale *= l;
    for (std::size_t c = 0; c < n; ++c) {
      m[r * n + c] = x(r, c).get_num() * (l / x(r, c).get_den());
    }
  }
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return m[r * n + c]; };

  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return Rational(0);
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  Rational d(Integer(sign * at(n - 1, n - 1)), scale);
  d.canonicalize();
  return d;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = 1 / rows[r][c];
    for (auto& e : rows[r]) e *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  const bool negative = !body.empty() && body.front() == '-';
  if (negative) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  Integer p(std::string(num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) p = -p;
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_str();
}

// --- RatVector --------------------------------------------------------------

RatVector RatVector::unit(std::size_t n, std::size_t index) {
  RatVector v(n);
  v[index] = 1;
  return v;
}

bool RatVector::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](const Rational& r) { return r == 0; });
}

// --- RatMatrix --------------------------------------------------------------

RatMatrix::RatMatrix(std::size_t n) : n_(n), a_(n * n) {
  if (n == 0) throw InvalidArgument("matrix dimension must be at least 1");
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) : RatMatrix(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw DimensionMismatch("ragged or non-square matrix literal");
    std::size_t c = 0;
    for (const auto& e : row) (*this)(r, c++) = e;
    ++r;
  }
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  RatMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw DimensionMismatch("ragged or non-square matrix");
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  RatMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::unit(std::size_t n, std::size_t row, std::size_t col) {
  RatMatrix m(n);
  if (row >= n || col >= n) throw IndexOutOfRange("elementary matrix index out of range");
  m(row, col) = 1;
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  RatVector v(n_);
  for (std::size_t c = 0; c < n_; ++c) v[c] = (*this)(r, c);
  return v;
}

void RatMatrix::set_row(std::size_t r, const RatVector& v) {
  if (v.size() != n_) throw DimensionMismatch("row length does not match matrix dimension");
  for (std::size_t c = 0; c < n_; ++c) (*this)(r, c) = v[c];
}

Rational RatMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RatMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& r) { return r == 0; });
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  require_same_dim(*this, o, "add");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  require_same_dim(*this, o, "subtract");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& s) {
  for (auto& e : a_) e *= s;
  return *this;
}

RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
RatMatrix operator-(RatMatrix a) { return a *= Rational(-1); }
RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
RatMatrix operator*(const Rational& s, RatMatrix a) { return a *= s; }

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  require_same_dim(a, b, "multiply");
  const std::size_t n = a.dim();
  RatMatrix p(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) p(i, j) += a(i, k) * b(k, j);
    }
  }
  return p;
}

RatVector operator*(const RatVector& v, const RatMatrix& a) {
  if (v.size() != a.dim()) throw DimensionMismatch("row vector length does not match matrix");
  RatVector out(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < a.dim(); ++j) out[j] += v[k] * a(k, j);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RatVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << to_string(v[i]);
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.dim(); ++r) os << (r ? ", " : "") << m.row(r);
  return os << ']';
}

// --- UniPoly ----------------------------------------------------------------

UniPoly::UniPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

Rational UniPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

RatMatrix UniPoly::operator()(const RatMatrix& x) const {
  RatMatrix acc(x.dim());
  const RatMatrix id = RatMatrix::identity(x.dim());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + (*it) * id;
  return acc;
}

PolyDivision divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const auto& d = b.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational f = rem[static_cast<std::size_t>(k + db)] / d.back();
    quot[static_cast<std::size_t>(k)] = f;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= f * d[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coefficients()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    os << (first ? "" : " + ") << to_string(c);
    if (k > 0) os << "*t^" << k;
    first = false;
  }
  return os;
}

// --- operations -------------------------------------------------------------

RatMatrix power(const RatMatrix& x, unsigned k) {
  RatMatrix result = RatMatrix::identity(x.dim());
  RatMatrix base = x;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) {
  require_same_dim(a, b, "commutator");
  return a * b - b * a;
}

Rational determinant(const RatMatrix& x) {
  if (x.dim() <= 3) return det_cofactor(x);
  return det_bareiss(x);
}

std::size_t rank(const std::vector<RatVector>& vectors) {
  if (vectors.empty()) return 0;
  const std::size_t cols = vectors.front().size();
  std::vector<std::vector<Rational>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != cols) throw DimensionMismatch("rank: vectors of different lengths");
    rows.push_back(v.values());
  }
  return rref(rows, cols).size();
}

std::size_t rank(const RatMatrix& x) {
  std::vector<RatVector> rows;
  for (std::size_t r = 0; r < x.dim(); ++r) rows.push_back(x.row(r));
  return rank(rows);
}

RatMatrix inverse(const RatMatrix& x) {
  const std::size_t n = x.dim();
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) rows[r][c] = x(r, c);
    rows[r][n + r] = 1;
  }
  const auto pivots = rref(rows, n);
  if (pivots.size() < n) throw SingularMatrix("inverse of a singular matrix");
  RatMatrix inv(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = rows[r][n + c];
  return inv;
}

// Faddeev-LeVerrier: M_k = x M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(x M_k) / k.
UniPoly char_poly(const RatMatrix& x) {
  const std::size_t n = x.dim();
  const RatMatrix id = RatMatrix::identity(n);
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RatMatrix m(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = x * m + c[n - k + 1] * id;
    c[n - k] = -(x * m).trace() / Rational(static_cast<long>(k));
  }
  return UniPoly(std::move(c));
}

UniPoly min_poly(const RatMatrix& x) {
  const std::size_t n = x.dim();
  const std::size_t len = n * n;
  struct Reduced {
    std::vector<Rational> vec;
    std::vector<Rational> combo;  // coefficients on I, x, x^2, ...
    std::size_t pivot;
  };
  std::vector<Reduced> basis;
  RatMatrix pw = RatMatrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Rational> v(len);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) v[r * n + c] = pw(r, c);
    std::vector<Rational> combo(k + 1);
    combo[k] = 1;
    for (const auto& b : basis) {
      if (v[b.pivot] == 0) continue;
      const Rational f = v[b.pivot];
      for (std::size_t i = 0; i < len; ++i) v[i] -= f * b.vec[i];
      for (std::size_t i = 0; i < b.combo.size(); ++i) combo[i] -= f * b.combo[i];
    }
    const auto nz = std::find_if(v.begin(), v.end(), [](const Rational& e) { return e != 0; });
    if (nz == v.end()) return UniPoly(std::move(combo));
    const std::size_t pivot = static_cast<std::size_t>(nz - v.begin());
    const Rational inv = 1 / v[pivot];
    for (auto& e : v) e *= inv;
    for (auto& e : combo) e *= inv;
    basis.push_back({std::move(v), std::move(combo), pivot});
    pw = pw * x;
  }
  // Unreachable by Cayley-Hamilton.
  return char_poly(x);
}

LinearSolution solve_linear(const RatMatrix& a, const RatVector& b) {
  const std::size_t n = a.dim();
  if (b.size() != n) throw DimensionMismatch("solve_linear: right-hand side length does not match matrix");
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) rows[r][c] = a(r, c);
    rows[r][n] = b[r];
  }
  const auto pivots = rref(rows, n + 1);
  if (!pivots.empty() && pivots.back() == n) return NoSolution{};
  if (pivots.size() < n) return NonUnique{};
  RatVector s(n);
  for (std::size_t r = 0; r < n; ++r) s[r] = rows[r][n];
  return s;
}

}  // namespace affinv
