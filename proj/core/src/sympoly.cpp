#include "affinv/sympoly.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "affinv/errors.hpp"

namespace affinv {

std::size_t total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), std::size_t{0}); }

bool GrlexDescending::operator()(const Exponents& a, const Exponents& b) const {
  const std::size_t da = total_degree(a);
  const std::size_t db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

void require_same_vars(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) {
    throw DimensionMismatch("polynomials over " + std::to_string(a.nvars()) + " and " + std::to_string(b.nvars()) +
                            " variables");
  }
}

}  // namespace

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw IndexOutOfRange("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  MultiPoly p(nvars);
  p.add_term(e, Rational(1));
  return p;
}

MultiPoly MultiPoly::entry(std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > n || j > n) throw IndexOutOfRange("entry index out of range");
  return variable(n * n, (i - 1) * n + (j - 1));
}

Rational MultiPoly::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) throw DimensionMismatch("exponent vector length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_vars(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_vars(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, Rational(-c));
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_vars(a, b);
  MultiPoly out(a.nvars());
  Exponents e(a.nvars());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = static_cast<std::uint16_t>(ea[v] + eb[v]);
      out.add_term(e, Rational(ca * cb));
    }
  }
  return out;
}

MultiPoly MultiPoly::derivative(std::size_t index) const {
  if (index >= nvars_) throw IndexOutOfRange("derivative variable out of range");
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponents d = e;
    --d[index];
    out.add_term(d, Rational(c * e[index]));
  }
  return out;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw DimensionMismatch("evaluation point has wrong length");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (std::size_t v = 0; v < nvars_; ++v) {
      for (std::uint16_t k = 0; k < e[v]; ++k) m *= point[v];
    }
    sum += m;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (images.size() != nvars_) throw DimensionMismatch("substitute needs one image per variable");
  const std::size_t target = images.empty() ? 0 : images.front().nvars();
  for (const auto& im : images) {
    if (im.nvars() != target) throw DimensionMismatch("substitution images differ in variable count");
  }
  // Cache image powers per variable.
  std::vector<std::vector<MultiPoly>> pw(nvars_);
  MultiPoly out(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly m = constant(target, c);
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (e[v] == 0) continue;
      auto& cache = pw[v];
      if (cache.empty()) cache.push_back(constant(target, Rational(1)));
      while (cache.size() <= e[v]) cache.push_back(cache.back() * images[v]);
      m = m * cache[e[v]];
    }
    out += m;
  }
  return out;
}

Json MultiPoly::to_json() const {
  Json list = Json::array();
  for (const auto& [e, c] : terms_) list.push_back(Json{{"coef", to_string(c)}, {"exps", e}});
  return list;
}

MultiPoly MultiPoly::from_json(std::size_t nvars, const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array of terms");
  MultiPoly p(nvars);
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coef") || !t.contains("exps") || !t.at("exps").is_array()) {
      throw ParseError("polynomial term needs \"coef\" and array \"exps\"");
    }
    Exponents e;
    for (const auto& x : t.at("exps")) {
      if (!x.is_number_unsigned()) throw ParseError("exponents must be nonnegative integers");
      e.push_back(x.get<std::uint16_t>());
    }
    if (e.size() != nvars) throw ParseError("exponent vector length does not match variable count");
    p.add_term(e, rational_from_json(t.at("coef")));
  }
  return p;
}

// --- SymMatrix --------------------------------------------------------------

SymMatrix::SymMatrix(std::size_t n, std::size_t nvars) : n_(n), nvars_(nvars), e_(n * n, MultiPoly(nvars)) {
  if (n == 0) throw InvalidArgument("matrix dimension must be at least 1");
}

SymMatrix SymMatrix::generic(std::size_t n) {
  SymMatrix m(n, n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = MultiPoly::entry(n, r + 1, c + 1);
  return m;
}

SymMatrix SymMatrix::from_constant(const RatMatrix& a, std::size_t nvars) {
  SymMatrix m(a.dim(), nvars);
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) m(r, c) = MultiPoly::constant(nvars, a(r, c));
  return m;
}

SymMatrix operator*(const SymMatrix& a, const SymMatrix& b) {
  if (a.dim() != b.dim() || a.nvars() != b.nvars()) throw DimensionMismatch("SymMatrix product shape mismatch");
  SymMatrix p(a.dim(), a.nvars());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t k = 0; k < a.dim(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.dim(); ++j) p(i, j) += a(i, k) * b(k, j);
    }
  }
  return p;
}

std::vector<MultiPoly> operator*(const std::vector<MultiPoly>& row, const SymMatrix& m) {
  if (row.size() != m.dim()) throw DimensionMismatch("row length does not match matrix");
  std::vector<MultiPoly> out(m.dim(), MultiPoly(m.nvars()));
  for (std::size_t k = 0; k < m.dim(); ++k) {
    if (row[k].is_zero()) continue;
    for (std::size_t j = 0; j < m.dim(); ++j) out[j] += row[k] * m(k, j);
  }
  return out;
}

MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw InvalidArgument("determinant of an empty matrix");
  const std::size_t nvars = rows.front().front().nvars();
  if (n == 1) return rows[0][0];
  MultiPoly det(nvars);
  for (std::size_t c = 0; c < n; ++c) {
    if (rows[0][c].is_zero()) continue;
    std::vector<std::vector<MultiPoly>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MultiPoly> row;
      row.reserve(n - 1);
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(rows[r][cc]);
      minor.push_back(std::move(row));
    }
    MultiPoly term = rows[0][c] * determinant(minor);
    if (c % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

MultiPoly symbolic_krylov_det(const SymMatrix& x) {
  const std::size_t n = x.dim();
  const std::size_t nvars = x.nvars();
  if (n == 1) return MultiPoly::constant(nvars, Rational(1));
  // Rows 1..n-1 of the Krylov matrix; row 0 is e_n.
  std::vector<std::vector<MultiPoly>> rows;
  std::vector<MultiPoly> r(n, MultiPoly(nvars));
  for (std::size_t c = 0; c < n; ++c) r[c] = x(n - 1, c);
  for (std::size_t k = 1; k < n; ++k) {
    rows.push_back(r);
    if (k + 1 < n) r = r * x;
  }
  // Expanding along row 0 = e_n leaves the minor without column n, with
  // cofactor sign (-1)^(1+n).
  std::vector<std::vector<MultiPoly>> minor;
  for (auto& row : rows) {
    row.pop_back();
    minor.push_back(std::move(row));
  }
  MultiPoly d = determinant(minor);
  if (n % 2 == 0) d *= Rational(-1);
  return d;
}

MultiPoly symbolic_D(std::size_t n, std::size_t n_max) {
  if (n == 0) throw InvalidArgument("symbolic_D needs n >= 1");
  if (n > n_max) {
    throw ResourceLimit("symbolic_D: n = " + std::to_string(n) + " exceeds the configured bound " +
                        std::to_string(n_max));
  }
  return symbolic_krylov_det(SymMatrix::generic(n));
}

Homogeneity is_homogeneous(const MultiPoly& p) {
  if (p.is_zero()) return AllDegrees{};
  const auto& first = p.terms().begin()->first;
  const std::size_t d = total_degree(first);
  for (const auto& [e, c] : p.terms()) {
    if (total_degree(e) != d) return NotHomogeneous{first, e};
  }
  return d;
}

Rational poly_eval(const MultiPoly& p, const RatMatrix& x) {
  const std::size_t n = x.dim();
  if (p.nvars() != n * n) throw DimensionMismatch("poly_eval: polynomial is not over n^2 entry variables");
  std::vector<Rational> point;
  point.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) point.push_back(x(r, c));
  return p.evaluate(point);
}

MultiPoly euler_operator(const MultiPoly& p) {
  MultiPoly out(p.nvars());
  for (std::size_t v = 0; v < p.nvars(); ++v) out += MultiPoly::variable(p.nvars(), v) * p.derivative(v);
  return out;
}

}  // namespace affinv
