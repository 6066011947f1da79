#include "affinv/scalar_field.hpp"

#include <algorithm>
#include <string>

#include "affinv/errors.hpp"

namespace affinv {

ScalarField ScalarField::constant(const Rational& value) {
  return ScalarField(std::make_shared<const Node>(Node{Kind::kConst, value, 0, 0, 0, {}}));
}

ScalarField ScalarField::var(std::size_t i, std::size_t j) {
  if (i < 1 || j < 1) throw IndexOutOfRange("var indices are 1-based");
  return ScalarField(std::make_shared<const Node>(Node{Kind::kVar, Rational(0), i, j, 0, {}}));
}

ScalarField ScalarField::pk(unsigned k) {
  if (k < 1) throw InvalidArgument("pk requires k >= 1");
  return ScalarField(std::make_shared<const Node>(Node{Kind::kPk, Rational(0), 0, 0, k, {}}));
}

ScalarField ScalarField::add(std::vector<ScalarField> args) {
  return ScalarField(std::make_shared<const Node>(Node{Kind::kAdd, Rational(0), 0, 0, 0, std::move(args)}));
}

ScalarField ScalarField::mul(std::vector<ScalarField> args) {
  return ScalarField(std::make_shared<const Node>(Node{Kind::kMul, Rational(0), 0, 0, 0, std::move(args)}));
}

ScalarField ScalarField::pow(ScalarField base, unsigned exponent) {
  return ScalarField(
      std::make_shared<const Node>(Node{Kind::kPow, Rational(0), 0, 0, exponent, {std::move(base)}}));
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) { return ScalarField::add({a, b}); }
ScalarField operator*(const ScalarField& a, const ScalarField& b) { return ScalarField::mul({a, b}); }

bool ScalarField::is_trace_polynomial() const {
  switch (kind()) {
    case Kind::kConst:
    case Kind::kPk:
      return true;
    case Kind::kVar:
      return false;
    default:
      return std::all_of(args().begin(), args().end(), [](const ScalarField& a) { return a.is_trace_polynomial(); });
  }
}

std::size_t ScalarField::max_index() const {
  if (kind() == Kind::kVar) return std::max(row(), col());
  std::size_t m = 0;
  for (const auto& a : args()) m = std::max(m, a.max_index());
  return m;
}

void ScalarField::validate(std::size_t n) const {
  if (max_index() > n) {
    throw IndexOutOfRange("field references entry index " + std::to_string(max_index()) + " but n = " +
                          std::to_string(n));
  }
}

Json ScalarField::to_json() const {
  switch (kind()) {
    case Kind::kConst:
      return Json{{"kind", "const"}, {"value", to_string(value())}};
    case Kind::kVar:
      return Json{{"kind", "var"}, {"i", row()}, {"j", col()}};
    case Kind::kPk:
      return Json{{"kind", "pk"}, {"k", exponent()}};
    case Kind::kPow:
      return Json{{"kind", "pow"}, {"base", args().front().to_json()}, {"exp", exponent()}};
    case Kind::kAdd:
    case Kind::kMul: {
      Json list = Json::array();
      for (const auto& a : args()) list.push_back(a.to_json());
      return Json{{"kind", kind() == Kind::kAdd ? "add" : "mul"}, {"args", std::move(list)}};
    }
  }
  return {};
}

namespace {

unsigned json_unsigned(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<long long>() < 0) {
    throw ParseError(std::string("field node needs nonnegative integer \"") + key + "\"");
  }
  return static_cast<unsigned>(j.at(key).get<long long>());
}

}  // namespace

ScalarField ScalarField::from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw ParseError("field node must be an object with a string \"kind\"");
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "const") {
    if (!j.contains("value")) throw ParseError("const node needs \"value\"");
    return constant(rational_from_json(j.at("value")));
  }
  if (kind == "var") {
    const unsigned i = json_unsigned(j, "i");
    const unsigned jj = json_unsigned(j, "j");
    if (i < 1 || jj < 1) throw ParseError("var indices are 1-based");
    return var(i, jj);
  }
  if (kind == "pk") {
    const unsigned k = json_unsigned(j, "k");
    if (k < 1) throw ParseError("pk needs k >= 1");
    return pk(k);
  }
  if (kind == "pow") {
    if (!j.contains("base")) throw ParseError("pow node needs \"base\"");
    return pow(from_json(j.at("base")), json_unsigned(j, "exp"));
  }
  if (kind == "add" || kind == "mul") {
    if (!j.contains("args") || !j.at("args").is_array()) throw ParseError(kind + " node needs array \"args\"");
    std::vector<ScalarField> args;
    for (const auto& a : j.at("args")) args.push_back(from_json(a));
    return kind == "add" ? add(std::move(args)) : mul(std::move(args));
  }
  throw ParseError("unknown field node kind '" + kind + "'");
}

// --- evaluation -------------------------------------------------------------

namespace {

template <class T>
struct Jet {
  T v;
  std::vector<T> d;
};

template <class T>
T from_rational(const Rational& r) {
  if constexpr (std::is_same_v<T, double>) {
    return r.get_d();
  } else {
    return r;
  }
}

// Plain evaluation over a scalar ring T.
template <class T>
struct PlainEval {
  using Value = T;
  std::span<const T> x;
  std::size_t n;

  Value konst(const Rational& r) const { return from_rational<T>(r); }
  Value entry(std::size_t idx) const { return x[idx]; }
  static Value add(const Value& a, const Value& b) { return a + b; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
};

// Forward-mode evaluation carrying the n^2 partial derivatives.
template <class T>
struct JetEval {
  using Value = Jet<T>;
  std::span<const T> x;
  std::size_t n;

  Value konst(const Rational& r) const { return {from_rational<T>(r), std::vector<T>(n * n, T(0))}; }
  Value entry(std::size_t idx) const {
    Value out{x[idx], std::vector<T>(n * n, T(0))};
    out.d[idx] = T(1);
    return out;
  }
  static Value add(const Value& a, const Value& b) {
    Value out{a.v + b.v, a.d};
    for (std::size_t i = 0; i < out.d.size(); ++i) out.d[i] += b.d[i];
    return out;
  }
  static Value mul(const Value& a, const Value& b) {
    Value out{a.v * b.v, std::vector<T>(a.d.size())};
    for (std::size_t i = 0; i < out.d.size(); ++i) out.d[i] = a.d[i] * b.v + a.v * b.d[i];
    return out;
  }
};

template <class Ev>
typename Ev::Value eval_node(const ScalarField& f, const Ev& ev) {
  using Value = typename Ev::Value;
  switch (f.kind()) {
    case ScalarField::Kind::kConst:
      return ev.konst(f.value());
    case ScalarField::Kind::kVar: {
      if (f.row() > ev.n || f.col() > ev.n) throw IndexOutOfRange("var index exceeds matrix dimension");
      return ev.entry((f.row() - 1) * ev.n + (f.col() - 1));
    }
    case ScalarField::Kind::kAdd: {
      Value acc = ev.konst(Rational(0));
      for (const auto& a : f.args()) acc = Ev::add(acc, eval_node(a, ev));
      return acc;
    }
    case ScalarField::Kind::kMul: {
      Value acc = ev.konst(Rational(1));
      for (const auto& a : f.args()) acc = Ev::mul(acc, eval_node(a, ev));
      return acc;
    }
    case ScalarField::Kind::kPow: {
      Value base = eval_node(f.args().front(), ev);
      Value acc = ev.konst(Rational(1));
      unsigned e = f.exponent();
      while (e > 0) {
        if (e & 1u) acc = Ev::mul(acc, base);
        e >>= 1u;
        if (e > 0) base = Ev::mul(base, base);
      }
      return acc;
    }
    case ScalarField::Kind::kPk: {
      const std::size_t n = ev.n;
      std::vector<Value> xm;
      xm.reserve(n * n);
      for (std::size_t i = 0; i < n * n; ++i) xm.push_back(ev.entry(i));
      std::vector<Value> pw = xm;
      for (unsigned step = 1; step < f.exponent(); ++step) {
        std::vector<Value> next;
        next.reserve(n * n);
        for (std::size_t r = 0; r < n; ++r) {
          for (std::size_t c = 0; c < n; ++c) {
            Value s = ev.konst(Rational(0));
            for (std::size_t k = 0; k < n; ++k) s = Ev::add(s, Ev::mul(pw[r * n + k], xm[k * n + c]));
            next.push_back(std::move(s));
          }
        }
        pw = std::move(next);
      }
      Value tr = ev.konst(Rational(0));
      for (std::size_t i = 0; i < n; ++i) tr = Ev::add(tr, pw[i * n + i]);
      return Ev::mul(tr, ev.konst(Rational(Rational(1) / f.exponent())));
    }
  }
  throw InvalidArgument("corrupt field node");
}

std::vector<Rational> flatten(const RatMatrix& x) {
  std::vector<Rational> out;
  out.reserve(x.dim() * x.dim());
  for (std::size_t r = 0; r < x.dim(); ++r)
    for (std::size_t c = 0; c < x.dim(); ++c) out.push_back(x(r, c));
  return out;
}

void require_square(std::span<const double> entries, std::size_t n) {
  if (entries.size() != n * n) throw DimensionMismatch("entry buffer is not n x n");
}

}  // namespace

Rational evaluate(const ScalarField& f, const RatMatrix& x) {
  const auto flat = flatten(x);
  return eval_node(f, PlainEval<Rational>{flat, x.dim()});
}

double evaluate(const ScalarField& f, std::span<const double> entries, std::size_t n) {
  require_square(entries, n);
  return eval_node(f, PlainEval<double>{entries, n});
}

RatMatrix partial_derivatives(const ScalarField& f, const RatMatrix& x) {
  const auto flat = flatten(x);
  const auto jet = eval_node(f, JetEval<Rational>{flat, x.dim()});
  RatMatrix out(x.dim());
  for (std::size_t r = 0; r < x.dim(); ++r)
    for (std::size_t c = 0; c < x.dim(); ++c) out(r, c) = jet.d[r * x.dim() + c];
  return out;
}

std::vector<double> partial_derivatives(const ScalarField& f, std::span<const double> entries, std::size_t n) {
  require_square(entries, n);
  return eval_node(f, JetEval<double>{entries, n}).d;
}

}  // namespace affinv
