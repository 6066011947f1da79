#include "affinv/json_io.hpp"

#include <string>

#include "affinv/errors.hpp"

namespace affinv {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"n", m.dim()}, {"entries", std::move(rows)}};
}

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(to_string(v[i]));
  return out;
}

Json to_json(const UniPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(std::to_string(j.get<long long>()));
  throw ParseError("rational must be a string \"p/q\" or an integer, got " + j.dump());
}

RatMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("matrix JSON must be an object");
  if (!j.contains("n") || !j.at("n").is_number_integer()) throw ParseError("matrix JSON needs integer field \"n\"");
  if (!j.contains("entries") || !j.at("entries").is_array()) throw ParseError("matrix JSON needs array \"entries\"");
  const long long n = j.at("n").get<long long>();
  const Json& rows = j.at("entries");
  if (n < 1) throw ParseError("matrix dimension n must be at least 1");
  if (rows.size() != static_cast<std::size_t>(n)) throw ParseError("\"entries\" row count does not match n");
  RatMatrix m(static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Json& row = rows[r];
    if (!row.is_array() || row.size() != m.dim()) {
      throw ParseError("row " + std::to_string(r + 1) + " is ragged or not an array");
    }
    for (std::size_t c = 0; c < m.dim(); ++c) m(r, c) = rational_from_json(row[c]);
  }
  return m;
}

}  // namespace affinv
