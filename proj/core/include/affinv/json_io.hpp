#pragma once

// Matrix JSON schema shared by every command:
//   {"n": <int>, "entries": [[<rat>, ...], ...]}
// where <rat> is a string "p/q" or "p". Rows are listed top to bottom, so
// entries[i-1][j-1] is the (i, j) entry.

#include <nlohmann/json.hpp>

#include "affinv/exactmat.hpp"

namespace affinv {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const RatMatrix& m);
Json to_json(const RatVector& v);
/// Ascending coefficient list of strings.
Json to_json(const UniPoly& p);

/// Accepts a string literal or a JSON integer. Throws ParseError otherwise.
Rational rational_from_json(const Json& j);
/// Validates the schema: n >= 1 matches the row count, rows are not ragged,
/// every entry is a valid rational.
RatMatrix matrix_from_json(const Json& j);

}  // namespace affinv
