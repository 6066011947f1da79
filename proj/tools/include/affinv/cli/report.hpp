#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <deque>
#include <vector>

#include "affinv/json_io.hpp"

namespace affinv::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Outcome of one property over all samples of a suite.
struct PropertyRecord {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  /// Empty for exact properties (serialized as "exact").
  std::optional<double> worst_residual;
  std::vector<Json> witnesses;

  explicit PropertyRecord(std::string property_name, bool exact = true);

  /// Counts one check; a failure must carry the inputs that reproduce it.
  void record(bool ok, Json witness);
  /// Tracks the largest residual seen by a tolerance property.
  void observe(double residual);

  bool passed() const noexcept { return failures == 0; }
  Json to_json() const;
};

struct VerificationReport {
  std::string suite;
  std::size_t n = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  /// deque: add() hands out references that stay valid.
  std::deque<PropertyRecord> properties;
  Json config = Json::object();
  /// Only emitted on request; every other field is a function of the config.
  std::optional<std::string> timestamp;

  bool passed() const;
  PropertyRecord& add(std::string name, bool exact = true);
  Json to_json() const;
  std::string to_markdown() const;
};

}  // namespace affinv::cli
