#pragma once

// affinv subcommands: analyze, verify, sympoly.
//
// Exit codes: 0 success, 1 verification failure (report still written),
// 2 malformed input or configuration, 3 --conjugate on a non-regular matrix.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "affinv/exactmat.hpp"
#include "affinv/json_io.hpp"

namespace affinv::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitSuiteFailed = 1,
  kExitBadInput = 2,
  kExitNotRegular = 3,
};

inline constexpr const char* kSignConvention = "(-1)^(n(n-1)/2)";

/// The analysis record. `conjugator` is null unless a conjugation was
/// requested and succeeded.
Json analyze_matrix(const RatMatrix& x, const std::optional<RatMatrix>& conjugator);

/// Term list plus {"degree", "terms", "homogeneous"}.
Json sympoly_document(std::size_t n, std::size_t n_max);

/// N_max from AFFINV_NMAX, falling back to the library default.
std::size_t configured_nmax();

/// Full command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace affinv::cli
