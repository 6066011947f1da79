#include "affinv/cli/commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "affinv/cli/suites.hpp"
#include "affinv/errors.hpp"
#include "affinv/krylov.hpp"
#include "affinv/sympoly.hpp"

namespace affinv::cli {

Json analyze_matrix(const RatMatrix& x, const std::optional<RatMatrix>& conjugator) {
  const Rational d = D(x);
  Json j{{"n", x.dim()},
         {"D", to_string(d)},
         {"in_omega", d != 0},
         {"regular", is_regular(x)},
         {"min_poly", to_json(min_poly(x))},
         {"char_poly", to_json(char_poly(x))},
         {"conjugator", nullptr},
         {"sign_convention", kSignConvention}};
  if (conjugator) j["conjugator"] = to_json(*conjugator);
  return j;
}

Json sympoly_document(std::size_t n, std::size_t n_max) {
  const MultiPoly p = symbolic_D(n, n_max);
  const Homogeneity h = is_homogeneous(p);
  Json j{{"n", n}, {"variables", Json::array()}};
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t k = 1; k <= n; ++k) j["variables"].push_back("x" + std::to_string(i) + "_" + std::to_string(k));
  j["degree"] = std::holds_alternative<std::size_t>(h) ? Json(std::get<std::size_t>(h)) : Json(nullptr);
  j["terms"] = p.term_count();
  j["homogeneous"] = !std::holds_alternative<NotHomogeneous>(h);
  j["polynomial"] = p.to_json();
  return j;
}

std::size_t configured_nmax() {
  if (const char* env = std::getenv("AFFINV_NMAX")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return kDefaultNMax;
}

namespace {

struct GlobalFlags {
  std::uint64_t seed = 1;
  std::string out;
  bool markdown = false;
};

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Reads `path` ("-" or empty for stdin) and parses it as JSON.
Json read_json(const std::string& path, std::istream& in) {
  std::string text;
  if (path.empty() || path == "-") {
    text = read_all(in);
  } else {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'");
    text = read_all(f);
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

int emit(const std::string& text, const GlobalFlags& g, std::ostream& out, std::ostream& err) {
  if (g.out.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f || !(f << text)) {
    err << "error: cannot write '" << g.out << "'\n";
    return kExitBadInput;
  }
  return kExitOk;
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::string analysis_markdown(const Json& a) {
  std::ostringstream os;
  os << "| field | value |\n|---|---|\n";
  for (const auto& [k, v] : a.items()) os << "| " << k << " | `" << v.dump() << "` |\n";
  return os.str();
}

std::string sympoly_markdown(const Json& doc) {
  std::ostringstream os;
  os << "# D_" << doc["n"].get<std::size_t>() << "\n\n- degree: " << doc["degree"].dump()
     << "\n- terms: " << doc["terms"].dump() << "\n- homogeneous: " << doc["homogeneous"].dump() << "\n\n";
  os << "| coef | exponents |\n|---:|---|\n";
  for (const auto& t : doc["polynomial"]) os << "| " << t["coef"].get<std::string>() << " | " << t["exps"].dump() << " |\n";
  return os.str();
}

int cmd_analyze(const std::string& input, bool conjugate, const GlobalFlags& g, std::istream& in, std::ostream& out,
                std::ostream& err) {
  RatMatrix x = matrix_from_json(read_json(input, in));
  std::optional<RatMatrix> conj;
  if (conjugate) {
    auto result = conjugate_into_omega(x, g.seed);
    if (auto* nr = std::get_if<NotRegular>(&result)) {
      err << "error: matrix is not regular (minimal polynomial of degree " << nr->min_poly.degree() << " < n = "
          << x.dim() << "), so no conjugate lies in Omega\n";
      return kExitNotRegular;
    }
    conj = std::get<RatMatrix>(std::move(result));
  }
  const Json a = analyze_matrix(x, conj);
  return emit(g.markdown ? analysis_markdown(a) : a.dump(2) + "\n", g, out, err);
}

int cmd_verify(const std::string& input, bool timestamp, const GlobalFlags& g, std::istream& in, std::ostream& out,
               std::ostream& err) {
  const SuiteConfig cfg = SuiteConfig::from_json(read_json(input, in));
  VerificationReport rep = run_suite(cfg);
  if (timestamp) rep.timestamp = utc_now();
  const int rc = emit(g.markdown ? rep.to_markdown() : rep.to_json().dump(2) + "\n", g, out, err);
  if (rc != kExitOk) return rc;
  return rep.passed() ? kExitOk : kExitSuiteFailed;
}

int cmd_sympoly(std::size_t n, const GlobalFlags& g, std::ostream& out, std::ostream& err) {
  const Json doc = sympoly_document(n, configured_nmax());
  return emit(g.markdown ? sympoly_markdown(doc) : doc.dump(2) + "\n", g, out, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Krylov-row determinant, Omega membership and invariant-theory verification suites", "affinv"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  GlobalFlags g;
  app.add_option("--seed", g.seed, "Seed for randomized procedures")->capture_default_str();
  app.add_option("--out", g.out, "Write output to this file instead of stdout");
  app.add_flag("--markdown", g.markdown, "Render human-readable markdown instead of JSON");

  std::string analyze_input;
  bool conjugate = false;
  auto* analyze = app.add_subcommand("analyze", "Analyze a matrix given as matrix JSON")->fallthrough();
  analyze->add_option("input", analyze_input, "Matrix JSON file ('-' or omitted for stdin)");
  analyze->add_flag("--conjugate", conjugate, "Also conjugate the matrix into Omega");

  std::string verify_input;
  bool timestamp = false;
  auto* verify = app.add_subcommand("verify", "Run a property suite from a JSON config")->fallthrough();
  verify->add_option("config", verify_input, "Suite config JSON file ('-' or omitted for stdin)");
  verify->add_flag("--timestamp", timestamp, "Add a generation timestamp to the report");

  std::size_t sym_n = 0;
  auto* sympoly = app.add_subcommand("sympoly", "Export D_n as an explicit polynomial")->fallthrough();
  sympoly->add_option("--n", sym_n, "Matrix size")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_input, conjugate, g, in, out, err);
    if (*verify) return cmd_verify(verify_input, timestamp, g, in, out, err);
    if (*sympoly) return cmd_sympoly(sym_n, g, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace affinv::cli
