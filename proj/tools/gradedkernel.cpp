// gradedkernel: run a session script.
//
//   gradedkernel [options] [SCRIPT]      reads standard input without SCRIPT
//
// Exit codes: 0 success, 1 engine error, 2 parse error, 3 golden failure.

#include "gradedkernel/session.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

std::optional<gk::FieldSpec> parse_field_flag(const std::string& s) {
  if (s == "QQ") return gk::FieldSpec::rationals();
  std::string digits = s.rfind("ZZ/", 0) == 0 ? s.substr(3) : s;
  if (digits.empty() || digits.size() > 10 || digits.find_first_not_of("0123456789") != std::string::npos)
    return std::nullopt;
  auto p = std::stoull(digits);
  if (p < 2 || p > (1ull << 31) || !gk::is_prime(p)) return std::nullopt;
  return gk::FieldSpec::prime(static_cast<std::uint32_t>(p));
}

std::optional<std::pair<int, int>> parse_window_flag(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) return std::nullopt;
  try {
    std::size_t a = 0, b = 0;
    int lo = std::stoi(s.substr(0, colon), &a);
    int hi = std::stoi(s.substr(colon + 1), &b);
    if (a != colon || b != s.size() - colon - 1 || lo > hi) return std::nullopt;
    return std::pair{lo, hi};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded commutative algebra kernel: resolutions, local cohomology and claim verification"};
  std::string script_path;
  std::string field_flag;
  std::optional<std::uint64_t> seed;
  int tmax = 6;
  std::string window_flag;
  std::optional<int> max_steps;
  std::string json_path;
  std::optional<double> timeout;

  app.add_option("script", script_path, "session script (default: standard input)");
  app.add_option("--field", field_flag, "coefficient field: QQ or a prime p (overrides ring declarations)");
  app.add_option("--seed", seed, "corpus seed for verify (fallback: GRADEDKERNEL_SEED, then 0)");
  app.add_option("--tmax", tmax, "highest tower level for verify")->check(CLI::Range(1, gk::kMaxTowerLevel));
  app.add_option("--window", window_flag, "degree window LO:HI for tables and towers");
  app.add_option("--max-steps", max_steps, "resolution length cap")->check(CLI::Range(0, 64));
  app.add_option("--json", json_path, "write the machine-readable report to this file");
  app.add_option("--timeout", timeout, "time limit per command in seconds")->check(CLI::PositiveNumber);
  app.set_version_flag("--version", std::string(GRADEDKERNEL_VERSION));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  gk::SessionOptions opts;
  if (!field_flag.empty()) {
    opts.field = parse_field_flag(field_flag);
    if (!opts.field) {
      std::cerr << "error: --field must be QQ or a prime below 2^31\n";
      return 2;
    }
  }
  if (!window_flag.empty()) {
    opts.window = parse_window_flag(window_flag);
    if (!opts.window) {
      std::cerr << "error: --window must be LO:HI with LO <= HI\n";
      return 2;
    }
  }
  if (seed) {
    opts.seed = *seed;
  } else if (const char* env = std::getenv("GRADEDKERNEL_SEED")) {
    try {
      std::size_t used = 0;
      opts.seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      std::cerr << "error: GRADEDKERNEL_SEED must be a non-negative integer\n";
      return 2;
    }
  }
  opts.tmax = tmax;
  opts.max_steps = max_steps;
  opts.timeout = timeout;

  std::string text;
  if (script_path.empty() || script_path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(script_path, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read " << script_path << "\n";
      return 1;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }

  auto outcome = gk::run_session(text, opts);
  if (outcome.exit_code == 0 || outcome.exit_code == 3) std::cout << outcome.text;
  else {
    // everything up to the error goes to stdout, the error itself to stderr
    auto pos = outcome.text.rfind("error: ");
    std::cout << outcome.text.substr(0, pos);
    std::cerr << outcome.text.substr(pos);
  }
  if (outcome.exit_code == 3) std::cerr << "error: golden checks failed\n";

  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << json_path << "\n";
      return 1;
    }
    out << gk::report_to_string(outcome.report);
  }
  return outcome.exit_code;
}
