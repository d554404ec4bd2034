#pragma once

// Command-line front end. `run` takes the argument list and streams so the
// commands can be driven from tests; tools/fpcf.cpp is a thin main().
//
// Exit codes: 0 ok, 1 internal mismatch, 2 input error, 3 invalid function,
// 4 non-unique (window holds infinity).

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fpcf/census.hpp"
#include "fpcf/fixtures.hpp"
#include "fpcf/inversion.hpp"
#include "fpcf/json_io.hpp"
#include "fpcf/period.hpp"
#include "fpcf/permutation.hpp"
#include "fpcf/reconstruct.hpp"

namespace fpcf::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalMismatch = 1,
  kInputError = 2,
  kInvalidFunction = 3,
  kNonUnique = 4,
};

struct Limits {
  std::uint64_t max_elements = 10000;
  std::uint64_t max_window = 1000000;
  std::uint64_t max_oracle_window = 10000;
};

/// Thrown for anything wrong with the user's input; maps to exit code 2.
class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when two independent computations disagree; maps to exit code 1.
class MismatchError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

using io::Json;

/// A loaded input: a permutation, a census, or a window.
struct PermutationInput {
  ExplicitPermutation perm;
};
struct CensusInput {
  CycleCensus census;
  /// Set for fixtures: the window the census must reproduce.
  std::optional<FpcfWindow> expected_window;
};
struct WindowInput {
  FpcfWindow window;
};
using Input = std::variant<PermutationInput, CensusInput, WindowInput>;

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

/// "-" reads stdin, an existing file is read, anything else is literal text.
inline std::string read_source(const std::string &arg, std::istream &in) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::error_code ec;
  if (!arg.empty() && arg.front() != '(' && arg.front() != '{' &&
      std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream f(arg);
    if (!f)
      throw InputError("cannot open '" + arg + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }
  return arg;
}

inline std::optional<FixtureName> as_fixture(const std::string &text) {
  std::string_view name = text;
  if (name.starts_with("fixture:"))
    name.remove_prefix(8);
  for (auto f : kAllFixtures)
    if (to_string(f) == name)
      return f;
  if (text.starts_with("fixture:"))
    throw InputError("unknown fixture '" + std::string(name) + "' (expected sigma0..sigma4)");
  return std::nullopt;
}

inline Input load_input(const std::string &arg, std::istream &in, std::uint64_t n,
                        std::uint64_t K, const Limits &limits) {
  const std::string text = trim(read_source(arg, in));
  if (auto f = as_fixture(text)) {
    auto fx = fixture(*f, K);
    return CensusInput{std::move(fx.census), std::move(fx.expected)};
  }
  if (text.starts_with('{')) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error &e) {
      throw ParseError(std::string("JSON input, byte ") + std::to_string(e.byte) + ": " +
                           e.what(),
                       e.byte);
    }
    if (j.contains("values"))
      return WindowInput{io::window_from_json(j)};
    if (j.contains("census"))
      return CensusInput{io::census_from_json(j.at("census")), std::nullopt};
    if (j.contains("cycles"))
      return CensusInput{io::census_from_json(j), std::nullopt};
    throw InputError("JSON input is neither a census (\"cycles\") nor a window (\"values\")");
  }
  if (text.empty() || text.starts_with('(')) {
    if (n == 0)
      n = max_element_in(text);
    if (n == 0)
      throw InputError("empty cycle notation needs the ground set size (-n)");
    if (n > limits.max_elements)
      throw InputError("ground set size " + std::to_string(n) + " exceeds the cap of " +
                       std::to_string(limits.max_elements));
    return PermutationInput{parse_cycles(text, n)};
  }
  return WindowInput{io::parse_window_text(text)};
}

inline void check_window_bound(std::uint64_t K, std::uint64_t cap) {
  if (K == 0)
    throw InputError("--window must be positive");
  if (K > cap)
    throw InputError("--window " + std::to_string(K) + " exceeds the cap of " +
                     std::to_string(cap));
}

inline std::string dump(const Json &j, bool compact) {
  return compact ? j.dump() : j.dump(2);
}

inline FpcfWindow require_window(const Input &input, const char *command) {
  if (auto *w = std::get_if<WindowInput>(&input))
    return w->window;
  if (auto *c = std::get_if<CensusInput>(&input); c && c->expected_window)
    return *c->expected_window;
  throw InputError(std::string(command) +
                   " expects a window (JSON {\"K\",\"values\"}, \"k value\" lines, or a fixture)");
}

inline Json non_unique_json(std::uint64_t k) {
  return Json{
      {"error", "non_unique"},
      {"at", k},
      {"message",
       "F(" + std::to_string(k) +
           ") is infinite: such functions do not determine the cycle census. For example "
           "(1,2)(3,4)..., (1,2,3,4)(5,6)(7,8)..., (1,2)(3,4,5,6)(7,8)(9,10,11,12)... and an "
           "infinite cycle times (1,2)(4,5)(7,8)... are pairwise non-conjugate yet all have "
           "F(k) = 0 for odd k and infinity for even k."}};
}

/// Census, classification, window, periods and validity, with consistency
/// checks between independently computed fields.
inline Json analysis_report(const CycleCensus &census, std::uint64_t K) {
  const auto window = fpcf_window(census, K);
  const auto classification = classify(census);

  for (std::uint64_t k = 1; k <= K; ++k)
    if (window.at(k).is_infinite() != is_fpcf_infinite_at(census, k))
      throw MismatchError("window infinity at k=" + std::to_string(k) +
                          " disagrees with the divisor criterion");
  if (classification.finite_multiplicity && window.first_infinite() != 0)
    throw MismatchError("finite multiplicity census produced an infinite window value");
  if (census.empty_finite() != std::ranges::all_of(window.values(),
                                                   [](ExtendedCount v) { return v.is_zero(); }) &&
      census.max_length() <= K)
    throw MismatchError("zero-function criterion violated");

  // The lcm of many lengths (e.g. a long prefix of sigma0) can exceed 64 bits.
  std::optional<ExtendedCount> bound;
  try {
    bound = period_bound(census);
  } catch (const OverflowError &) {
  }
  const auto minimal = minimal_period_window(window);
  if (bound) {
    const std::uint64_t p = bound->value();
    for (std::uint64_t k = 1; k + p <= K; ++k)
      if (!(window.at(k) == window.at(k + p)))
        throw MismatchError("window does not repeat with period " + std::to_string(p));
    if (minimal && 2 * p <= K && p % *minimal != 0)
      throw MismatchError("minimal window period does not divide the lcm period");
  }

  Json validity;
  if (auto k = window.first_infinite()) {
    validity = Json{{"applicable", false},
                    {"reason", "window holds infinity at k=" + std::to_string(k)}};
  } else {
    const auto report = validate_fpcf_window(window);
    if (!report.valid())
      throw MismatchError("window of a census failed validation");
    validity = io::to_json(report);
  }

  Json period{{"bound", bound ? io::to_json(*bound) : Json(nullptr)},
              {"bound_overflow", !bound},
              {"minimal_in_window", minimal ? Json(*minimal) : Json(nullptr)},
              {"window_limited", true}};
  return Json{{"census", io::to_json(census)},
              {"classification", io::to_json(classification)},
              {"window", io::to_json(window)},
              {"period", std::move(period)},
              {"validity", std::move(validity)}};
}

inline std::string human_summary(const Json &report) {
  std::ostringstream s;
  const auto &c = report.at("classification");
  s << "census " << report.at("census").dump() << '\n'
    << "finite type: " << c.at("finite_type") << ", infinite type: " << c.at("infinite_type")
    << ", finite multiplicity: " << c.at("finite_multiplicity") << '\n'
    << "F(1.." << report.at("window").at("K") << ") = " << report.at("window").at("values").dump()
    << '\n'
    << "period (lcm of lengths): " << report.at("period").at("bound").dump()
    << ", least period seen in window: " << report.at("period").at("minimal_in_window").dump()
    << '\n';
  return s.str();
}

} // namespace detail

inline int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
               std::ostream &err, const Limits &limits = {}) {
  CLI::App app{"Convert between cycle censuses and fixed point counting functions", "fpcf"};
  app.require_subcommand(1);

  std::uint64_t K = 64;
  bool compact = false;
  bool quiet = false;
  bool verbose = false;
  std::uint64_t n = 0;
  std::string input;
  std::string method = "both";
  bool truncated = false;
  std::uint64_t cap = limits.max_elements;

  auto common = [&](CLI::App *sub, bool with_n) {
    sub->add_option("input", input,
                    "cycle notation, census/window JSON, \"k value\" lines, a fixture name "
                    "(sigma0..sigma4), a file path, or - for stdin")
        ->required();
    sub->add_option("--window,-K", K, "window bound K")->capture_default_str();
    sub->add_flag("--json", compact, "compact single-line JSON");
    sub->add_flag("--quiet,-q", quiet, "no diagnostics on stderr");
    sub->add_flag("--verbose,-v", verbose, "human-readable summary on stderr");
    if (with_n)
      sub->add_option("-n,--size", n, "ground set size for cycle notation (default: largest element)");
  };

  auto *analyze = app.add_subcommand("analyze", "full report for a permutation or census");
  common(analyze, true);
  auto *invert = app.add_subcommand("invert", "recover the cycle census from a window");
  common(invert, false);
  invert->add_option("--method", method, "mobius, greedy or both")
      ->check(CLI::IsMember({"mobius", "greedy", "both"}))
      ->capture_default_str();
  invert->add_flag("--truncated", truncated,
                   "the window is a prefix of a longer function (greedy reports partial)");
  auto *validate = app.add_subcommand("validate", "check whether a window is a fixed point counting function");
  common(validate, false);
  auto *oracle = app.add_subcommand("oracle", "brute-force fixed point counts against the divisor-sum formula");
  common(oracle, true);
  oracle->add_option("--cap", cap, "largest ground set accepted")->capture_default_str();
  auto *period = app.add_subcommand("period", "period of F for a permutation, census or window");
  common(period, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  auto emit = [&](const Json &j) { out << detail::dump(j, compact) << '\n'; };
  auto diag = [&](const std::string &msg) {
    if (!quiet)
      err << "fpcf: " << msg << '\n';
  };

  try {
    if (*oracle) {
      detail::check_window_bound(K, limits.max_oracle_window);
      const std::string text = detail::trim(detail::read_source(input, in));
      if (!text.empty() && !text.starts_with('('))
        throw InputError("oracle expects cycle notation");
      std::uint64_t size = n ? n : max_element_in(text);
      if (size == 0)
        throw InputError("empty cycle notation needs the ground set size (-n)");
      if (size > cap)
        throw InputError("ground set size " + std::to_string(size) + " exceeds the oracle cap of " +
                         std::to_string(cap));
      const auto perm = parse_cycles(text, size);
      const auto brute = brute_force_window(perm, K);
      const auto formula = fpcf_window(census_of(perm), K);
      const bool match = brute == formula;
      emit(Json{{"permutation", render(decompose(perm))},
                {"n", perm.size()},
                {"K", K},
                {"brute_force", io::to_json(brute).at("values")},
                {"formula", io::to_json(formula).at("values")},
                {"match", match}});
      if (!match) {
        diag("brute-force and formula windows differ");
        return kInternalMismatch;
      }
      return kOk;
    }

    detail::check_window_bound(K, limits.max_window);
    const Input loaded = detail::load_input(input, in, n, K, limits);

    if (*analyze) {
      CycleCensus census;
      if (auto *p = std::get_if<PermutationInput>(&loaded)) {
        census = census_of(p->perm);
        if (p->perm.size() * K <= 10'000'000 && brute_force_window(p->perm, K) != fpcf_window(census, K))
          throw MismatchError("brute-force fixed points disagree with the census formula");
      } else if (auto *c = std::get_if<CensusInput>(&loaded)) {
        census = c->census;
        if (c->expected_window && fpcf_window(census, K) != *c->expected_window)
          throw MismatchError("fixture census does not reproduce its expected window");
      } else {
        throw InputError("analyze expects a permutation or a census, not a window");
      }
      const Json report = detail::analysis_report(census, K);
      emit(report);
      if (verbose && !quiet)
        err << detail::human_summary(report);
      return kOk;
    }

    if (*period) {
      Json j;
      FpcfWindow window = FpcfWindow::from_finite({0});
      if (auto *w = std::get_if<WindowInput>(&loaded)) {
        window = w->window;
        j["bound"] = nullptr;
      } else {
        const CycleCensus census = std::holds_alternative<PermutationInput>(loaded)
                                       ? census_of(std::get<PermutationInput>(loaded).perm)
                                       : std::get<CensusInput>(loaded).census;
        window = fpcf_window(census, K);
        j["bound"] = io::to_json(period_bound(census));
      }
      const auto minimal = minimal_period_window(window);
      j["K"] = window.bound();
      j["minimal_in_window"] = minimal ? Json(*minimal) : Json(nullptr);
      j["window_limited"] = true;
      emit(j);
      return kOk;
    }

    const FpcfWindow window = detail::require_window(loaded, *validate ? "validate" : "invert");
    if (auto k = window.first_infinite()) {
      const Json j = detail::non_unique_json(k);
      emit(j);
      diag(j.at("message").get<std::string>());
      return kNonUnique;
    }

    if (*validate) {
      const auto report = validate_fpcf_window(window);
      emit(io::to_json(report));
      return report.valid() ? kOk : kInvalidFunction;
    }

    // invert
    Json j{{"method", method}};
    bool mobius_ok = true;
    bool greedy_ok = true;
    std::optional<CycleCensus> mobius_census;
    std::optional<ReconstructionResult> greedy;
    if (method != "greedy") {
      try {
        mobius_census = census_from_fpcf(window);
        j["census"] = io::to_json(*mobius_census);
      } catch (const NotACountingFunctionError &e) {
        mobius_ok = false;
        j["census"] = nullptr;
        j["mobius_error"] = Json{{"reason", std::string(io::to_string(e.reason()))},
                                 {"at", e.ell()},
                                 {"mobius_sum", e.mobius_sum()}};
      }
    }
    if (method != "mobius") {
      greedy = reconstruct(window, truncated ? Truncation::Prefix : Truncation::WholeFunction);
      greedy_ok = greedy->ok();
      j["reconstruction"] = io::to_json(*greedy);
    }
    if (method == "both") {
      const bool agree = mobius_ok == greedy_ok &&
                         (!mobius_ok || greedy->census() == *mobius_census);
      j["agreement"] = agree;
      emit(j);
      if (!agree) {
        diag("Moebius inversion and greedy reconstruction disagree");
        return kInternalMismatch;
      }
    } else {
      emit(j);
    }
    if (!mobius_ok || !greedy_ok) {
      diag("not a fixed point counting function");
      return kInvalidFunction;
    }
    return kOk;
  } catch (const ParseError &e) {
    diag(std::string("parse error: ") + e.what());
    return kInputError;
  } catch (const InputError &e) {
    diag(e.what());
    return kInputError;
  } catch (const OverflowError &e) {
    diag(std::string("overflow: ") + e.what());
    return kInputError;
  } catch (const std::invalid_argument &e) {
    diag(e.what());
    return kInputError;
  } catch (const MismatchError &e) {
    diag(std::string("internal mismatch: ") + e.what());
    return kInternalMismatch;
  } catch (const std::exception &e) {
    diag(std::string("internal error: ") + e.what());
    return kInternalMismatch;
  }
}

} // namespace fpcf::cli
