#pragma once

// JSON encodings. Infinity is the string "inf" everywhere; object keys for
// cycle lengths are written in ascending numeric order so output is
// byte-stable.
//
//   census: {"cycles": {"2": 1, "4": "inf"}, "infinite": 0}
//   window: {"K": 4, "values": [0, "inf", 0, "inf"]}

#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fpcf/census.hpp"
#include "fpcf/errors.hpp"
#include "fpcf/inversion.hpp"
#include "fpcf/reconstruct.hpp"

namespace fpcf::io {

using Json = nlohmann::ordered_json;

inline Json to_json(ExtendedCount c) {
  if (c.is_infinite())
    return "inf";
  return c.value();
}

inline ExtendedCount count_from_json(const Json &j, std::string_view where) {
  if (j.is_string() && j.get<std::string>() == "inf")
    return kInfinity;
  if (j.is_number_unsigned())
    return ExtendedCount(j.get<std::uint64_t>());
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
    return ExtendedCount(static_cast<std::uint64_t>(j.get<std::int64_t>()));
  throw ParseError(std::string(where) + ": expected a nonnegative integer or \"inf\", got " +
                       j.dump(),
                   0);
}

inline std::uint64_t parse_positive(std::string_view s, std::string_view where) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0 || s.front() == '0')
    throw ParseError(std::string(where) + ": '" + std::string(s) +
                         "' is not a positive integer",
                     0);
  return v;
}

inline Json to_json(const CycleCensus &census) {
  Json cycles = Json::object();
  for (const auto &[len, count] : census.finite_cycles())
    cycles[std::to_string(len)] = to_json(count);
  return Json{{"cycles", std::move(cycles)}, {"infinite", to_json(census.infinite_cycles())}};
}

inline CycleCensus census_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("cycles") || !j.at("cycles").is_object())
    throw ParseError("census JSON: expected an object with a \"cycles\" object", 0);
  CycleCensus census;
  for (const auto &[key, value] : j.at("cycles").items()) {
    const auto len = parse_positive(key, "census JSON cycle length");
    if (!census.count(len).is_zero())
      throw ParseError("census JSON: duplicate cycle length " + key, 0);
    census.set(len, count_from_json(value, "census JSON count for length " + key));
  }
  if (j.contains("infinite"))
    census.set_infinite_cycles(count_from_json(j.at("infinite"), "census JSON \"infinite\""));
  return census;
}

inline Json to_json(const FpcfWindow &window) {
  Json values = Json::array();
  for (const auto &v : window.values())
    values.push_back(to_json(v));
  return Json{{"K", window.bound()}, {"values", std::move(values)}};
}

inline FpcfWindow window_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("values") || !j.at("values").is_array())
    throw ParseError("window JSON: expected an object with a \"values\" array", 0);
  const auto &arr = j.at("values");
  if (arr.empty())
    throw ParseError("window JSON: \"values\" must hold at least one entry", 0);
  std::vector<ExtendedCount> values;
  values.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i)
    values.push_back(count_from_json(arr[i], "window JSON value " + std::to_string(i + 1)));
  if (j.contains("K")) {
    const auto &K = j.at("K");
    if (!K.is_number_unsigned() || K.get<std::uint64_t>() != values.size())
      throw ParseError("window JSON: \"K\" = " + K.dump() + " does not match " +
                           std::to_string(values.size()) + " values",
                       0);
  }
  return FpcfWindow(std::move(values));
}

/// Plain-text window: one "k value" pair per line for k = 1, 2, ..., K in
/// order. Blank lines and lines starting with '#' are ignored.
inline FpcfWindow parse_window_text(std::string_view text) {
  std::vector<ExtendedCount> values;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string k_tok, v_tok, extra;
    if (!(fields >> k_tok) || k_tok.front() == '#')
      continue;
    auto fail = [&](const std::string &msg) -> ParseError {
      return ParseError("window text, line " + std::to_string(lineno) + ": " + msg, 0, lineno);
    };
    if (!(fields >> v_tok))
      throw fail("expected \"k value\"");
    if (fields >> extra)
      throw fail("unexpected trailing field '" + extra + "'");
    std::uint64_t k = 0;
    try {
      k = parse_positive(k_tok, "k");
    } catch (const ParseError &) {
      throw fail("'" + k_tok + "' is not a positive integer");
    }
    if (k != values.size() + 1)
      throw fail("expected k = " + std::to_string(values.size() + 1) + ", got " + k_tok);
    if (v_tok == "inf") {
      values.push_back(kInfinity);
      continue;
    }
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(v_tok.data(), v_tok.data() + v_tok.size(), v);
    if (ec != std::errc{} || ptr != v_tok.data() + v_tok.size())
      throw fail("'" + v_tok + "' is not a nonnegative integer or inf");
    values.emplace_back(v);
  }
  if (values.empty())
    throw ParseError("window text: no values", 0, lineno);
  return FpcfWindow(std::move(values));
}

inline Json to_json(const CensusClassification &c) {
  return Json{{"finite_type", c.finite_type},
              {"infinite_type", c.infinite_type},
              {"bounded", c.bounded},
              {"finite_multiplicity", c.finite_multiplicity}};
}

inline std::string_view to_string(NotACountingFunctionError::Reason r) {
  return r == NotACountingFunctionError::Reason::NegativeSum ? "NegativeSum" : "NonDivisible";
}

inline Json to_json(const ValidationReport &report) {
  Json checks = Json::array();
  for (const auto &c : report.checks)
    checks.push_back(Json{{"ell", c.ell},
                          {"mobius_sum", c.mobius_sum},
                          {"nonnegative", c.nonnegative},
                          {"divisible", c.divisible}});
  Json first = nullptr;
  if (auto f = report.first_failure())
    first = Json{{"ell", f->ell},
                 {"reason", f->nonnegative ? "NonDivisible" : "NegativeSum"},
                 {"mobius_sum", f->mobius_sum}};
  Json mono = nullptr;
  if (report.monotonicity_failure)
    mono = Json{{"ell", report.monotonicity_failure->ell},
                {"multiple", report.monotonicity_failure->multiple}};
  return Json{{"valid", report.valid()},
              {"window_limited", true},
              {"K", report.checks.size()},
              {"first_failure", std::move(first)},
              {"monotone", report.monotone},
              {"monotonicity_failure", std::move(mono)},
              {"checks", std::move(checks)}};
}

inline Json to_json(const ReconstructionResult &r) {
  Json steps = Json::array();
  for (const auto &s : r.steps)
    steps.push_back(Json{{"ell", s.ell}, {"q", s.q}});
  Json out{{"steps", std::move(steps)}};
  using Status = ReconstructionResult::Status;
  switch (r.status) {
  case Status::CompleteFinite:
    out["status"] = "complete";
    out["total"] = r.total;
    break;
  case Status::PartialWindow:
    out["status"] = "partial";
    out["K"] = r.window_bound;
    break;
  case Status::Invalid:
    out["status"] = "invalid";
    out["reason"] = std::string(fpcf::to_string(*r.reason));
    out["at"] = r.at;
    break;
  }
  return out;
}

} // namespace fpcf::io
