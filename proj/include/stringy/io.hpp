#pragma once

// JSON output records and the strata / E-polynomial input files.
//
// Every integer crosses the JSON boundary as a canonical decimal string so that
// arbitrary precision survives serialization.
//
// Strata file:
//   {"divisors": [{"label": "E", "discrepancy": 4}],
//    "strata":   [{"subset": [], "e_poly": ["-1", "0", "1"]},
//                 {"subset": ["E"], "e_poly": ["1", "1"]}]}
// E-polynomial file: a bare array of coefficient strings, ascending degree.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stringy/partitions.hpp"
#include "stringy/polynomial.hpp"
#include "stringy/stringy.hpp"

namespace stringy::io {

using nlohmann::json;

/// Unreadable or malformed input files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_canonical_decimal(const std::string& s) {
  static const std::regex pattern("-?(0|[1-9][0-9]*)");
  return std::regex_match(s, pattern) && s != "-0";
}

inline BigInt parse_decimal(const std::string& s) {
  if (!is_canonical_decimal(s)) throw InputError("not a canonical decimal integer: '" + s + "'");
  return BigInt(s);
}

inline json encode_polynomial(const Polynomial& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.str());
  return out;
}

/// Rejects non-string entries and a trailing zero coefficient.
inline Polynomial decode_polynomial(const json& j) {
  if (!j.is_array()) throw InputError("coefficient list must be a JSON array");
  std::vector<BigInt> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) {
    if (!c.is_string()) throw InputError("coefficients must be decimal strings");
    coeffs.push_back(parse_decimal(c.get<std::string>()));
  }
  if (!coeffs.empty() && coeffs.back() == 0) throw InputError("coefficient list has a zero leading coefficient");
  return Polynomial(std::move(coeffs));
}

inline json encode_rational(const BigRational& r) {
  return {{"numerator", numerator(r).str()}, {"denominator", denominator(r).str()}};
}

inline BigRational decode_rational(const json& j) {
  const BigInt num = parse_decimal(j.at("numerator").get<std::string>());
  const BigInt den = parse_decimal(j.at("denominator").get<std::string>());
  if (den <= 0) throw InputError("rational denominator must be positive");
  BigRational r(num, den);
  if (denominator(r) != den) throw InputError("rational is not in lowest terms");
  return r;
}

inline json encode_rational_function(const FactoredRationalFunction& f) {
  json den = json::array();
  for (const auto& [d, mult] : f.denominator()) {
    den.push_back({{"index", std::to_string(d.value())}, {"multiplicity", std::to_string(mult)}});
  }
  return {{"numerator", encode_polynomial(f.numerator())},
          {"denominator", std::move(den)},
          {"polynomial", f.is_polynomial()}};
}

inline FactoredRationalFunction decode_rational_function(const json& j, unsigned scale = 1) {
  CyclotomicMultiset den;
  for (const auto& entry : j.at("denominator")) {
    const BigInt d = parse_decimal(entry.at("index").get<std::string>());
    const BigInt mult = parse_decimal(entry.at("multiplicity").get<std::string>());
    if (d < 1 || d > UINT32_MAX || mult < 1 || mult > UINT32_MAX) throw InputError("bad cyclotomic factor");
    den[CyclotomicIndex(static_cast<std::uint32_t>(d))] = static_cast<unsigned>(mult);
  }
  return {decode_polynomial(j.at("numerator")), std::move(den), scale};
}

inline json encode_partition(const Partition& p) {
  json out = json::array();
  for (auto part : p.parts()) out.push_back(std::to_string(part));
  return out;
}

enum class ResultKind { polynomial, rational_function, rational_number, partition_list, table };

NLOHMANN_JSON_SERIALIZE_ENUM(ResultKind, {
                                             {ResultKind::polynomial, "polynomial"},
                                             {ResultKind::rational_function, "rational-function"},
                                             {ResultKind::rational_number, "rational-number"},
                                             {ResultKind::partition_list, "partition-list"},
                                             {ResultKind::table, "table"},
                                         })

struct VariableInfo {
  std::string name = "q";
  unsigned scale = 1;
  bool bivariate = false;

  friend bool operator==(const VariableInfo&, const VariableInfo&) = default;
};

struct OutputRecord {
  std::string command;
  std::vector<std::string> params;
  ResultKind kind = ResultKind::polynomial;
  json payload;
  VariableInfo variable;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

inline void to_json(json& j, const VariableInfo& v) {
  j = {{"name", v.name}, {"scale", v.scale}, {"bivariate", v.bivariate}};
}

inline void from_json(const json& j, VariableInfo& v) {
  j.at("name").get_to(v.name);
  j.at("scale").get_to(v.scale);
  j.at("bivariate").get_to(v.bivariate);
}

inline void to_json(json& j, const OutputRecord& r) {
  j = {{"command", r.command},
       {"params", r.params},
       {"kind", r.kind},
       {"payload", r.payload},
       {"variable", r.variable}};
}

inline void from_json(const json& j, OutputRecord& r) {
  j.at("command").get_to(r.command);
  j.at("params").get_to(r.params);
  j.at("kind").get_to(r.kind);
  r.payload = j.at("payload");
  j.at("variable").get_to(r.variable);
}

inline std::string emit(const OutputRecord& r) { return json(r).dump(2) + "\n"; }

inline OutputRecord parse_record(const std::string& text) { return json::parse(text).get<OutputRecord>(); }

inline json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

inline Polynomial load_e_poly(const json& j) {
  Polynomial p = decode_polynomial(j);
  if (p.is_zero()) throw InputError("E-polynomial must be nonzero");
  return p;
}

inline Polynomial load_e_poly_file(const std::filesystem::path& path) { return load_e_poly(read_json_file(path)); }

inline SncData load_strata(const json& j) {
  try {
    std::vector<Divisor> divisors;
    for (const auto& d : j.at("divisors")) {
      const auto& a = d.at("discrepancy");
      if (!a.is_number_unsigned() || a.get<std::uint64_t>() > UINT32_MAX - 1) {
        throw InputError("discrepancy must be a nonnegative integer");
      }
      divisors.push_back({d.at("label").get<std::string>(), a.get<std::uint32_t>()});
    }
    std::map<Stratum, Polynomial> strata;
    for (const auto& s : j.at("strata")) {
      Stratum subset;
      for (const auto& label : s.at("subset")) {
        if (!subset.insert(label.get<std::string>()).second) throw InputError("repeated label inside a subset");
      }
      if (!strata.emplace(subset, decode_polynomial(s.at("e_poly"))).second) {
        throw InputError("subset listed twice in strata");
      }
    }
    if (!strata.contains(Stratum{})) throw MissingEmptySubset();
    return SncData(std::move(divisors), std::move(strata));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed strata file: ") + e.what());
  } catch (const StringyError& e) {
    throw InputError(std::string("malformed strata file: ") + e.what());
  }
}

inline SncData load_strata_file(const std::filesystem::path& path) { return load_strata(read_json_file(path)); }

}  // namespace stringy::io
