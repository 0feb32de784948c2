#pragma once

// JSON forms of the library's values. Top-level documents carry "schema": 1.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fcc/bounds.hpp"
#include "fcc/encoders.hpp"
#include "fcc/error.hpp"
#include "fcc/function.hpp"
#include "fcc/locality.hpp"
#include "fcc/ring.hpp"
#include "fcc/search.hpp"
#include "fcc/verify.hpp"

namespace fcc {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Parse, "cannot write '" + path + "'");
  out << text;
}

inline json parse_json(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Parse, where + ": " + e.what());
  }
}

namespace detail {

template <typename T>
T get_field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::Parse, where + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, where + ": field '" + key + "': " + e.what());
  }
}

inline void check_schema(const json& j, const std::string& where) {
  if (j.is_object() && j.contains("schema") && j["schema"] != kSchemaVersion)
    fail(ErrorKind::Parse, where + ": unsupported schema " + j["schema"].dump());
}

}  // namespace detail

inline json to_json(const Word& w) { return json(std::vector<Symbol>(w.symbols().begin(), w.symbols().end())); }

inline Word word_from_json(const json& j, RingParams params) {
  if (!j.is_array()) fail(ErrorKind::Parse, "word must be an array of residues");
  std::vector<Symbol> symbols;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::int64_t>() >= params.modulus())
      fail(ErrorKind::Parse, "word entry " + v.dump() + " is not a residue mod " + std::to_string(params.modulus()));
    symbols.push_back(v.get<Symbol>());
  }
  return Word(params, std::move(symbols));
}

inline json to_json(const FunctionValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
  return to_json(std::get<Word>(v));
}

inline FunctionValue value_from_json(const json& j, RingParams params) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  return word_from_json(j, params);
}

inline json to_json(const FunctionSpec& f) {
  json j{{"kind", to_string(f.kind())}, {"s", f.params().s}, {"k", f.k()}};
  if (f.kind() == FunctionKind::WeightDistribution) j["threshold"] = f.threshold();
  if (f.kind() == FunctionKind::Linear) j["matrix"] = f.matrix().to_rows();
  if (f.kind() == FunctionKind::Table) {
    json values = json::array();
    for (const auto& v : f.table_values()) values.push_back(to_json(v));
    j["values"] = std::move(values);
  }
  return j;
}

inline Matrix matrix_from_json(const json& j, RingParams params, const std::string& where) {
  const auto rows = j.get<std::vector<std::vector<std::int64_t>>>();
  if (rows.empty()) fail(ErrorKind::Parse, where + ": empty matrix");
  std::vector<Symbol> data;
  for (const auto& row : rows) {
    if (row.size() != rows.front().size()) fail(ErrorKind::Parse, where + ": ragged matrix");
    for (auto v : row) {
      if (v < 0 || v >= params.modulus()) fail(ErrorKind::Parse, where + ": entry " + std::to_string(v) + " out of range");
      data.push_back(static_cast<Symbol>(v));
    }
  }
  return Matrix(params, rows.size(), rows.front().size(), std::move(data));
}

inline FunctionSpec function_from_json(const json& j) {
  const std::string where = "function";
  const auto kind = detail::get_field<std::string>(j, "kind", where);
  const RingParams params = RingParams::make(detail::get_field<int>(j, "s", where));
  const auto k = detail::get_field<std::size_t>(j, "k", where);
  if (kind == "wh") return FunctionSpec::hom_weight(params, k);
  if (kind == "wdist") return FunctionSpec::weight_distribution(params, k, detail::get_field<int>(j, "threshold", where));
  if (kind == "msum") return FunctionSpec::modular_sum(params, k);
  if (kind == "linear") {
    FunctionSpec f = FunctionSpec::linear(matrix_from_json(j.at("matrix"), params, where));
    if (f.k() != k) fail(ErrorKind::Parse, "function: matrix has " + std::to_string(f.k()) + " columns but k = " + std::to_string(k));
    return f;
  }
  if (kind == "table") {
    std::vector<FunctionValue> values;
    for (const auto& v : j.at("values")) values.push_back(value_from_json(v, params));
    return FunctionSpec::table(params, k, std::move(values));
  }
  fail(ErrorKind::Parse, "function: unknown kind '" + kind + "'");
}

inline json to_json(const RequirementMatrix& d) {
  json j{{"schema", kSchemaVersion}, {"entries", d.to_rows()}};
  if (d.t()) j["t"] = *d.t();
  if (!d.source_vectors().empty()) {
    json vs = json::array();
    for (const auto& v : d.source_vectors()) vs.push_back(to_json(v));
    j["vectors"] = std::move(vs);
  }
  return j;
}

/// {"t": int, "entries": [[...]]}; "t" may be omitted.
inline RequirementMatrix requirement_matrix_from_json(const json& j) {
  detail::check_schema(j, "requirement matrix");
  const auto rows = detail::get_field<std::vector<std::vector<int>>>(j, "entries", "requirement matrix");
  std::optional<int> t;
  if (j.contains("t")) t = detail::get_field<int>(j, "t", "requirement matrix");
  return RequirementMatrix::from_rows(rows, t);
}

inline json to_json(const SystematicEncoder& enc, const std::optional<FunctionSpec>& f = std::nullopt) {
  json parity = json::array();
  for (const auto& p : enc.parity_table()) parity.push_back(to_json(p));
  json j{{"schema", kSchemaVersion},
         {"type", "encoder"},
         {"s", enc.params().s},
         {"k", enc.k()},
         {"r", enc.r()},
         {"construction", enc.provenance().construction},
         {"details", enc.provenance().details},
         {"parity", std::move(parity)}};
  if (f) j["function"] = to_json(*f);
  return j;
}

struct EncoderDocument {
  SystematicEncoder encoder;
  std::optional<FunctionSpec> function;
};

inline EncoderDocument encoder_from_json(const json& j) {
  const std::string where = "encoder";
  detail::check_schema(j, where);
  const RingParams params = RingParams::make(detail::get_field<int>(j, "s", where));
  const auto k = detail::get_field<std::size_t>(j, "k", where);
  const auto r = detail::get_field<std::size_t>(j, "r", where);
  std::vector<Word> parity;
  for (const auto& p : j.at("parity")) parity.push_back(word_from_json(p, params));
  Provenance prov{detail::get_field<std::string>(j, "construction", where), j.value("details", json::object())};
  EncoderDocument doc{SystematicEncoder(params, k, r, std::move(parity), std::move(prov)), std::nullopt};
  if (j.contains("function")) doc.function = function_from_json(j["function"]);
  return doc;
}

inline json to_json(const VerificationReport& report) {
  json j{{"schema", kSchemaVersion},
         {"status", to_string(report.status)},
         {"t", report.t},
         {"pairs_checked", report.pairs_checked},
         {"violations", report.violations}};
  if (report.counterexample) {
    const auto& c = *report.counterexample;
    j["counterexample"] = {{"x", to_json(c.x)}, {"y", to_json(c.y)}, {"distance", c.distance}, {"required", c.required}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

inline json to_json(const SearchResult& r) {
  json j{{"schema", kSchemaVersion},
         {"value", r.value},
         {"exhausted", r.exhausted},
         {"status", to_string(r.status)},
         {"lower_bound_used", r.lower_bound_used},
         {"certified_lower", r.certified_lower},
         {"nodes", r.nodes}};
  if (r.certificate) {
    json c = json::array();
    for (const auto& w : *r.certificate) c.push_back(to_json(w));
    j["certificate"] = std::move(c);
  } else {
    j["certificate"] = nullptr;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline json to_json(const LocalityProfile& p) {
  json j{{"schema", kSchemaVersion}, {"rho", p.rho}, {"lambda0", p.lambda0}, {"witness", to_json(p.witness)}};
  if (p.theoretical_bounds) j["bracket"] = {p.theoretical_bounds->first, p.theoretical_bounds->second};
  return j;
}

inline json to_json(const Rational& q) {
  return {{"num", q.numerator()}, {"den", q.denominator()}, {"text", to_string(q)}, {"approx", to_double(q)}};
}

}  // namespace fcc
