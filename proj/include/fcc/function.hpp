#pragma once

// Target functions f : Z_{2^s}^k -> Im(f).

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "fcc/error.hpp"
#include "fcc/ring.hpp"

namespace fcc {

/// Function values come in two carriers: integers (weights, sums, table
/// scalars) and words (linear maps, table tuples).
using FunctionValue = std::variant<std::int64_t, Word>;

inline std::string to_string(const FunctionValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  return std::get<Word>(v).to_string();
}

enum class FunctionKind { HomWeight, WeightDistribution, ModularSum, Linear, Table };

inline const char* to_string(FunctionKind kind) {
  switch (kind) {
    case FunctionKind::HomWeight: return "wh";
    case FunctionKind::WeightDistribution: return "wdist";
    case FunctionKind::ModularSum: return "msum";
    case FunctionKind::Linear: return "linear";
    case FunctionKind::Table: return "table";
  }
  return "?";
}

class FunctionSpec {
 public:
  static FunctionSpec hom_weight(RingParams params, std::size_t k) {
    return FunctionSpec(FunctionKind::HomWeight, params, k);
  }

  static FunctionSpec weight_distribution(RingParams params, std::size_t k, int threshold) {
    if (threshold < 1) fail(ErrorKind::Domain, "weight distribution threshold T must be >= 1");
    FunctionSpec f(FunctionKind::WeightDistribution, params, k);
    f.threshold_ = threshold;
    return f;
  }

  static FunctionSpec modular_sum(RingParams params, std::size_t k) {
    return FunctionSpec(FunctionKind::ModularSum, params, k);
  }

  /// x -> F x with F an l x k matrix.
  static FunctionSpec linear(Matrix matrix) {
    if (matrix.rows() < 1) fail(ErrorKind::Shape, "linear function needs at least one output row");
    FunctionSpec f(FunctionKind::Linear, matrix.params(), matrix.cols());
    f.matrix_ = std::make_shared<const Matrix>(std::move(matrix));
    return f;
  }

  /// The modular sum as the 1 x k all-ones linear map.
  static FunctionSpec modular_sum_as_linear(RingParams params, std::size_t k) {
    return linear(Matrix(params, 1, k, std::vector<Symbol>(k, 1)));
  }

  /// values[i] is f(word_at(params, k, i)); must cover all of Z_{2^s}^k.
  static FunctionSpec table(RingParams params, std::size_t k, std::vector<FunctionValue> values) {
    if (values.size() != space_size(params, k))
      fail(ErrorKind::Integrity, "table function defines " + std::to_string(values.size()) + " of " +
                                     std::to_string(space_size(params, k)) + " words");
    const bool scalar = std::holds_alternative<std::int64_t>(values.front());
    for (const auto& v : values)
      if (std::holds_alternative<std::int64_t>(v) != scalar)
        fail(ErrorKind::Parse, "table mixes scalar and tuple values");
    FunctionSpec f(FunctionKind::Table, params, k);
    f.table_ = std::make_shared<const std::vector<FunctionValue>>(std::move(values));
    return f;
  }

  FunctionKind kind() const { return kind_; }
  const RingParams& params() const { return params_; }
  std::size_t k() const { return k_; }
  int threshold() const { return threshold_; }
  const Matrix& matrix() const {
    if (!matrix_) fail(ErrorKind::Domain, "function is not linear");
    return *matrix_;
  }
  const std::vector<FunctionValue>& table_values() const {
    if (!table_) fail(ErrorKind::Domain, "function is not a table");
    return *table_;
  }
  /// Output length l of a linear function.
  std::size_t output_length() const { return matrix().rows(); }

  FunctionValue operator()(const Word& x) const { return evaluate(x); }

  FunctionValue evaluate(const Word& x) const {
    if (x.params() != params_ || x.size() != k_)
      fail(ErrorKind::Shape, "function on Z_" + std::to_string(params_.modulus()) + "^" + std::to_string(k_) +
                                 " evaluated at a word of length " + std::to_string(x.size()) + " over Z_" +
                                 std::to_string(x.params().modulus()));
    switch (kind_) {
      case FunctionKind::HomWeight: return std::int64_t{fcc::hom_weight(x)};
      case FunctionKind::WeightDistribution: return std::int64_t{fcc::hom_weight(x) / threshold_};
      case FunctionKind::ModularSum: {
        Symbol acc = 0;
        for (Symbol a : x.symbols()) acc = params_.add(acc, a);
        return std::int64_t{acc};
      }
      case FunctionKind::Linear: return matrix_->apply(x);
      case FunctionKind::Table: {
        const std::uint64_t idx = word_index(x);
        if (idx >= table_->size()) fail(ErrorKind::Integrity, "table function has no entry for " + x.to_string());
        return (*table_)[idx];
      }
    }
    fail(ErrorKind::Integrity, "unknown function kind");
  }

  /// Short selector-style description, e.g. "wdist:2".
  std::string describe() const {
    std::string out = to_string(kind_);
    if (kind_ == FunctionKind::WeightDistribution) out += ":" + std::to_string(threshold_);
    return out;
  }

 private:
  FunctionSpec(FunctionKind kind, RingParams params, std::size_t k) : kind_(kind), params_(params), k_(k) {}

  FunctionKind kind_;
  RingParams params_;
  std::size_t k_;
  int threshold_ = 0;
  std::shared_ptr<const Matrix> matrix_;
  std::shared_ptr<const std::vector<FunctionValue>> table_;
};

/// f evaluated once on every message: image (sorted) plus each message's
/// position in it. Most exhaustive routines run on this.
struct FunctionTable {
  std::vector<FunctionValue> image;
  std::vector<std::uint32_t> value_id;  // indexed by word_index(x)

  std::size_t message_count() const { return value_id.size(); }
};

inline FunctionTable tabulate(const FunctionSpec& f, const EnumLimits& limits = default_limits()) {
  limits.require_space(f.params(), f.k(), "tabulate");
  const std::uint64_t n = space_size(f.params(), f.k());
  std::vector<FunctionValue> values;
  values.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) values.push_back(f(word_at(f.params(), f.k(), i)));
  FunctionTable table;
  table.image = values;
  std::sort(table.image.begin(), table.image.end());
  table.image.erase(std::unique(table.image.begin(), table.image.end()), table.image.end());
  table.value_id.resize(n);
  for (std::uint64_t i = 0; i < n; ++i)
    table.value_id[i] = static_cast<std::uint32_t>(
        std::lower_bound(table.image.begin(), table.image.end(), values[i]) - table.image.begin());
  return table;
}

/// Im(f), sorted. Closed forms where they exist, enumeration otherwise.
inline std::vector<FunctionValue> image(const FunctionSpec& f, const EnumLimits& limits = default_limits()) {
  const auto k = static_cast<std::int64_t>(f.k());
  // For s = 1 every nonzero symbol has weight 2, so only even weights occur.
  const std::int64_t step = f.params().s == 1 ? 2 : 1;
  switch (f.kind()) {
    case FunctionKind::HomWeight: {
      std::vector<FunctionValue> out;
      for (std::int64_t w = 0; w <= 2 * k; w += step) out.emplace_back(w);
      return out;
    }
    case FunctionKind::WeightDistribution: {
      std::vector<FunctionValue> out;
      for (std::int64_t w = 0; w <= 2 * k; w += step) {
        FunctionValue v = w / f.threshold();
        if (out.empty() || out.back() != v) out.push_back(v);
      }
      return out;
    }
    case FunctionKind::ModularSum: {
      if (k == 0) return {std::int64_t{0}};
      std::vector<FunctionValue> out;
      for (Symbol a = 0; a < f.params().modulus(); ++a) out.emplace_back(std::int64_t{a});
      return out;
    }
    case FunctionKind::Linear:
    case FunctionKind::Table: return tabulate(f, limits).image;
  }
  return {};
}

// ---------------------------------------------------------------------------
// Linear functions.

struct LinearFunctionAnalysis {
  std::vector<Word> kernel;  // lexicographic
  std::uint64_t kernel_size = 0;
  std::int64_t kernel_weight_sum = 0;  // A
  std::uint64_t image_size = 0;
  bool surjective = false;
};

inline LinearFunctionAnalysis analyze_linear(const FunctionSpec& f, const EnumLimits& limits = default_limits()) {
  if (f.kind() != FunctionKind::Linear) fail(ErrorKind::Domain, "analyze_linear needs a linear function");
  const RingParams& p = f.params();
  const std::size_t l = f.output_length();
  limits.require_space(p, f.k(), "analyze_linear");
  limits.require_space(p, l, "analyze_linear (codomain)");

  LinearFunctionAnalysis out;
  std::vector<bool> hit(space_size(p, l), false);
  const std::uint64_t n = space_size(p, f.k());
  for (std::uint64_t i = 0; i < n; ++i) {
    Word x = word_at(p, f.k(), i);
    const Word y = f.matrix().apply(x);
    const std::uint64_t yi = word_index(y);
    if (!hit[yi]) {
      hit[yi] = true;
      ++out.image_size;
    }
    if (y.is_zero()) {
      out.kernel_weight_sum += hom_weight(x);
      out.kernel.push_back(std::move(x));
    }
  }
  out.kernel_size = out.kernel.size();
  out.surjective = out.image_size == space_size(p, l);
  return out;
}

// ---------------------------------------------------------------------------
// Text formats.

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::int64_t parse_int(const std::string& text, const std::string& where) {
  const std::string t = trim(text);
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &used);
  } catch (const std::exception&) {
    fail(ErrorKind::Parse, where + ": expected an integer, got '" + t + "'");
  }
  if (used != t.size()) fail(ErrorKind::Parse, where + ": trailing characters in '" + t + "'");
  return v;
}

inline std::vector<std::int64_t> parse_int_list(const std::string& text, char sep, const std::string& where) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(parse_int(item, where));
  if (out.empty()) fail(ErrorKind::Parse, where + ": empty list");
  return out;
}

}  // namespace detail

/// Comma-separated residues, e.g. "1,2,3".
inline Word parse_word(const std::string& text, RingParams params) {
  std::vector<Symbol> symbols;
  if (!detail::trim(text).empty()) {
    for (std::int64_t v : detail::parse_int_list(text, ',', "word '" + text + "'")) {
      if (v < 0 || v >= static_cast<std::int64_t>(params.modulus()))
        fail(ErrorKind::Domain, "symbol " + std::to_string(v) + " in '" + text + "' is outside Z_" +
                                    std::to_string(params.modulus()));
      symbols.push_back(static_cast<Symbol>(v));
    }
  }
  return Word(params, std::move(symbols));
}

/// Table function text: one line "x_1,...,x_k;value" per word of Z_{2^s}^k;
/// value is an integer or a tuple "(a,b,...)" of residues. Blank lines and
/// lines starting with '#' are ignored.
inline FunctionSpec parse_table_function(const std::string& text, RingParams params) {
  std::istringstream in(text);
  std::string line;
  std::optional<std::size_t> k;
  std::map<std::uint64_t, FunctionValue> entries;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = detail::trim(line);
    if (line.empty() || line.front() == '#') continue;
    const std::string where = "table line " + std::to_string(line_no);
    const auto semi = line.find(';');
    if (semi == std::string::npos) fail(ErrorKind::Parse, where + ": missing ';'");
    const Word x = parse_word(line.substr(0, semi), params);
    if (!k) k = x.size();
    if (x.size() != *k) fail(ErrorKind::Parse, where + ": message length differs from earlier lines");
    const std::string value_text = detail::trim(line.substr(semi + 1));
    FunctionValue value;
    if (!value_text.empty() && value_text.front() == '(') {
      if (value_text.back() != ')') fail(ErrorKind::Parse, where + ": unterminated tuple");
      value = parse_word(value_text.substr(1, value_text.size() - 2), params);
    } else {
      value = detail::parse_int(value_text, where);
    }
    if (!entries.emplace(word_index(x), std::move(value)).second)
      fail(ErrorKind::Parse, where + ": duplicate entry for " + x.to_string());
  }
  if (!k) fail(ErrorKind::Parse, "table function file is empty");
  if (entries.size() != space_size(params, *k))
    fail(ErrorKind::Integrity, "table function is not total: " + std::to_string(entries.size()) + " of " +
                                   std::to_string(space_size(params, *k)) + " words defined");
  std::vector<FunctionValue> values;
  values.reserve(entries.size());
  for (auto& [idx, v] : entries) values.push_back(std::move(v));
  return FunctionSpec::table(params, *k, std::move(values));
}

inline std::string format_table_function(const FunctionSpec& f) {
  std::string out;
  const auto& values = f.table_values();
  for (std::uint64_t i = 0; i < values.size(); ++i) {
    const std::string x = word_at(f.params(), f.k(), i).to_string();
    out += x.substr(1, x.size() - 2) + ";" + to_string(values[i]) + "\n";
  }
  return out;
}

/// Matrix text: first line "s cols rows" (for a linear f : Z^k -> Z^l that is
/// "s k l"), then one line of space-separated residues per row.
inline Matrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  long long s = 0, rows = 0, cols = 0;
  if (!(in >> s >> cols >> rows)) fail(ErrorKind::Parse, "matrix file: header must be 's cols rows'");
  if (rows < 1 || cols < 1) fail(ErrorKind::Parse, "matrix file: rows and cols must be positive");
  const RingParams params = RingParams::make(static_cast<int>(s));
  std::vector<Symbol> data;
  for (long long i = 0; i < rows * cols; ++i) {
    long long v = 0;
    if (!(in >> v))
      fail(ErrorKind::Parse, "matrix file: expected " + std::to_string(rows * cols) + " entries, got " + std::to_string(i));
    if (v < 0 || v >= static_cast<long long>(params.modulus()))
      fail(ErrorKind::Domain, "matrix file: entry " + std::to_string(v) + " outside Z_" + std::to_string(params.modulus()));
    data.push_back(static_cast<Symbol>(v));
  }
  std::string extra;
  if (in >> extra) fail(ErrorKind::Parse, "matrix file: trailing data '" + extra + "'");
  return Matrix(params, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), std::move(data));
}

inline std::string format_matrix(const Matrix& m) {
  std::string out = std::to_string(m.params().s) + " " + std::to_string(m.cols()) + " " + std::to_string(m.rows()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? " " : "") + std::to_string(m.at(i, j));
    out += "\n";
  }
  return out;
}

}  // namespace fcc
