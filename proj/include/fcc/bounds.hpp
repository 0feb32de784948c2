#pragma once

// Distance requirement matrices and closed-form redundancy bounds. Every
// formula is evaluated in exact rational arithmetic and ceiled last.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "fcc/error.hpp"
#include "fcc/function.hpp"
#include "fcc/ring.hpp"

namespace fcc {

using Rational = boost::rational<std::int64_t>;

inline std::int64_t ceil(const Rational& q) {
  const std::int64_t n = q.numerator(), d = q.denominator();  // d > 0
  return n >= 0 ? (n + d - 1) / d : -((-n) / d);
}

inline std::int64_t floor(const Rational& q) { return -ceil(-q); }

inline std::string to_string(const Rational& q) {
  return q.denominator() == 1 ? std::to_string(q.numerator())
                              : std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline double to_double(const Rational& q) { return boost::rational_cast<double>(q); }

/// Symmetric, zero-diagonal M x M matrix of required pairwise distances.
class RequirementMatrix {
 public:
  RequirementMatrix() = default;

  /// `t` is the error parameter the matrix came from, if any; when present
  /// every entry must be <= 2t + 1.
  RequirementMatrix(std::size_t size, std::vector<int> entries, std::optional<int> t = std::nullopt)
      : size_(size), entries_(std::move(entries)), t_(t) {
    if (entries_.size() != size_ * size_)
      fail(ErrorKind::Shape, "requirement matrix needs " + std::to_string(size_ * size_) + " entries, got " +
                                 std::to_string(entries_.size()));
    for (std::size_t i = 0; i < size_; ++i) {
      if (at(i, i) != 0) fail(ErrorKind::Domain, "requirement matrix has a nonzero diagonal entry at " + std::to_string(i));
      for (std::size_t j = 0; j < size_; ++j) {
        if (at(i, j) < 0) fail(ErrorKind::Domain, "requirement matrix has a negative entry");
        if (at(i, j) != at(j, i)) fail(ErrorKind::Domain, "requirement matrix is not symmetric");
        if (t_ && at(i, j) > 2 * *t_ + 1)
          fail(ErrorKind::Domain, "requirement matrix entry " + std::to_string(at(i, j)) + " exceeds 2t+1 = " +
                                      std::to_string(2 * *t_ + 1));
      }
    }
  }

  static RequirementMatrix from_rows(const std::vector<std::vector<int>>& rows, std::optional<int> t = std::nullopt) {
    std::vector<int> entries;
    for (const auto& row : rows) {
      if (row.size() != rows.size()) fail(ErrorKind::Shape, "requirement matrix must be square");
      entries.insert(entries.end(), row.begin(), row.end());
    }
    return RequirementMatrix(rows.size(), std::move(entries), t);
  }

  std::size_t size() const { return size_; }
  int at(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }
  std::optional<int> t() const { return t_; }
  const std::vector<Word>& source_vectors() const { return source_; }
  void set_source_vectors(std::vector<Word> v) { source_ = std::move(v); }

  std::int64_t total() const {
    std::int64_t sum = 0;
    for (int e : entries_) sum += e;
    return sum;
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
  }

  int max_entry() const { return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end()); }

  std::vector<std::vector<int>> to_rows() const {
    std::vector<std::vector<int>> out(size_);
    for (std::size_t i = 0; i < size_; ++i)
      for (std::size_t j = 0; j < size_; ++j) out[i].push_back(at(i, j));
    return out;
  }

  friend bool operator==(const RequirementMatrix& a, const RequirementMatrix& b) {
    return a.size_ == b.size_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<int> entries_;
  std::optional<int> t_;
  std::vector<Word> source_;
};

/// [D]_ij = [2t + 1 - d_h(x_i, x_j)]^+ when f(x_i) != f(x_j), else 0.
inline RequirementMatrix requirement_matrix(const FunctionSpec& f, int t, const std::vector<Word>& vectors) {
  if (t < 1) fail(ErrorKind::Domain, "error parameter t must be >= 1");
  for (const auto& x : vectors)
    if (x.params() != f.params() || x.size() != f.k()) fail(ErrorKind::Shape, "vector " + x.to_string() + " is not in f's domain");
  std::vector<Word> sorted = vectors;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorKind::Domain, "requirement matrix vectors must be distinct");

  const std::size_t m = vectors.size();
  std::vector<FunctionValue> values;
  values.reserve(m);
  for (const auto& x : vectors) values.push_back(f(x));
  std::vector<int> entries(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      if (values[i] == values[j]) continue;
      const int e = std::max(0, 2 * t + 1 - hom_distance(vectors[i], vectors[j]));
      entries[i * m + j] = entries[j * m + i] = e;
    }
  RequirementMatrix d(m, std::move(entries), t);
  d.set_source_vectors(vectors);
  return d;
}

/// Requirement matrix over every message of Z_{2^s}^k in lexicographic order.
inline RequirementMatrix full_requirement_matrix(const FunctionSpec& f, int t, const EnumLimits& limits = default_limits()) {
  return requirement_matrix(f, t, all_words(f.params(), f.k(), limits));
}

/// sum(D) / M^2.
inline Rational plotkin_ratio_generic(const RequirementMatrix& d) {
  if (d.size() == 0) return Rational(0);
  const auto m = static_cast<std::int64_t>(d.size());
  return Rational(d.total(), m * m);
}

inline std::int64_t plotkin_bound_generic(const RequirementMatrix& d) { return ceil(plotkin_ratio_generic(d)); }

/// The Z_4 refinement: divide by M^2 when M = 0, 2 (mod 4) and by M^2 - 1
/// when M = 1, 3 (mod 4).
inline Rational plotkin_ratio_z4(const RequirementMatrix& d, const RingParams& params) {
  if (params.s != 2) fail(ErrorKind::Domain, "the Z_4 Plotkin bound needs s = 2, got s = " + std::to_string(params.s));
  const auto m = static_cast<std::int64_t>(d.size());
  if (m <= 1) return Rational(0);  // no off-diagonal entries
  const std::int64_t divisor = (m % 2 == 0) ? m * m : m * m - 1;
  return Rational(d.total(), divisor);
}

inline std::int64_t plotkin_bound_z4(const RequirementMatrix& d, const RingParams& params = RingParams{2}) {
  return ceil(plotkin_ratio_z4(d, params));
}

/// Best Plotkin-type bound available for the ring.
inline std::int64_t plotkin_bound(const RequirementMatrix& d, const RingParams& params) {
  std::int64_t lb = std::max<std::int64_t>(0, plotkin_bound_generic(d));
  if (params.s == 2) lb = std::max(lb, plotkin_bound_z4(d, params));
  return lb;
}

struct ModularSumBound {
  Rational bound;                  // 2t - 2^{-s}(2t + 1)
  std::int64_t ceiling = 0;
  bool equals_two_t = false;       // t < (2^s - 1)/2, where the optimum is exactly 2t
  std::optional<std::int64_t> optimal;
};

inline ModularSumBound modular_sum_lower_bound(int s, int t) {
  const RingParams params = RingParams::make(s);
  if (t < 1) fail(ErrorKind::Domain, "error parameter t must be >= 1");
  ModularSumBound out;
  out.bound = Rational(2 * t) - Rational(2 * t + 1, static_cast<std::int64_t>(params.modulus()));
  out.ceiling = ceil(out.bound);
  out.equals_two_t = 2 * static_cast<std::int64_t>(t) < static_cast<std::int64_t>(params.modulus()) - 1;
  if (out.equals_two_t) out.optimal = 2 * t;
  return out;
}

struct LinearPlotkinBound {
  Rational bound;  // lower bound on r
  std::int64_t ceiling = 0;  // max(0, ceil(bound))
  std::int64_t kernel_weight_sum = 0;
  std::uint64_t kernel_size = 0;
};

/// (2t+1)(1 - 2^{-s l}) - k + A / 2^{sk} for a surjective linear f.
inline LinearPlotkinBound linear_plotkin_bound(const FunctionSpec& f, int t, const EnumLimits& limits = default_limits()) {
  if (t < 1) fail(ErrorKind::Domain, "error parameter t must be >= 1");
  const LinearFunctionAnalysis a = analyze_linear(f, limits);
  if (!a.surjective)
    fail(ErrorKind::Hypothesis, "the linear Plotkin bound needs an onto linear function; image has " +
                                    std::to_string(a.image_size) + " of " +
                                    std::to_string(space_size(f.params(), f.output_length())) + " words");
  const auto codomain = static_cast<std::int64_t>(space_size(f.params(), f.output_length()));
  const auto domain = static_cast<std::int64_t>(space_size(f.params(), f.k()));
  LinearPlotkinBound out;
  out.kernel_weight_sum = a.kernel_weight_sum;
  out.kernel_size = a.kernel_size;
  out.bound = Rational(2 * t + 1) * (Rational(1) - Rational(1, codomain)) - Rational(static_cast<std::int64_t>(f.k())) +
              Rational(a.kernel_weight_sum, domain);
  out.ceiling = std::max<std::int64_t>(0, ceil(out.bound));
  return out;
}

/// Code length bound n = r + k >= (2t+1)(2^{sk} - 1)/2^{sk} for a bijective linear f.
inline Rational bijective_length_bound(int s, std::size_t k, int t) {
  const RingParams params = RingParams::make(s);
  const auto m = static_cast<std::int64_t>(space_size(params, k));
  return Rational(2 * t + 1) * Rational(m - 1, m);
}

/// lambda t / 2 for even t, (lambda (t+1) - 2) / 2 for odd t. Both are
/// always integral: t/2 resp. (t+1)/2 is an integer.
inline std::int64_t upper_bound_from_lambda(std::int64_t lambda, std::int64_t t) {
  if (lambda < 2) fail(ErrorKind::Domain, "lambda must be >= 2");
  if (t < 1) fail(ErrorKind::Domain, "error parameter t must be >= 1");
  return t % 2 == 0 ? lambda * (t / 2) : lambda * ((t + 1) / 2) - 1;
}

}  // namespace fcc
