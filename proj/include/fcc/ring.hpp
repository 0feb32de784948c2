#pragma once

// Arithmetic over Z_{2^s}, the homogeneous weight, and word/code level
// distance primitives.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fcc/error.hpp"

namespace fcc {

using Symbol = std::uint32_t;

/// The ring Z_{2^s}. Elements are canonical residues in [0, 2^s).
struct RingParams {
  static constexpr int kMaxExponent = 16;

  int s = 2;

  static RingParams make(int s) {
    if (s < 1 || s > kMaxExponent)
      fail(ErrorKind::Domain, "ring exponent s must be in [1, " + std::to_string(kMaxExponent) +
                                  "], got " + std::to_string(s));
    return RingParams{s};
  }

  constexpr Symbol modulus() const { return Symbol{1} << s; }
  constexpr Symbol half() const { return Symbol{1} << (s - 1); }
  constexpr Symbol mask() const { return modulus() - 1; }

  constexpr Symbol add(Symbol a, Symbol b) const { return (a + b) & mask(); }
  constexpr Symbol sub(Symbol a, Symbol b) const { return (a - b) & mask(); }
  constexpr Symbol mul(Symbol a, Symbol b) const {
    return static_cast<Symbol>((std::uint64_t{a} * b) & mask());
  }
  constexpr Symbol neg(Symbol a) const { return (Symbol{0} - a) & mask(); }

  friend constexpr auto operator<=>(const RingParams&, const RingParams&) = default;
};

/// Enumeration caps. Everything exhaustive in this library is guarded by
/// these so that a mistyped parameter fails fast instead of running for hours.
struct EnumLimits {
  /// Largest s*n for which the full space Z_{2^s}^n may be enumerated.
  int max_word_bits = 24;
  /// Largest s*k for which all message pairs may be scanned.
  int max_pair_bits = 14;

  /// Defaults, with FCC_ENUM_CAP (bits) overriding max_word_bits.
  static EnumLimits from_env() {
    EnumLimits limits;
    if (const char* cap = std::getenv("FCC_ENUM_CAP"); cap != nullptr && *cap != '\0') {
      char* end = nullptr;
      long bits = std::strtol(cap, &end, 10);
      if (end == cap || *end != '\0' || bits < 1 || bits > 40)
        fail(ErrorKind::Parse, std::string("FCC_ENUM_CAP must be an integer in [1, 40], got '") + cap + "'");
      limits.max_word_bits = static_cast<int>(bits);
    }
    return limits;
  }

  void require_space(const RingParams& params, std::size_t length, const char* what) const {
    const std::size_t bits = static_cast<std::size_t>(params.s) * length;
    if (bits > static_cast<std::size_t>(max_word_bits))
      fail(ErrorKind::ResourceLimit, std::string(what) + ": enumerating Z_" +
                                         std::to_string(params.modulus()) + "^" + std::to_string(length) +
                                         " needs 2^" + std::to_string(bits) + " words, cap is 2^" +
                                         std::to_string(max_word_bits));
  }

  void require_pairs(const RingParams& params, std::size_t length, const char* what) const {
    require_space(params, length, what);
    const std::size_t bits = static_cast<std::size_t>(params.s) * length;
    if (bits > static_cast<std::size_t>(max_pair_bits))
      fail(ErrorKind::ResourceLimit, std::string(what) + ": scanning all pairs of 2^" + std::to_string(bits) +
                                         " messages exceeds the pair cap 2^" + std::to_string(max_pair_bits));
  }
};

inline const EnumLimits& default_limits() {
  static const EnumLimits limits = EnumLimits::from_env();
  return limits;
}

/// A vector over Z_{2^s}.
class Word {
 public:
  Word() = default;

  Word(RingParams params, std::vector<Symbol> symbols) : params_(params), symbols_(std::move(symbols)) {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
      if (symbols_[i] >= params_.modulus())
        fail(ErrorKind::Domain, "symbol " + std::to_string(symbols_[i]) + " at position " + std::to_string(i) +
                                    " is outside Z_" + std::to_string(params_.modulus()));
  }

  static Word zero(RingParams params, std::size_t length) {
    return Word(params, std::vector<Symbol>(length, 0));
  }

  const RingParams& params() const { return params_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const { return symbols_; }

  bool is_zero() const {
    return std::all_of(symbols_.begin(), symbols_.end(), [](Symbol a) { return a == 0; });
  }

  Word operator+(const Word& other) const { return combine(other, [this](Symbol a, Symbol b) { return params_.add(a, b); }); }
  Word operator-(const Word& other) const { return combine(other, [this](Symbol a, Symbol b) { return params_.sub(a, b); }); }

  Word operator-() const {
    Word out = *this;
    for (auto& a : out.symbols_) a = params_.neg(a);
    return out;
  }

  Word scaled(Symbol c) const {
    Word out = *this;
    for (auto& a : out.symbols_) a = params_.mul(a, c & params_.mask());
    return out;
  }

  /// Concatenation (x, y).
  Word concat(const Word& tail) const {
    require_same(tail);
    Word out = *this;
    out.symbols_.insert(out.symbols_.end(), tail.symbols_.begin(), tail.symbols_.end());
    return out;
  }

  Word slice(std::size_t offset, std::size_t count) const {
    return Word(params_, std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(offset),
                                             symbols_.begin() + static_cast<std::ptrdiff_t>(offset + count)));
  }

  void require_same_shape(const Word& other) const {
    require_same(other);
    if (size() != other.size())
      fail(ErrorKind::Shape, "word lengths differ: " + std::to_string(size()) + " vs " + std::to_string(other.size()));
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(symbols_[i]);
    }
    return out + ")";
  }

  friend bool operator==(const Word&, const Word&) = default;
  /// Lexicographic on symbols (params compare first and agree in practice).
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  void require_same(const Word& other) const {
    if (params_ != other.params_)
      fail(ErrorKind::Shape, "words live over different rings: Z_" + std::to_string(params_.modulus()) + " vs Z_" +
                                 std::to_string(other.params_.modulus()));
  }

  template <typename Op>
  Word combine(const Word& other, Op op) const {
    require_same_shape(other);
    Word out = *this;
    for (std::size_t i = 0; i < symbols_.size(); ++i) out.symbols_[i] = op(symbols_[i], other.symbols_[i]);
    return out;
  }

  RingParams params_{};
  std::vector<Symbol> symbols_;
};

/// A dense matrix over Z_{2^s}, row-major.
class Matrix {
 public:
  Matrix() = default;

  Matrix(RingParams params, std::size_t rows, std::size_t cols, std::vector<Symbol> data)
      : params_(params), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_)
      fail(ErrorKind::Shape, "matrix data has " + std::to_string(data_.size()) + " entries, expected " +
                                 std::to_string(rows_ * cols_));
    for (Symbol a : data_)
      if (a >= params_.modulus())
        fail(ErrorKind::Domain, "matrix entry " + std::to_string(a) + " is outside Z_" + std::to_string(params_.modulus()));
  }

  static Matrix from_rows(RingParams params, const std::vector<std::vector<Symbol>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<Symbol> data;
    for (const auto& row : rows) {
      if (row.size() != cols) fail(ErrorKind::Shape, "ragged matrix rows");
      data.insert(data.end(), row.begin(), row.end());
    }
    return Matrix(params, rows.size(), cols, std::move(data));
  }

  static Matrix identity(RingParams params, std::size_t n) {
    std::vector<Symbol> data(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) data[i * n + i] = 1;
    return Matrix(params, n, n, std::move(data));
  }

  const RingParams& params() const { return params_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Symbol at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Word row(std::size_t i) const {
    return Word(params_, std::vector<Symbol>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
  }

  std::vector<std::vector<Symbol>> to_rows() const {
    std::vector<std::vector<Symbol>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i].assign(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                                        data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    return out;
  }

  /// M * x for a column vector x of length cols().
  Word apply(const Word& x) const {
    if (x.params() != params_ || x.size() != cols_)
      fail(ErrorKind::Shape, "matrix with " + std::to_string(cols_) + " columns applied to a word of length " +
                                 std::to_string(x.size()));
    std::vector<Symbol> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < cols_; ++j) acc += std::uint64_t{at(i, j)} * x[j];
      out[i] = static_cast<Symbol>(acc & params_.mask());
    }
    return Word(params_, std::move(out));
  }

  /// v * M for a row vector v of length rows().
  Word left_apply(const Word& v) const {
    if (v.params() != params_ || v.size() != rows_)
      fail(ErrorKind::Shape, "row vector of length " + std::to_string(v.size()) + " times a matrix with " +
                                 std::to_string(rows_) + " rows");
    std::vector<Symbol> out(cols_, 0);
    for (std::size_t j = 0; j < cols_; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < rows_; ++i) acc += std::uint64_t{v[i]} * at(i, j);
      out[j] = static_cast<Symbol>(acc & params_.mask());
    }
    return Word(params_, std::move(out));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  RingParams params_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Symbol> data_;
};

// ---------------------------------------------------------------------------
// Word <-> index. Index order is lexicographic order: the first symbol is the
// most significant digit in base 2^s.

inline std::uint64_t space_size(const RingParams& params, std::size_t length) {
  return std::uint64_t{1} << (static_cast<std::size_t>(params.s) * length);
}

inline std::uint64_t word_index(const Word& w) {
  std::uint64_t idx = 0;
  for (Symbol a : w.symbols()) idx = (idx << w.params().s) | a;
  return idx;
}

inline Word word_at(const RingParams& params, std::size_t length, std::uint64_t idx) {
  std::vector<Symbol> symbols(length);
  for (std::size_t i = length; i-- > 0;) {
    symbols[i] = static_cast<Symbol>(idx & params.mask());
    idx >>= params.s;
  }
  return Word(params, std::move(symbols));
}

/// All of Z_{2^s}^length in lexicographic order.
inline std::vector<Word> all_words(const RingParams& params, std::size_t length,
                                   const EnumLimits& limits = default_limits()) {
  limits.require_space(params, length, "all_words");
  const std::uint64_t n = space_size(params, length);
  std::vector<Word> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(word_at(params, length, i));
  return out;
}

// ---------------------------------------------------------------------------
// Homogeneous weight and distance.

/// 0 at 0, 2 on the minimal ideal <2^{s-1}> minus zero, 1 elsewhere (alpha = 1).
inline int hom_weight_symbol(Symbol a, const RingParams& params) {
  if (a >= params.modulus())
    fail(ErrorKind::Domain, "symbol " + std::to_string(a) + " is outside Z_" + std::to_string(params.modulus()));
  if (a == 0) return 0;
  return a == params.half() ? 2 : 1;
}

inline int hom_weight(const Word& x) {
  int w = 0;
  for (Symbol a : x.symbols()) w += a == 0 ? 0 : (a == x.params().half() ? 2 : 1);
  return w;
}

inline int hom_distance(const Word& x, const Word& y) {
  x.require_same_shape(y);
  const RingParams& p = x.params();
  int d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Symbol a = p.sub(x[i], y[i]);
    d += a == 0 ? 0 : (a == p.half() ? 2 : 1);
  }
  return d;
}

/// An ordered set of equal-length, pairwise distinct words.
class Code {
 public:
  Code() = default;

  Code(RingParams params, std::vector<Word> codewords) : params_(params), codewords_(std::move(codewords)) {
    if (!codewords_.empty()) length_ = codewords_.front().size();
    for (const auto& c : codewords_) {
      if (c.params() != params_) fail(ErrorKind::Shape, "codeword over a different ring");
      if (c.size() != length_) fail(ErrorKind::Shape, "codewords of unequal length in a code");
    }
    std::vector<Word> sorted = codewords_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(ErrorKind::Domain, "duplicate codeword in a code");
  }

  const RingParams& params() const { return params_; }
  std::size_t length() const { return length_; }
  std::size_t size() const { return codewords_.size(); }
  const Word& operator[](std::size_t i) const { return codewords_[i]; }
  const std::vector<Word>& codewords() const { return codewords_; }

  bool contains(const Word& w) const { return std::find(codewords_.begin(), codewords_.end(), w) != codewords_.end(); }

 private:
  RingParams params_{};
  std::size_t length_ = 0;
  std::vector<Word> codewords_;
};

inline int min_distance(const Code& code) {
  if (code.size() < 2) fail(ErrorKind::Domain, "minimum distance is undefined for a code with fewer than 2 codewords");
  int best = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i + 1; j < code.size(); ++j) best = std::min(best, hom_distance(code[i], code[j]));
  return best;
}

/// Words at homogeneous distance <= radius from center, lexicographic.
inline std::vector<Word> ball(const Word& center, int radius, const EnumLimits& limits = default_limits()) {
  if (radius < 0) fail(ErrorKind::Domain, "ball radius must be non-negative");
  limits.require_space(center.params(), center.size(), "ball");
  std::vector<Word> out;
  const std::uint64_t n = space_size(center.params(), center.size());
  for (std::uint64_t i = 0; i < n; ++i) {
    Word y = word_at(center.params(), center.size(), i);
    if (hom_distance(center, y) <= radius) out.push_back(std::move(y));
  }
  return out;
}

/// Words at homogeneous distance exactly radius from center, lexicographic.
inline std::vector<Word> sphere(const Word& center, int radius, const EnumLimits& limits = default_limits()) {
  if (radius < 0) fail(ErrorKind::Domain, "sphere radius must be non-negative");
  limits.require_space(center.params(), center.size(), "sphere");
  std::vector<Word> out;
  const std::uint64_t n = space_size(center.params(), center.size());
  for (std::uint64_t i = 0; i < n; ++i) {
    Word y = word_at(center.params(), center.size(), i);
    if (hom_distance(center, y) == radius) out.push_back(std::move(y));
  }
  return out;
}

namespace detail {

/// Packed words: lane i (from the top) holds symbol i, s bits per lane, so
/// the packed value equals word_index(). Lane-wise arithmetic mod 2^s.
struct PackedSpace {
  RingParams params;
  std::size_t length = 0;
  std::uint64_t full = 0;  // all lanes set
  std::uint64_t high = 0;  // top bit of each lane

  PackedSpace(RingParams p, std::size_t n) : params(p), length(n) {
    for (std::size_t i = 0; i < n; ++i) {
      full = (full << p.s) | p.mask();
      high = (high << p.s) | p.half();
    }
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t low = full & ~high;
    return (((a & low) + (b & low)) ^ ((a ^ b) & high)) & full;
  }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t low = full & ~high;
    return (((a | high) - (b & low)) ^ ((a ^ ~b) & high)) & full;
  }

  int weight(std::uint64_t a) const {
    int w = 0;
    for (std::size_t i = 0; i < length; ++i, a >>= params.s) {
      const Symbol v = static_cast<Symbol>(a & params.mask());
      w += v == 0 ? 0 : (v == params.half() ? 2 : 1);
    }
    return w;
  }

  /// weight() for every packed word; requires the space to be enumerable.
  std::vector<std::uint8_t> weight_table() const {
    const std::uint64_t n = space_size(params, length);
    std::vector<std::uint8_t> table(n);
    for (std::uint64_t i = 0; i < n; ++i) table[i] = static_cast<std::uint8_t>(weight(i));
    return table;
  }
};

}  // namespace detail

}  // namespace fcc
