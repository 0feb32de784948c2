#pragma once

// Systematic encoders Enc(x) = (x, parity(x)) and the explicit codes they
// are assembled from.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "fcc/error.hpp"
#include "fcc/function.hpp"
#include "fcc/locality.hpp"
#include "fcc/ring.hpp"

namespace fcc {

/// Which construction produced an encoder, plus whatever parameters and
/// diagnostics it recorded.
struct Provenance {
  std::string construction;
  nlohmann::json details = nlohmann::json::object();
};

/// The parity map is stored as a table over all 2^{sk} messages.
class SystematicEncoder {
 public:
  SystematicEncoder() = default;

  SystematicEncoder(RingParams params, std::size_t k, std::size_t r, std::vector<Word> parity_table, Provenance provenance)
      : params_(params), k_(k), r_(r), parity_(std::move(parity_table)), provenance_(std::move(provenance)) {
    if (parity_.size() != space_size(params_, k_))
      fail(ErrorKind::Integrity, "parity table covers " + std::to_string(parity_.size()) + " of " +
                                     std::to_string(space_size(params_, k_)) + " messages");
    for (const auto& p : parity_)
      if (p.params() != params_ || p.size() != r_)
        fail(ErrorKind::Shape, "parity word " + p.to_string() + " does not have length " + std::to_string(r_));
  }

  const RingParams& params() const { return params_; }
  std::size_t k() const { return k_; }
  std::size_t r() const { return r_; }
  std::size_t length() const { return k_ + r_; }
  const Provenance& provenance() const { return provenance_; }
  const std::vector<Word>& parity_table() const { return parity_; }

  const Word& parity(const Word& x) const {
    require_message(x);
    return parity_[word_index(x)];
  }

  Word encode(const Word& x) const { return x.concat(parity(x)); }

 private:
  void require_message(const Word& x) const {
    if (x.params() != params_ || x.size() != k_)
      fail(ErrorKind::Shape, "message " + x.to_string() + " is not in Z_" + std::to_string(params_.modulus()) + "^" +
                                 std::to_string(k_));
  }

  RingParams params_{};
  std::size_t k_ = 0;
  std::size_t r_ = 0;
  std::vector<Word> parity_;
  Provenance provenance_;
};

namespace detail {

inline void require_t(int t) {
  if (t < 1) fail(ErrorKind::Domain, "error parameter t must be >= 1");
}

template <typename ParityOf>
std::vector<Word> parity_table(const RingParams& params, std::size_t k, const EnumLimits& limits, ParityOf&& parity_of) {
  limits.require_space(params, k, "encoder");
  const std::uint64_t n = space_size(params, k);
  std::vector<Word> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(parity_of(word_at(params, k, i)));
  return out;
}

}  // namespace detail

/// lambda codewords of homogeneous minimum distance exactly 2t.
///
/// Even t: length lambda*t/2, codeword i carries a run of t/2 copies of
/// 2^{s-1} in block i and zeros elsewhere.
/// Odd t: length (lambda(t+1) - 2)/2; codeword 1 is a run of (t-1)/2 copies
/// of 2^{s-1} at offset 0, codeword i >= 2 a run of (t+1)/2 copies starting
/// at ((i-2)(t+1) + (t-1))/2.
inline Code explicit_code(int lambda, int t, const RingParams& params) {
  if (lambda < 1) fail(ErrorKind::Domain, "explicit code needs lambda >= 1");
  detail::require_t(t);
  const Symbol a = params.half();
  std::vector<Word> words;
  if (t % 2 == 0) {
    const std::size_t run = static_cast<std::size_t>(t / 2);
    const std::size_t length = static_cast<std::size_t>(lambda) * run;
    for (int i = 0; i < lambda; ++i) {
      std::vector<Symbol> c(length, 0);
      std::fill_n(c.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(i) * run), run, a);
      words.emplace_back(params, std::move(c));
    }
  } else {
    const std::size_t length = static_cast<std::size_t>((lambda * (t + 1) - 2) / 2);
    std::vector<Symbol> first(length, 0);
    std::fill_n(first.begin(), (t - 1) / 2, a);
    words.emplace_back(params, std::move(first));
    for (int i = 2; i <= lambda; ++i) {
      std::vector<Symbol> c(length, 0);
      const std::size_t offset = static_cast<std::size_t>(((i - 2) * (t + 1) + (t - 1)) / 2);
      std::fill_n(c.begin() + static_cast<std::ptrdiff_t>(offset), (t + 1) / 2, a);
      words.emplace_back(params, std::move(c));
    }
  }
  return Code(params, std::move(words));
}

/// Parity alphabet {00, 0a, a0, aa}, a = 2^{s-1}, chosen by tau(x) in 1..4 and
/// repeated t times: r = 2t.
inline SystematicEncoder encoder_lambda4(const FunctionSpec& f, int t, const TauMap& tau,
                                         const EnumLimits& limits = default_limits()) {
  detail::require_t(t);
  if (tau.lambda != 4) fail(ErrorKind::Hypothesis, "encoder_lambda4 needs a tau map with lambda = 4, got " + std::to_string(tau.lambda));
  if (tau.rho < 2 * t)
    fail(ErrorKind::Hypothesis, "tau map was built for rho = " + std::to_string(tau.rho) + " but needs rho >= 2t = " +
                                    std::to_string(2 * t));
  const LocalityProfile profile = lambda0(f, 2 * t, limits);
  if (profile.lambda0 > 4)
    fail(ErrorKind::Hypothesis, "f is not locally (4, " + std::to_string(2 * t) + ")-bounded (lambda_0 = " +
                                    std::to_string(profile.lambda0) + ")");
  if (auto bad = find_tau_violation(f, tau, limits))
    fail(ErrorKind::Hypothesis, "tau map labels " + bad->first.to_string() + " and " + bad->second.to_string() +
                                    " equally although their values differ within radius " + std::to_string(tau.rho));

  const RingParams& p = f.params();
  const Symbol a = p.half();
  const std::pair<Symbol, Symbol> alphabet[4] = {{0, 0}, {0, a}, {a, 0}, {a, a}};
  auto table = detail::parity_table(p, f.k(), limits, [&](const Word& x) {
    const std::uint32_t label = tau(x);
    if (label < 1 || label > 4) fail(ErrorKind::Integrity, "tau label " + std::to_string(label) + " outside 1..4");
    std::vector<Symbol> parity;
    for (int rep = 0; rep < t; ++rep) {
      parity.push_back(alphabet[label - 1].first);
      parity.push_back(alphabet[label - 1].second);
    }
    return Word(p, std::move(parity));
  });
  Provenance prov{"lambda4", {{"t", t}, {"lambda", 4}, {"rho", tau.rho}}};
  return SystematicEncoder(p, f.k(), static_cast<std::size_t>(2 * t), std::move(table), std::move(prov));
}

/// parity(x) = C_{tau(x)}: the tau(x)-th codeword of `code` in its stored order.
inline SystematicEncoder encoder_via_tau(const FunctionSpec& f, int t, const TauMap& tau, const Code& code,
                                         const EnumLimits& limits = default_limits()) {
  detail::require_t(t);
  if (code.params() != f.params()) fail(ErrorKind::Shape, "code and function live over different rings");
  if (code.size() != tau.lambda)
    fail(ErrorKind::Hypothesis, "code has " + std::to_string(code.size()) + " codewords but tau uses lambda = " +
                                    std::to_string(tau.lambda));
  if (code.size() >= 2) {
    const int d = min_distance(code);
    if (d < 2 * t)
      fail(ErrorKind::Hypothesis, "code minimum distance " + std::to_string(d) + " is below 2t = " + std::to_string(2 * t));
  }
  if (tau.rho < 2 * t)
    fail(ErrorKind::Hypothesis, "tau map was built for rho = " + std::to_string(tau.rho) + " but needs rho >= 2t = " +
                                    std::to_string(2 * t));
  if (auto bad = find_tau_violation(f, tau, limits))
    fail(ErrorKind::Hypothesis, "tau map labels " + bad->first.to_string() + " and " + bad->second.to_string() +
                                    " equally although their values differ within radius " + std::to_string(tau.rho));

  auto table = detail::parity_table(f.params(), f.k(), limits, [&](const Word& x) {
    const std::uint32_t label = tau(x);
    if (label < 1 || label > code.size()) fail(ErrorKind::Integrity, "tau label out of range");
    return code[label - 1];
  });
  Provenance prov{"tau", {{"t", t}, {"lambda", tau.lambda}, {"rho", tau.rho}, {"code_length", code.length()}}};
  return SystematicEncoder(f.params(), f.k(), code.length(), std::move(table), std::move(prov));
}

/// Modular-sum parity symbol: 2 ms(x) if ms(x) < 2^{s-1}, else 2 ms(x) + 1,
/// reduced mod 2^s.
inline Symbol modular_sum_parity_symbol(Symbol sum, const RingParams& params) {
  return sum < params.half() ? params.mul(2, sum) : params.add(params.mul(2, sum), 1);
}

/// Enc(x) = (x, x_p repeated 2t times), r = 2t.
inline SystematicEncoder encoder_modular_sum(const RingParams& params, std::size_t k, int t,
                                             const EnumLimits& limits = default_limits()) {
  detail::require_t(t);
  std::set<Symbol> seen;
  for (Symbol v = 0; v < params.modulus(); ++v) seen.insert(modular_sum_parity_symbol(v, params));
  if (seen.size() != params.modulus())
    fail(ErrorKind::Integrity, "modular-sum parity symbol map is not injective over Z_" + std::to_string(params.modulus()));

  const FunctionSpec f = FunctionSpec::modular_sum(params, k);
  auto table = detail::parity_table(params, k, limits, [&](const Word& x) {
    const auto sum = static_cast<Symbol>(std::get<std::int64_t>(f(x)));
    return Word(params, std::vector<Symbol>(static_cast<std::size_t>(2 * t), modular_sum_parity_symbol(sum, params)));
  });
  Provenance prov{"msum", {{"t", t}}};
  return SystematicEncoder(params, k, static_cast<std::size_t>(2 * t), std::move(table), std::move(prov));
}

/// The submodule generated by the rows of G, lexicographic.
inline Code code_from_generator(const Matrix& generator, const EnumLimits& limits = default_limits()) {
  const RingParams& p = generator.params();
  limits.require_space(p, generator.rows(), "code_from_generator (coefficients)");
  const std::uint64_t n = space_size(p, generator.rows());
  std::set<Word> words;
  for (std::uint64_t i = 0; i < n; ++i) words.insert(generator.left_apply(word_at(p, generator.rows(), i)));
  return Code(p, std::vector<Word>(words.begin(), words.end()));
}

/// Properties of the map v -> v G restricted to Im(f), which decide whether
/// C_f = {(u, f(u) G)} can be function correcting.
struct LinearConstructionCheck {
  bool injective_on_image = true;
  std::optional<std::pair<Word, Word>> collision;  // two image values with equal v G
  std::optional<int> generator_min_distance;       // d_h of the code spanned by G
};

inline LinearConstructionCheck check_linear_construction(const FunctionSpec& f, const Matrix& generator,
                                                         const EnumLimits& limits = default_limits()) {
  LinearConstructionCheck out;
  std::vector<std::pair<Word, Word>> mapped;  // (v G, v)
  for (const auto& v : image(f, limits)) {
    const Word& w = std::get<Word>(v);
    mapped.emplace_back(generator.left_apply(w), w);
  }
  std::sort(mapped.begin(), mapped.end());
  for (std::size_t i = 1; i < mapped.size(); ++i)
    if (mapped[i].first == mapped[i - 1].first) {
      out.injective_on_image = false;
      out.collision = std::pair{mapped[i - 1].second, mapped[i].second};
      break;
    }
  const Code spanned = code_from_generator(generator, limits);
  if (spanned.size() >= 2) {
    int best = -1;
    for (const auto& c : spanned.codewords())
      if (!c.is_zero()) {
        const int w = hom_weight(c);
        best = best < 0 ? w : std::min(best, w);
      }
    out.generator_min_distance = best;  // linear code: minimum distance = minimum nonzero weight
  }
  return out;
}

/// C_f: parity(x) = f(x) G for a linear f : Z^k -> Z^l and an l x r matrix G.
/// Builds the encoder even when v -> v G collapses image values; the check
/// result is recorded in the provenance.
inline SystematicEncoder encoder_linear(const FunctionSpec& f, const Matrix& generator,
                                        const EnumLimits& limits = default_limits()) {
  if (f.kind() != FunctionKind::Linear) fail(ErrorKind::Domain, "encoder_linear needs a linear function");
  if (generator.params() != f.params()) fail(ErrorKind::Shape, "generator matrix and function live over different rings");
  if (generator.rows() != f.output_length())
    fail(ErrorKind::Shape, "generator matrix has " + std::to_string(generator.rows()) + " rows but f has " +
                               std::to_string(f.output_length()) + " outputs");

  const LinearConstructionCheck check = check_linear_construction(f, generator, limits);
  auto table = detail::parity_table(f.params(), f.k(), limits, [&](const Word& x) {
    return generator.left_apply(std::get<Word>(f(x)));
  });
  Provenance prov{"linear",
                  {{"function_matrix", f.matrix().to_rows()},
                   {"generator", generator.to_rows()},
                   {"injective_on_image", check.injective_on_image}}};
  if (check.generator_min_distance) prov.details["generator_min_distance"] = *check.generator_min_distance;
  if (check.collision) {
    const auto to_vec = [](const Word& w) { return std::vector<Symbol>(w.symbols().begin(), w.symbols().end()); };
    prov.details["collision"] = {to_vec(check.collision->first), to_vec(check.collision->second)};
  }
  return SystematicEncoder(f.params(), f.k(), generator.cols(), std::move(table), std::move(prov));
}

/// The sufficient condition for C_f to be an (f, t)-FCC that actually holds:
/// d_h(<G>) >= 2t and v -> v G injective on Im(f).
inline bool linear_construction_sufficient(const LinearConstructionCheck& check, int t) {
  return check.injective_on_image && check.generator_min_distance && *check.generator_min_distance >= 2 * t;
}

}  // namespace fcc
