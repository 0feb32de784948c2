#pragma once

// Exhaustive FCC verification, the nearest-encoding channel decoder, and the
// exact optimal redundancy search over all messages.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fcc/bounds.hpp"
#include "fcc/encoders.hpp"
#include "fcc/error.hpp"
#include "fcc/function.hpp"
#include "fcc/ring.hpp"
#include "fcc/search.hpp"

namespace fcc {

enum class VerificationStatus { Verified, Violated };

inline const char* to_string(VerificationStatus s) { return s == VerificationStatus::Verified ? "verified" : "violated"; }

struct Counterexample {
  Word x, y;
  int distance = 0;  // d_h(Enc x, Enc y)
  int required = 0;  // 2t + 1
};

struct VerificationReport {
  VerificationStatus status = VerificationStatus::Verified;
  std::optional<Counterexample> counterexample;
  std::uint64_t pairs_checked = 0;  // unordered pairs with f(x) != f(y)
  std::uint64_t violations = 0;
  int t = 0;

  bool verified() const { return status == VerificationStatus::Verified; }
};

namespace detail {

inline void require_compatible(const SystematicEncoder& enc, const FunctionSpec& f) {
  if (enc.params() != f.params() || enc.k() != f.k())
    fail(ErrorKind::Shape, "encoder and function have different message spaces");
}

/// Every encoding as a flat symbol array, message index major.
inline std::vector<Symbol> flat_encodings(const SystematicEncoder& enc) {
  const std::size_t n = enc.length();
  const std::uint64_t count = space_size(enc.params(), enc.k());
  std::vector<Symbol> out;
  out.reserve(count * n);
  for (std::uint64_t i = 0; i < count; ++i) {
    const Word x = word_at(enc.params(), enc.k(), i);
    out.insert(out.end(), x.symbols().begin(), x.symbols().end());
    const auto& p = enc.parity_table()[i];
    out.insert(out.end(), p.symbols().begin(), p.symbols().end());
  }
  return out;
}

inline std::vector<std::uint8_t> symbol_weights(const RingParams& params) {
  std::vector<std::uint8_t> w(params.modulus());
  for (Symbol a = 0; a < params.modulus(); ++a) w[a] = static_cast<std::uint8_t>(hom_weight_symbol(a, params));
  return w;
}

}  // namespace detail

/// True iff (x, y) really violates the FCC condition for enc.
inline bool is_violation(const SystematicEncoder& enc, const FunctionSpec& f, int t, const Word& x, const Word& y) {
  return f(x) != f(y) && hom_distance(enc.encode(x), enc.encode(y)) < 2 * t + 1;
}

inline VerificationReport verify_fcc(const SystematicEncoder& enc, const FunctionSpec& f, int t,
                                     const EnumLimits& limits = default_limits()) {
  detail::require_t(t);
  detail::require_compatible(enc, f);
  limits.require_pairs(f.params(), f.k(), "verify_fcc");
  const FunctionTable table = tabulate(f, limits);
  const auto flat = detail::flat_encodings(enc);
  const auto weights = detail::symbol_weights(enc.params());
  const std::size_t n = enc.length();
  const Symbol mask = enc.params().mask();
  const int need = 2 * t + 1;

  VerificationReport report;
  report.t = t;
  const std::uint64_t m = table.message_count();
  for (std::uint64_t i = 0; i < m; ++i) {
    const Symbol* a = flat.data() + i * n;
    for (std::uint64_t j = i + 1; j < m; ++j) {
      if (table.value_id[i] == table.value_id[j]) continue;
      ++report.pairs_checked;
      const Symbol* b = flat.data() + j * n;
      int d = 0;
      for (std::size_t c = 0; c < n && d < need; ++c) d += weights[(a[c] - b[c]) & mask];
      if (d >= need) continue;
      ++report.violations;
      if (!report.counterexample) {
        Counterexample ce{word_at(f.params(), f.k(), i), word_at(f.params(), f.k(), j), 0, need};
        ce.distance = hom_distance(enc.encode(ce.x), enc.encode(ce.y));
        report.counterexample = std::move(ce);
      }
    }
  }
  if (report.counterexample) {
    report.status = VerificationStatus::Violated;
    if (!is_violation(enc, f, t, report.counterexample->x, report.counterexample->y))
      fail(ErrorKind::Integrity, "counterexample failed to re-validate");
  }
  return report;
}

struct ChannelOutcome {
  FunctionValue value;  // f of the decoded message
  Word decoded;         // nearest message, ties to the lexicographically least
  Word received;
  int distance = 0;     // d_h(Enc(decoded), received)
  std::optional<std::string> warning;
};

/// Nearest-encoding function decoder for a fixed (enc, f, t). Verification
/// runs once at construction; decoding an unverified encoder still works but
/// every outcome carries a warning.
class ChannelSimulator {
 public:
  ChannelSimulator(SystematicEncoder enc, FunctionSpec f, int t, const EnumLimits& limits = default_limits())
      : enc_(std::move(enc)), f_(std::move(f)), t_(t), report_(verify_fcc(enc_, f_, t_, limits)),
        flat_(detail::flat_encodings(enc_)), weights_(detail::symbol_weights(enc_.params())) {}

  const VerificationReport& report() const { return report_; }
  const SystematicEncoder& encoder() const { return enc_; }

  ChannelOutcome decode(const Word& received) const {
    if (received.params() != enc_.params() || received.size() != enc_.length())
      fail(ErrorKind::Shape, "received word must have length k + r = " + std::to_string(enc_.length()));
    const std::size_t n = enc_.length();
    const Symbol mask = enc_.params().mask();
    const auto y = received.symbols();
    std::uint64_t best = 0;
    int best_d = -1;
    const std::uint64_t m = space_size(enc_.params(), enc_.k());
    for (std::uint64_t i = 0; i < m; ++i) {
      const Symbol* a = flat_.data() + i * n;
      int d = 0;
      for (std::size_t c = 0; c < n; ++c) d += weights_[(a[c] - y[c]) & mask];
      if (best_d < 0 || d < best_d) {
        best_d = d;
        best = i;
      }
    }
    Word z = word_at(enc_.params(), enc_.k(), best);
    ChannelOutcome out{f_(z), z, received, best_d, std::nullopt};
    if (!report_.verified()) out.warning = "encoder is not a verified (f, " + std::to_string(t_) + ")-FCC";
    return out;
  }

  /// Sends Enc(x) + e; requires w_h(e) <= t.
  ChannelOutcome transmit(const Word& x, const Word& e) const {
    if (e.params() != enc_.params() || e.size() != enc_.length())
      fail(ErrorKind::Shape, "error word must have length k + r = " + std::to_string(enc_.length()));
    const int w = hom_weight(e);
    if (w > t_)
      fail(ErrorKind::Hypothesis, "error weight " + std::to_string(w) + " exceeds t = " + std::to_string(t_));
    return decode(enc_.encode(x) + e);
  }

 private:
  SystematicEncoder enc_;
  FunctionSpec f_;
  int t_;
  VerificationReport report_;
  std::vector<Symbol> flat_;
  std::vector<std::uint8_t> weights_;
};

inline ChannelOutcome simulate_channel(const SystematicEncoder& enc, const FunctionSpec& f, int t, const Word& x,
                                       const Word& e, const EnumLimits& limits = default_limits()) {
  detail::require_t(t);
  detail::require_compatible(enc, f);
  if (e.params() == enc.params() && e.size() == enc.length() && hom_weight(e) > t)
    fail(ErrorKind::Hypothesis, "error weight " + std::to_string(hom_weight(e)) + " exceeds t = " + std::to_string(t));
  return ChannelSimulator(enc, f, t, limits).transmit(x, e);
}

struct OptimalRedundancy {
  SearchResult search;
  std::optional<SystematicEncoder> encoder;  // parity(x_i) = p_i from the certificate
};

/// r_f(k, t) = N_h of the requirement matrix over every message.
inline OptimalRedundancy exact_optimal_redundancy(const FunctionSpec& f, int t, std::int64_t r_max,
                                                  const SearchOptions& options = {},
                                                  const EnumLimits& limits = default_limits()) {
  const RequirementMatrix d = full_requirement_matrix(f, t, limits);
  OptimalRedundancy out{exact_nh(d, f.params(), r_max, options), std::nullopt};
  if (out.search.certificate) {
    Provenance prov{"optimal", {{"t", t}, {"nodes", out.search.nodes}}};
    out.encoder = SystematicEncoder(f.params(), f.k(), static_cast<std::size_t>(out.search.value),
                                    *out.search.certificate, std::move(prov));
    if (!verify_fcc(*out.encoder, f, t, limits).verified())
      fail(ErrorKind::Integrity, "encoder induced by the search certificate is not an FCC");
  }
  return out;
}

}  // namespace fcc
