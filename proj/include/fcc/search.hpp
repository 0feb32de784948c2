#pragma once

// Exact N_h(D): the least length r admitting words p_1..p_M over Z_{2^s}
// with d_h(p_i, p_j) >= [D]_ij.
//
// Backtracking over codewords in index order. p_1 is pinned to the zero word
// (distances are translation invariant), candidates are tried in
// lexicographic order, and each placement filters the candidate lists of the
// codewords still to be placed (forward checking). The first hit at the
// least feasible r is therefore the lexicographically least certificate with
// p_1 = 0.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fcc/bounds.hpp"
#include "fcc/error.hpp"
#include "fcc/function.hpp"
#include "fcc/ring.hpp"

namespace fcc {

enum class SearchStatus {
  Found,            // value is exact and certificate is present
  NoneWithinRange,  // every r <= r_max was refuted
  BudgetExceeded,   // gave up; certified_lower still holds
};

inline const char* to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found: return "found";
    case SearchStatus::NoneWithinRange: return "none-within-range";
    case SearchStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

struct SearchOptions {
  std::uint64_t node_budget = 50'000'000;
  /// Start at the best Plotkin bound instead of r = 0.
  bool start_at_plotkin = true;
  /// Largest s*r for which a length-r candidate space is materialized.
  int max_word_bits = 22;
};

struct SearchResult {
  /// N_h(D) when exhausted; otherwise the sentinel r_max + 1.
  std::int64_t value = 0;
  std::optional<std::vector<Word>> certificate;
  std::int64_t lower_bound_used = 0;
  /// True iff value is exact.
  bool exhausted = false;
  SearchStatus status = SearchStatus::BudgetExceeded;
  /// Every r below this was refuted (or excluded by the starting bound).
  std::int64_t certified_lower = 0;
  std::uint64_t nodes = 0;
  std::string note;
};

/// True iff d_h(p_i, p_j) >= [D]_ij for all i, j.
inline bool satisfies_requirements(const RequirementMatrix& d, const std::vector<Word>& words) {
  if (words.size() != d.size()) return false;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      if (hom_distance(words[i], words[j]) < d.at(i, j)) return false;
  return true;
}

namespace detail {

class RequirementSearch {
 public:
  using Domain = std::shared_ptr<const std::vector<std::uint64_t>>;

  RequirementSearch(const RequirementMatrix& d, RingParams params, std::size_t length, std::uint64_t budget,
                    std::uint64_t& nodes)
      : d_(d), space_(params, length), weights_(space_.weight_table()), budget_(budget), nodes_(nodes) {}

  /// nullopt with exceeded() == false means length is infeasible.
  std::optional<std::vector<Word>> run() {
    const std::size_t m = d_.size();
    placed_.assign(m, 0);
    if (m == 0) return std::vector<Word>{};
    std::vector<Domain> domains;
    const std::uint64_t n = space_size(space_.params, space_.length);
    for (std::size_t j = 1; j < m; ++j) {
      auto dom = std::make_shared<std::vector<std::uint64_t>>();
      for (std::uint64_t w = 0; w < n; ++w)
        if (weights_[w] >= d_.at(0, j)) dom->push_back(w);
      if (dom->empty()) return std::nullopt;
      domains.push_back(std::move(dom));
    }
    if (!place(1, domains)) return std::nullopt;
    std::vector<Word> out;
    for (std::uint64_t w : placed_) out.push_back(word_at(space_.params, space_.length, w));
    return out;
  }

  bool exceeded() const { return exceeded_; }

 private:
  // domains[j - level] holds the candidates for codeword j >= level.
  bool place(std::size_t level, const std::vector<Domain>& domains) {
    const std::size_t m = d_.size();
    if (level == m) return true;
    for (std::uint64_t cand : *domains.front()) {
      if (++nodes_ > budget_) {
        exceeded_ = true;
        return false;
      }
      placed_[level] = cand;
      std::vector<Domain> next;
      next.reserve(m - level - 1);
      bool dead = false;
      for (std::size_t j = level + 1; j < m && !dead; ++j) {
        const Domain& cur = domains[j - level];
        const int need = d_.at(level, j);
        if (need == 0) {
          next.push_back(cur);
          continue;
        }
        auto filtered = std::make_shared<std::vector<std::uint64_t>>();
        for (std::uint64_t w : *cur)
          if (weights_[space_.sub(w, cand)] >= need) filtered->push_back(w);
        dead = filtered->empty();
        next.push_back(std::move(filtered));
      }
      if (dead) continue;
      if (place(level + 1, next)) return true;
      if (exceeded_) return false;
    }
    return false;
  }

  const RequirementMatrix& d_;
  PackedSpace space_;
  std::vector<std::uint8_t> weights_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;
  std::vector<std::uint64_t> placed_;
  bool exceeded_ = false;
};

}  // namespace detail

inline SearchResult exact_nh(const RequirementMatrix& d, const RingParams& params, std::int64_t r_max,
                             const SearchOptions& options = {}) {
  if (r_max < 0) fail(ErrorKind::Domain, "r_max must be non-negative");
  SearchResult result;
  result.lower_bound_used = plotkin_bound(d, params);
  const std::int64_t start = options.start_at_plotkin ? result.lower_bound_used : 0;
  result.certified_lower = start;

  for (std::int64_t r = start; r <= r_max; ++r) {
    if (static_cast<std::int64_t>(params.s) * r > options.max_word_bits) {
      result.status = SearchStatus::BudgetExceeded;
      result.value = r_max + 1;
      result.note = "length " + std::to_string(r) + " exceeds the candidate space cap of 2^" +
                    std::to_string(options.max_word_bits) + " words";
      return result;
    }
    detail::RequirementSearch search(d, params, static_cast<std::size_t>(r), options.node_budget, result.nodes);
    auto found = search.run();
    if (search.exceeded()) {
      result.status = SearchStatus::BudgetExceeded;
      result.value = r_max + 1;
      result.note = "node budget of " + std::to_string(options.node_budget) + " exhausted at length " + std::to_string(r);
      return result;
    }
    if (found) {
      if (!satisfies_requirements(d, *found))
        fail(ErrorKind::Integrity, "search produced a certificate that violates the requirement matrix");
      result.value = r;
      result.certificate = std::move(found);
      result.exhausted = true;
      result.status = SearchStatus::Found;
      result.certified_lower = r;
      return result;
    }
    result.certified_lower = r + 1;
  }
  result.status = SearchStatus::NoneWithinRange;
  result.value = r_max + 1;
  result.certified_lower = std::max(result.certified_lower, r_max + 1);
  return result;
}

/// Best available lower bound on r_f^h(k, t) from the messages `vectors`:
/// the Plotkin-type bounds, the floor t (s >= 2, |Im f| >= 2), and an exact
/// N_h search when it fits in the budget (otherwise whatever it certified).
inline std::int64_t redundancy_lower_bound(const FunctionSpec& f, int t, const std::vector<Word>& vectors,
                                           const SearchOptions& options = {.node_budget = 2'000'000},
                                           const EnumLimits& limits = default_limits()) {
  const RequirementMatrix d = requirement_matrix(f, t, vectors);
  std::int64_t lb = plotkin_bound(d, f.params());
  if (f.params().s >= 2 && image(f, limits).size() >= 2) lb = std::max<std::int64_t>(lb, t);
  if (!d.is_zero()) {
    // Refuted lengths stay valid lower bounds even if the range runs out.
    const std::int64_t r_max = lb + d.max_entry();
    const SearchResult exact = exact_nh(d, f.params(), r_max, options);
    lb = std::max(lb, exact.exhausted ? exact.value : exact.certified_lower);
  }
  return lb;
}

}  // namespace fcc
