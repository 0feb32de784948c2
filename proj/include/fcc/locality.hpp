#pragma once

// Function balls, local boundedness, the lambda_0 statistic, the contiguous
// block condition, and the tau labelling built from it.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fcc/error.hpp"
#include "fcc/function.hpp"
#include "fcc/ring.hpp"

namespace fcc {

struct LocalityProfile {
  int rho = 0;
  std::size_t lambda0 = 0;
  Word witness;  // lexicographically least centre with the largest function ball
  std::optional<std::pair<std::int64_t, std::int64_t>> theoretical_bounds;
};

/// A labelling of every message by 1..lambda, indexed by word_index(x).
struct TauMap {
  RingParams params;
  std::size_t k = 0;
  std::size_t lambda = 0;
  int rho = 0;
  std::vector<std::uint32_t> assignment;

  std::uint32_t operator()(const Word& x) const { return assignment.at(word_index(x)); }
};

namespace detail {

/// Offsets of B_h(0, rho) as packed words. Balls are translates of this one.
inline std::vector<std::uint64_t> ball_offsets(const RingParams& params, std::size_t k, int rho) {
  const PackedSpace space(params, k);
  std::vector<std::uint64_t> out;
  const std::uint64_t n = space_size(params, k);
  for (std::uint64_t v = 0; v < n; ++v)
    if (space.weight(v) <= rho) out.push_back(v);
  return out;
}

/// Sorted distinct value ids in the function ball around message x.
inline std::vector<std::uint32_t> ball_value_ids(const FunctionTable& table, const PackedSpace& space,
                                                 const std::vector<std::uint64_t>& offsets, std::uint64_t x) {
  std::vector<std::uint32_t> ids;
  ids.reserve(offsets.size());
  for (std::uint64_t v : offsets) ids.push_back(table.value_id[space.add(x, v)]);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

/// rank[value_id] for a caller supplied order that must be a permutation of the image.
inline std::vector<std::size_t> order_ranks(const FunctionTable& table, const std::vector<FunctionValue>& order) {
  std::vector<std::size_t> rank(table.image.size(), table.image.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const auto it = std::lower_bound(table.image.begin(), table.image.end(), order[pos]);
    if (it == table.image.end() || *it != order[pos])
      fail(ErrorKind::Domain, "order lists " + to_string(order[pos]) + ", which is not in Im(f)");
    const auto id = static_cast<std::size_t>(it - table.image.begin());
    if (rank[id] != table.image.size()) fail(ErrorKind::Domain, "order lists " + to_string(order[pos]) + " twice");
    rank[id] = pos;
  }
  for (std::size_t id = 0; id < rank.size(); ++id)
    if (rank[id] == table.image.size())
      fail(ErrorKind::Domain, "order is not total on Im(f): " + to_string(table.image[id]) + " is missing");
  return rank;
}

inline void require_radius(int rho) {
  if (rho < 0) fail(ErrorKind::Domain, "radius rho must be non-negative");
}

}  // namespace detail

/// The natural order: integers ascending, words lexicographic.
inline std::vector<FunctionValue> natural_order(const FunctionSpec& f, const EnumLimits& limits = default_limits()) {
  return image(f, limits);
}

/// B_f^h(x, rho) = { f(y) : d_h(x, y) <= rho }, sorted.
inline std::vector<FunctionValue> function_ball(const FunctionSpec& f, const Word& x, int rho,
                                                const EnumLimits& limits = default_limits()) {
  detail::require_radius(rho);
  if (x.params() != f.params() || x.size() != f.k()) fail(ErrorKind::Shape, "ball centre does not match f's domain");
  std::vector<FunctionValue> out;
  for (const Word& y : ball(x, rho, limits)) out.push_back(f(y));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline LocalityProfile lambda0(const FunctionSpec& f, int rho, const EnumLimits& limits = default_limits()) {
  detail::require_radius(rho);
  const FunctionTable table = tabulate(f, limits);
  const detail::PackedSpace space(f.params(), f.k());
  const auto offsets = detail::ball_offsets(f.params(), f.k(), rho);
  std::size_t best = 0;
  std::uint64_t best_x = 0;
  for (std::uint64_t x = 0; x < table.message_count(); ++x) {
    const std::size_t size = detail::ball_value_ids(table, space, offsets, x).size();
    if (size > best) {
      best = size;
      best_x = x;
    }
  }
  LocalityProfile profile;
  profile.rho = rho;
  profile.lambda0 = best;
  profile.witness = word_at(f.params(), f.k(), best_x);
  return profile;
}

inline bool check_locally_bounded(const FunctionSpec& f, std::size_t lambda, int rho,
                                  const EnumLimits& limits = default_limits()) {
  return lambda0(f, rho, limits).lambda0 <= lambda;
}

/// Closed-form brackets on lambda_0: HomWeight -> (rho+1, 2rho+2),
/// WeightDistribution with threshold T -> (floor(rho/T)+1, floor(2rho/T)+2).
inline std::pair<std::int64_t, std::int64_t> theoretical_locality_bounds(FunctionKind kind, int rho,
                                                                         std::optional<int> threshold = std::nullopt) {
  detail::require_radius(rho);
  switch (kind) {
    case FunctionKind::HomWeight: return {rho + 1, 2 * rho + 2};
    case FunctionKind::WeightDistribution: {
      if (!threshold || *threshold < 1) fail(ErrorKind::Domain, "weight distribution bounds need a threshold T >= 1");
      const int t = *threshold;
      return {rho / t + 1, (2 * rho) / t + 2};
    }
    default:
      fail(ErrorKind::Domain, std::string("no closed-form locality bounds for function kind '") + to_string(kind) + "'");
  }
}

inline std::optional<std::pair<std::int64_t, std::int64_t>> theoretical_locality_bounds(const FunctionSpec& f, int rho) {
  if (f.kind() == FunctionKind::HomWeight) return theoretical_locality_bounds(f.kind(), rho);
  if (f.kind() == FunctionKind::WeightDistribution) return theoretical_locality_bounds(f.kind(), rho, f.threshold());
  return std::nullopt;
}

/// True iff every function ball of radius rho is a run of consecutive values
/// under `order` (which must list Im(f) exactly once).
inline bool contiguous_block_check(const FunctionSpec& f, const std::vector<FunctionValue>& order, int rho,
                                   const EnumLimits& limits = default_limits()) {
  detail::require_radius(rho);
  const FunctionTable table = tabulate(f, limits);
  const auto rank = detail::order_ranks(table, order);
  const detail::PackedSpace space(f.params(), f.k());
  const auto offsets = detail::ball_offsets(f.params(), f.k(), rho);
  for (std::uint64_t x = 0; x < table.message_count(); ++x) {
    const auto ids = detail::ball_value_ids(table, space, offsets, x);
    std::size_t lo = rank[ids.front()], hi = lo;
    for (std::uint32_t id : ids) {
      lo = std::min(lo, rank[id]);
      hi = std::max(hi, rank[id]);
    }
    if (hi - lo + 1 != ids.size()) return false;
  }
  return true;
}

/// First pair (x, y), x < y lexicographically, with f(x) != f(y),
/// d_h(x, y) <= tau.rho and equal labels; nullopt if the labelling is sound.
inline std::optional<std::pair<Word, Word>> find_tau_violation(const FunctionSpec& f, const TauMap& tau,
                                                               const EnumLimits& limits = default_limits()) {
  if (tau.params != f.params() || tau.k != f.k()) fail(ErrorKind::Shape, "tau map and function have different domains");
  const FunctionTable table = tabulate(f, limits);
  if (tau.assignment.size() != table.message_count()) fail(ErrorKind::Integrity, "tau map is not total");
  const detail::PackedSpace space(f.params(), f.k());
  const auto offsets = detail::ball_offsets(f.params(), f.k(), tau.rho);
  for (std::uint64_t x = 0; x < table.message_count(); ++x) {
    std::vector<std::uint64_t> near;
    for (std::uint64_t v : offsets) near.push_back(space.add(x, v));
    std::sort(near.begin(), near.end());
    for (std::uint64_t y : near) {
      if (y <= x) continue;
      if (table.value_id[x] != table.value_id[y] && tau.assignment[x] == tau.assignment[y])
        return std::pair{word_at(f.params(), f.k(), x), word_at(f.params(), f.k(), y)};
    }
  }
  return std::nullopt;
}

/// tau(x) = (rank of f(x) under `order`) mod lambda + 1. Requires f to be
/// locally (lambda, rho)-bounded and contiguous under `order`.
inline TauMap build_tau(const FunctionSpec& f, std::size_t lambda, int rho, const std::vector<FunctionValue>& order,
                        const EnumLimits& limits = default_limits()) {
  detail::require_radius(rho);
  if (lambda < 1) fail(ErrorKind::Hypothesis, "tau map needs lambda >= 1");
  if (!contiguous_block_check(f, order, rho, limits))
    fail(ErrorKind::Hypothesis, "contiguous block condition fails: some function ball of radius " +
                                    std::to_string(rho) + " is not a run of consecutive values under the given order");
  const LocalityProfile profile = lambda0(f, rho, limits);
  if (profile.lambda0 > lambda)
    fail(ErrorKind::Hypothesis, "f is not locally (" + std::to_string(lambda) + ", " + std::to_string(rho) +
                                    ")-bounded: the ball around " + profile.witness.to_string() + " holds " +
                                    std::to_string(profile.lambda0) + " values");
  const FunctionTable table = tabulate(f, limits);
  const auto rank = detail::order_ranks(table, order);
  TauMap tau{f.params(), f.k(), lambda, rho, {}};
  tau.assignment.resize(table.message_count());
  for (std::uint64_t x = 0; x < table.message_count(); ++x)
    tau.assignment[x] = static_cast<std::uint32_t>(rank[table.value_id[x]] % lambda + 1);
  return tau;
}

inline TauMap build_tau(const FunctionSpec& f, std::size_t lambda, int rho,
                        const EnumLimits& limits = default_limits()) {
  return build_tau(f, lambda, rho, natural_order(f, limits), limits);
}

}  // namespace fcc
