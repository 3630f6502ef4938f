#pragma once

/**
 * @file rpoly.hpp
 * @brief Kazhdan-Lusztig R- and R~-polynomials on S_n.
 *
 * Three independent routes are provided:
 *  - the descent recurrences for R~ (nonnegative coefficients) and R;
 *  - the change of variable R_{u,v}(q) = q^{d/2} R~_{u,v}(q^{1/2} - q^{-1/2})
 *    with d = l(v) - l(u);
 *  - counting monotone Bruhat paths, R~_{u,v}(q) = sum over paths of q^{len}.
 *
 * Recurrences are memoized in an RTable that the caller owns and may share
 * across threads.
 */

#include <atomic>
#include <cstddef>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>

#include "klrpoly/paths.hpp"
#include "klrpoly/perm.hpp"
#include "klrpoly/poly.hpp"

namespace klrpoly {

struct PermutationPairHash {
  std::size_t operator()(const std::pair<Permutation, Permutation> &p) const noexcept {
    const std::size_t a = std::hash<Permutation>{}(p.first);
    const std::size_t b = std::hash<Permutation>{}(p.second);
    return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
  }
};

/// Which right descent of v drives the recurrence.
enum class DescentChoice { Smallest, Largest };

/**
 * Memo store keyed by raw (u, v) pairs. Holds R~ and R in separate maps.
 *
 * Lookups take a shared lock, inserts an exclusive one. Concurrent inserts
 * of the same key are harmless: every writer computes the same value and
 * the first one wins.
 */
class RTable {
public:
  enum class Kind { RTilde, R };

  RTable() = default;
  RTable(const RTable &) = delete;
  RTable &operator=(const RTable &) = delete;

  std::optional<IntPolynomial> find(Kind kind, const Permutation &u, const Permutation &v) const;
  void insert(Kind kind, const Permutation &u, const Permutation &v, const IntPolynomial &value);

  std::size_t size(Kind kind) const;
  std::size_t hits() const { return hits_.load(std::memory_order_relaxed); }
  std::size_t misses() const { return misses_.load(std::memory_order_relaxed); }

private:
  using Map = std::unordered_map<std::pair<Permutation, Permutation>, IntPolynomial, PermutationPairHash>;
  const Map &map(Kind kind) const { return kind == Kind::RTilde ? rtilde_ : r_; }
  Map &map(Kind kind) { return kind == Kind::RTilde ? rtilde_ : r_; }

  mutable std::shared_mutex mutex_;
  Map rtilde_;
  Map r_;
  mutable std::atomic<std::size_t> hits_{0};
  mutable std::atomic<std::size_t> misses_{0};
};

/// R~_{u,v}(q) by the descent recurrence, using the smallest right descent
/// of v. No Bruhat pre-check: u not <= v comes out as 0 at the base case.
IntPolynomial rtilde(const Permutation &u, const Permutation &v, RTable &table);

/// Same recurrence with an explicit descent choice. Not memoized; used to
/// confirm the result does not depend on the descent picked.
IntPolynomial rtilde_with_descent(const Permutation &u, const Permutation &v, DescentChoice choice);

/// R_{u,v}(q) by its own recurrence (signed coefficients).
IntPolynomial rpoly_r(const Permutation &u, const Permutation &v, RTable &table);
IntPolynomial rpoly_r(const Permutation &u, const Permutation &v);

/// R_{u,v} via substitute_shift(R~_{u,v}, l(v)-l(u)). Requires u <= v.
IntPolynomial rpoly_from_rtilde(const Permutation &u, const Permutation &v, RTable &table);

/// Sum of q^{len} over monotone Bruhat paths u -> v.
IntPolynomial rtilde_by_paths(const Permutation &u, const Permutation &v, Direction dir);

/// sum over w in [u,v] of (-1)^{l(w)-l(u)} R~_{u,w} R~_{w,v}. Requires u <= v.
IntPolynomial inversion_sum(const Permutation &u, const Permutation &v, RTable &table);

} // namespace klrpoly
