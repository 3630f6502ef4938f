#pragma once

/**
 * @file paths.hpp
 * @brief Monotone Bruhat paths and V-paths under the lexicographic
 *        reflection ordering (1,2) < (1,3) < ... < (1,n) < (2,3) < ... .
 *
 * A path is stored compactly as its start node and label sequence; node k
 * is start * t_1 * ... * t_k. "Increasing" and "decreasing" are both taken
 * against the same lexicographic comparator.
 */

#include <compare>
#include <string>
#include <vector>

#include "klrpoly/perm.hpp"
#include "klrpoly/poly.hpp"

namespace klrpoly {

enum class Direction { Increasing, Decreasing };

std::strong_ordering lex_compare(const Transposition &a, const Transposition &b);

class BruhatPath {
public:
  explicit BruhatPath(Permutation start, std::vector<Transposition> labels = {});

  const Permutation &start() const { return start_; }
  const std::vector<Transposition> &labels() const { return labels_; }
  int length() const { return static_cast<int>(labels_.size()); }
  bool empty() const { return labels_.empty(); }

  /// start, start*t_1, ..., end (length()+1 nodes).
  std::vector<Permutation> nodes() const;
  Permutation end() const;

  /// Every step goes up in length (is a Bruhat-graph arc).
  bool is_bruhat_path() const;
  /// Labels strictly monotone in the given direction.
  bool is_monotone(Direction dir) const;

  bool operator==(const BruhatPath &) const = default;

private:
  Permutation start_;
  std::vector<Transposition> labels_;
};

/// "2314 -(1,2)-> 3214 -(1,4)-> 4213 -(2,4)-> 4312"; an empty path is its start.
std::string to_string(const BruhatPath &p);

/// All monotone Bruhat paths u -> v, sorted lexicographically by label
/// sequence. Depth-first over arcs with the previous label as a strict bound,
/// pruned to nodes below v.
std::vector<BruhatPath> monotone_paths(const Permutation &u, const Permutation &v, Direction dir);

/// The single monotone path of length l(v)-l(u). Throws DomainError when
/// u is not <= v and InvariantViolation if the count is not exactly one.
BruhatPath unique_maximal_path(const Permutation &u, const Permutation &v, Direction dir);

/// A decreasing path u -> w followed by an increasing path w -> v.
class VPath {
public:
  /// Throws InvariantViolation unless leg1 ends where leg2 starts.
  VPath(BruhatPath leg1, BruhatPath leg2);

  const BruhatPath &leg1() const { return leg1_; }
  const BruhatPath &leg2() const { return leg2_; }

  const Permutation &source() const { return leg1_.start(); }
  const Permutation &bottom() const { return leg2_.start(); }
  Permutation target() const { return leg2_.end(); }

  int total_length() const { return leg1_.length() + leg2_.length(); }
  /// (-1)^{l(leg1)}
  int sign() const { return leg1_.length() % 2 == 0 ? 1 : -1; }

  /// Both legs are Bruhat paths with the right monotonicity.
  bool is_valid() const;

  bool operator==(const VPath &) const = default;

private:
  BruhatPath leg1_;
  BruhatPath leg2_;
};

/// Path text with the bottom node wrapped in asterisks:
/// "1234 -(2,3)-> 1324 -(1,3)-> *2314* -(1,2)-> 3214 ..."
std::string to_string(const VPath &p);

/// Every V-path from u to v, grouped by bottom (lexicographic), then by
/// leg1 labels, then leg2 labels. Throws DomainError unless u <= v.
std::vector<VPath> vpaths(const Permutation &u, const Permutation &v);

/// Sum of sign * q^{total length} over vpaths(u,v).
IntPolynomial vpath_signed_sum(const Permutation &u, const Permutation &v);

} // namespace klrpoly
