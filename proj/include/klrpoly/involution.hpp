#pragma once

/**
 * @file involution.hpp
 * @brief Sign-reversing involutions on V-paths and the refined inversion
 *        formula for sums over [u,v]_k.
 *
 * reflect() is the reflection principle: it moves one arc across the bottom
 * of a V-path, changing l(leg1) by one and keeping the total length. Restricted
 * to maximal V-paths it pairs up the elements of [u,v] with opposite length
 * parity.
 *
 * refined_reflect() is the variant that keeps the bottom inside [u,v]_k. Its
 * only fixed points are V-paths made entirely of boundary transpositions
 * (a,n); there is at most one per (u, v, k) and it exists exactly when [u,v]
 * is an S-interval and k is u(m) or v(m), m the first position where u and v
 * differ.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klrpoly/paths.hpp"
#include "klrpoly/perm.hpp"
#include "klrpoly/poly.hpp"
#include "klrpoly/rpoly.hpp"

namespace klrpoly {

/// Image of a V-path from u to v under the reflection principle.
/// Throws DomainError for the empty V-path (u == v).
VPath reflect(const VPath &p);

/// w -> bottom of reflect(maximal V-path with bottom w), for all w in [u,v].
/// Requires u < v.
std::map<Permutation, Permutation> interval_pairing(const Permutation &u, const Permutation &v);

struct ParityCensus {
  int even = 0; ///< elements w with l(w) - l(u) even
  int odd = 0;
  bool operator==(const ParityCensus &) const = default;
};

ParityCensus parity_census(const Permutation &u, const Permutation &v);

/// First S-interval condition that fails.
enum class SIntervalFailure {
  None,
  LastPosition, ///< (1): last differing position is n and u(n) is the largest moved value
  Shuffle,      ///< (2): moved values above u(i_1) increase, those below decrease
  Rotation,     ///< (3): v rotates the moved values b_1 < ... < b_j
};

std::string to_string(SIntervalFailure f);

struct SIntervalReport {
  bool is_s_interval = false;
  std::vector<int> differing_positions; ///< D(u,v), ascending
  std::vector<int> b_values;            ///< u-values on D(u,v), ascending
  int m = 0;                            ///< smallest differing position
  std::optional<int> j0;                ///< 1-based index with b_{j0} = u(m)
  SIntervalFailure failure_reason = SIntervalFailure::None;
};

/// Checks conditions (1), (2), (3) in order. Requires u < v.
SIntervalReport classify_s_interval(const Permutation &u, const Permutation &v);

/// V-paths from u to v whose bottom ends with k.
std::vector<VPath> vpaths_ending_with(const Permutation &u, const Permutation &v, int k);

struct RefinedImage {
  VPath path;
  bool fixed = false; ///< all labels are boundary transpositions; path is the input
};

/**
 * The refined involution on V-paths with bottom in [u,v]_k.
 *
 * With t the smaller of the last leg1 label and the first leg2 label:
 *  - t internal (t = (a,b), b < n): same as reflect();
 *  - t boundary and some label internal: the smallest internal label moves
 *    to the other leg, at the position that keeps that leg monotone;
 *  - every label boundary: fixed.
 *
 * The result is checked to be a V-path from u to v with bottom in [u,v]_k;
 * a failed check throws InvariantViolation.
 */
RefinedImage refined_reflect(const VPath &p, int k);

/// The unique fixed point of refined_reflect in P_k(u,v), when there is one.
/// Built directly from D(u,v): boundary transpositions (j,n) for j in
/// D(u,v)\{n}, those with u(j) >= k in leg1 and the rest in leg2, each leg
/// ordered by decreasing u(j). Requires u < v.
std::optional<VPath> canonical_fixed_point(const Permutation &u, const Permutation &v, int k);

struct RefinementReport {
  int k = 0;
  IntPolynomial sum;       ///< over [u,v]_k of (-1)^{l(w)-l(u)} R~_{u,w} R~_{w,v}
  IntPolynomial predicted; ///< (-1)^r q^{s-1} or 0
  int s = 0;               ///< |D(u,v)|
  int r = 0;               ///< |{j in D(u,v) : u(j) > k}|
  std::optional<VPath> fixed_point;

  bool holds() const { return sum == predicted; }
};

/// Requires u < v and 1 <= k <= n.
RefinementReport refinement_sum(const Permutation &u, const Permutation &v, int k, RTable &table);

} // namespace klrpoly
