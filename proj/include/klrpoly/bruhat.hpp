#pragma once

/**
 * @file bruhat.hpp
 * @brief Bruhat order, intervals and the Bruhat graph of S_n.
 */

#include <vector>

#include "klrpoly/perm.hpp"

namespace klrpoly {

/// An arc source -> source * label of the Bruhat graph (length goes up).
struct BruhatArc {
  Permutation source;
  Permutation target;
  Transposition label;
};

/// u <= v in Bruhat order, by the prefix dominance criterion:
/// for every i the sorted prefix u(1..i) is entrywise <= the sorted
/// prefix v(1..i). O(n^2). Throws DomainError on mismatched n.
bool bruhat_leq(const Permutation &u, const Permutation &v);

/// u < v.
bool bruhat_less(const Permutation &u, const Permutation &v);

/// Every arc u -> u*(i,j) with u(i) < u(j), labels in lexicographic order.
std::vector<BruhatArc> arcs_from(const Permutation &u);

/// All w with u <= w <= v, lexicographic on one-line words. Scans all of
/// S_n, so the cost is n! comparisons. Throws DomainError if u is not <= v.
std::vector<Permutation> interval(const Permutation &u, const Permutation &v);

/// [u,v]_k: elements of [u,v] whose last entry is k.
std::vector<Permutation> interval_ending_with(const Permutation &u, const Permutation &v, int k);

struct BruhatGraph {
  int n;
  std::vector<Permutation> nodes; // lexicographic
  std::vector<BruhatArc> arcs;    // by source node, then by label
};

BruhatGraph bruhat_graph(int n);

} // namespace klrpoly
