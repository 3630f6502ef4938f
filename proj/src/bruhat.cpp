#include "klrpoly/bruhat.hpp"

#include <string>

#include "klrpoly/error.hpp"

namespace klrpoly {

bool bruhat_leq(const Permutation &u, const Permutation &v) {
  require_same_size(u, v);
  const int n = u.size();
  // Sorted-prefix dominance is equivalent to: for every prefix length i and
  // threshold a, #{p <= i : u(p) >= a} <= #{p <= i : v(p) >= a}.
  std::vector<int> count_u(static_cast<std::size_t>(n + 2), 0);
  std::vector<int> count_v(static_cast<std::size_t>(n + 2), 0);
  for (int i = 1; i < n; ++i) {
    for (int a = 1; a <= u(i); ++a) ++count_u[static_cast<std::size_t>(a)];
    for (int a = 1; a <= v(i); ++a) ++count_v[static_cast<std::size_t>(a)];
    for (int a = 1; a <= n; ++a) {
      if (count_u[static_cast<std::size_t>(a)] > count_v[static_cast<std::size_t>(a)]) return false;
    }
  }
  return true;
}

bool bruhat_less(const Permutation &u, const Permutation &v) {
  return u != v && bruhat_leq(u, v);
}

std::vector<BruhatArc> arcs_from(const Permutation &u) {
  std::vector<BruhatArc> out;
  const int n = u.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (u(i) < u(j)) {
        const Transposition t(i, j);
        out.push_back({u, multiply_right(u, t), t});
      }
    }
  }
  return out;
}

std::vector<Permutation> interval(const Permutation &u, const Permutation &v) {
  if (!bruhat_leq(u, v)) {
    throw DomainError(format_permutation(u) + " is not <= " + format_permutation(v) +
                      " in Bruhat order");
  }
  std::vector<Permutation> out;
  for (auto &w : all_permutations(u.size())) {
    if (bruhat_leq(u, w) && bruhat_leq(w, v)) out.push_back(std::move(w));
  }
  return out;
}

std::vector<Permutation> interval_ending_with(const Permutation &u, const Permutation &v, int k) {
  const int n = u.size();
  if (k < 1 || k > n) {
    throw DomainError("k = " + std::to_string(k) + " out of range 1.." + std::to_string(n));
  }
  std::vector<Permutation> out;
  for (auto &w : interval(u, v)) {
    if (w(n) == k) out.push_back(std::move(w));
  }
  return out;
}

BruhatGraph bruhat_graph(int n) {
  BruhatGraph g{n, all_permutations(n), {}};
  for (const auto &w : g.nodes) {
    auto arcs = arcs_from(w);
    g.arcs.insert(g.arcs.end(), arcs.begin(), arcs.end());
  }
  return g;
}

} // namespace klrpoly
