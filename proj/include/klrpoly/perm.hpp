#pragma once

/**
 * @file perm.hpp
 * @brief Permutations of {1..n} in one-line notation.
 *
 * A permutation w is stored as its one-line word w(1) w(2) ... w(n).
 * Positions and values are 1-based everywhere in the public interface.
 *
 * Right multiplication by a transposition acts on POSITIONS:
 *
 *     w * (i,j)  =  w with the entries at positions i and j swapped.
 *
 * With this convention the Bruhat graph has an arc w -> w*(i,j) exactly when
 * w(i) < w(j), and 1234 * (2,3) = 1324, 1324 * (1,3) = 2314. Every other
 * module relies on it; swapping values instead of positions silently breaks
 * all path and R-polynomial computations.
 */

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace klrpoly {

/// A transposition (i,j) with 1 <= i < j, acting on positions.
class Transposition {
public:
  Transposition(int i, int j);

  int i() const { return i_; }
  int j() const { return j_; }

  /// (a,n): touches the last position of S_n.
  bool is_boundary(int n) const { return j_ == n; }

  bool operator==(const Transposition &) const = default;
  /// Lexicographic order on (i,j); this is the reflection ordering
  /// (1,2) < (1,3) < ... < (1,n) < (2,3) < ... < (n-1,n).
  auto operator<=>(const Transposition &) const = default;

private:
  int i_;
  int j_;
};

/// "(i,j)"
std::string to_string(const Transposition &t);

class Permutation {
public:
  /// Throws DomainError unless `entries` is a bijection on {1..n}, n >= 1.
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);
  /// n n-1 ... 1, the top of the Bruhat order.
  static Permutation longest(int n);

  int size() const { return static_cast<int>(entries_.size()); }

  /// w(pos), 1-based.
  int operator()(int pos) const { return entries_[static_cast<std::size_t>(pos - 1)]; }

  std::span<const int> entries() const { return entries_; }

  bool operator==(const Permutation &) const = default;
  /// Lexicographic on one-line words; only meaningful within one S_n.
  auto operator<=>(const Permutation &) const = default;

private:
  struct Unchecked {};
  Permutation(std::vector<int> entries, Unchecked) : entries_(std::move(entries)) {}
  friend Permutation multiply_right(const Permutation &, const Transposition &);
  friend std::vector<Permutation> all_permutations(int n);

  std::vector<int> entries_;
};

/// Accepts a compact digit word ("2354167", n <= 9) or a bracketed comma
/// list ("[10,1,2,3,4,5,6,7,8,9]"). Throws ParseError.
Permutation parse_permutation(std::string_view text);

/// Compact form when n <= 9, bracketed list otherwise.
std::string format_permutation(const Permutation &w);
std::string format_permutation_bracketed(const Permutation &w);

/// Number of inversions.
int length(const Permutation &w);

/// w * t. Throws DomainError if t does not fit in S_n.
Permutation multiply_right(const Permutation &w, const Transposition &t);

/// Positions i with w(i) > w(i+1), ascending.
std::vector<int> right_descents(const Permutation &w);

/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Throws DomainError when u and v live in different symmetric groups.
void require_same_size(const Permutation &u, const Permutation &v);

} // namespace klrpoly

template <> struct std::hash<klrpoly::Permutation> {
  std::size_t operator()(const klrpoly::Permutation &w) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : w.entries()) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ULL;
    }
    return h;
  }
};
