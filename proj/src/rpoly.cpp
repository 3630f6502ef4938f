#include "klrpoly/rpoly.hpp"

#include <mutex>

#include "klrpoly/bruhat.hpp"
#include "klrpoly/error.hpp"

namespace klrpoly {

std::optional<IntPolynomial> RTable::find(Kind kind, const Permutation &u, const Permutation &v) const {
  std::shared_lock lock(mutex_);
  const auto &m = map(kind);
  if (const auto it = m.find({u, v}); it != m.end()) {
    hits_.fetch_add(1, std::memory_order_relaxed);
    return it->second;
  }
  misses_.fetch_add(1, std::memory_order_relaxed);
  return std::nullopt;
}

void RTable::insert(Kind kind, const Permutation &u, const Permutation &v, const IntPolynomial &value) {
  std::unique_lock lock(mutex_);
  map(kind).try_emplace({u, v}, value);
}

std::size_t RTable::size(Kind kind) const {
  std::shared_lock lock(mutex_);
  return map(kind).size();
}

namespace {

std::optional<int> pick_descent(const Permutation &v, DescentChoice choice) {
  const auto d = right_descents(v);
  if (d.empty()) return std::nullopt;
  return choice == DescentChoice::Smallest ? d.front() : d.back();
}

// Shared skeleton of both recurrences. With s a right descent of v and u != v:
//   s in D_R(u):      X_{u,v} = X_{us,vs}
//   s not in D_R(u):  X_{u,v} = a * X_{us,vs} + b * X_{u,vs}
// R~ uses (a, b) = (1, q); R uses (a, b) = (q, q - 1).
// If v has no descent then v = id, and X_{u,id} = [u == id].
template <class Memo>
IntPolynomial recurse(const Permutation &u, const Permutation &v, RTable::Kind kind, DescentChoice choice,
                      Memo &memo) {
  if (u == v) return IntPolynomial::constant(1);
  if (auto hit = memo.find(kind, u, v)) return *hit;

  IntPolynomial result;
  if (const auto s = pick_descent(v, choice)) {
    const Transposition t(*s, *s + 1);
    const Permutation us = multiply_right(u, t);
    const Permutation vs = multiply_right(v, t);
    if (u(*s) > u(*s + 1)) {
      result = recurse(us, vs, kind, choice, memo);
    } else if (kind == RTable::Kind::RTilde) {
      result = recurse(us, vs, kind, choice, memo) +
               IntPolynomial::monomial(1) * recurse(u, vs, kind, choice, memo);
    } else {
      result = IntPolynomial::monomial(1) * recurse(us, vs, kind, choice, memo) +
               IntPolynomial({-1, 1}) * recurse(u, vs, kind, choice, memo);
    }
  }
  memo.insert(kind, u, v, result);
  return result;
}

// Per-call memo for the unshared entry points.
struct LocalMemo {
  std::unordered_map<std::pair<Permutation, Permutation>, IntPolynomial, PermutationPairHash> map;
  std::optional<IntPolynomial> find(RTable::Kind, const Permutation &u, const Permutation &v) const {
    if (const auto it = map.find({u, v}); it != map.end()) return it->second;
    return std::nullopt;
  }
  void insert(RTable::Kind, const Permutation &u, const Permutation &v, const IntPolynomial &p) {
    map.try_emplace({u, v}, p);
  }
};

} // namespace

IntPolynomial rtilde(const Permutation &u, const Permutation &v, RTable &table) {
  require_same_size(u, v);
  return recurse(u, v, RTable::Kind::RTilde, DescentChoice::Smallest, table);
}

IntPolynomial rtilde_with_descent(const Permutation &u, const Permutation &v, DescentChoice choice) {
  require_same_size(u, v);
  LocalMemo memo;
  return recurse(u, v, RTable::Kind::RTilde, choice, memo);
}

IntPolynomial rpoly_r(const Permutation &u, const Permutation &v, RTable &table) {
  require_same_size(u, v);
  return recurse(u, v, RTable::Kind::R, DescentChoice::Smallest, table);
}

IntPolynomial rpoly_r(const Permutation &u, const Permutation &v) {
  require_same_size(u, v);
  LocalMemo memo;
  return recurse(u, v, RTable::Kind::R, DescentChoice::Smallest, memo);
}

IntPolynomial rpoly_from_rtilde(const Permutation &u, const Permutation &v, RTable &table) {
  if (!bruhat_leq(u, v)) {
    throw DomainError(format_permutation(u) + " is not <= " + format_permutation(v));
  }
  return substitute_shift(rtilde(u, v, table), length(v) - length(u));
}

IntPolynomial rtilde_by_paths(const Permutation &u, const Permutation &v, Direction dir) {
  IntPolynomial sum;
  for (const auto &p : monotone_paths(u, v, dir)) sum += IntPolynomial::monomial(p.length());
  return sum;
}

IntPolynomial inversion_sum(const Permutation &u, const Permutation &v, RTable &table) {
  const int base = length(u);
  IntPolynomial sum;
  for (const auto &w : interval(u, v)) {
    IntPolynomial term = rtilde(u, w, table) * rtilde(w, v, table);
    if ((length(w) - base) % 2 != 0) term = -term;
    sum += term;
  }
  return sum;
}

} // namespace klrpoly
