#include "klrpoly/involution.hpp"

#include <algorithm>

#include "klrpoly/bruhat.hpp"
#include "klrpoly/error.hpp"

namespace klrpoly {

namespace {

using Labels = std::vector<Transposition>;

void require_strictly_below(const Permutation &u, const Permutation &v, const char *what) {
  if (!bruhat_less(u, v)) {
    throw DomainError(std::string(what) + " needs u < v, got " + format_permutation(u) + " and " +
                      format_permutation(v));
  }
}

// Rebuilds a V-path from u with the given label sequences.
VPath assemble(const Permutation &u, Labels leg1, Labels leg2) {
  BruhatPath down(u, std::move(leg1));
  Permutation bottom = down.end();
  return VPath(std::move(down), BruhatPath(std::move(bottom), std::move(leg2)));
}

// Inserts `t` into a strictly monotone label list at the slot that keeps it
// monotone. Throws on a repeated label.
void insert_sorted(Labels &labels, const Transposition &t, Direction dir) {
  const auto pos = dir == Direction::Increasing
                       ? std::lower_bound(labels.begin(), labels.end(), t)
                       : std::lower_bound(labels.begin(), labels.end(), t, std::greater<>{});
  if (pos != labels.end() && *pos == t) {
    throw InvariantViolation("label " + to_string(t) + " already present in the target leg");
  }
  labels.insert(pos, t);
}

} // namespace

VPath reflect(const VPath &p) {
  const Labels &down = p.leg1().labels();
  const Labels &up = p.leg2().labels();
  if (down.empty() && up.empty()) {
    throw DomainError("reflect is undefined on the empty V-path (u == v)");
  }

  Labels leg1 = down;
  Labels leg2 = up;
  if (down.empty()) {
    // (1) leg1 empty: the first arc of leg2 becomes leg1.
    leg1.push_back(leg2.front());
    leg2.erase(leg2.begin());
  } else if (up.empty()) {
    // (2) leg2 empty: the last arc of leg1 becomes leg2.
    leg2.push_back(leg1.back());
    leg1.pop_back();
  } else if (down.back() < up.front()) {
    // (3a) t_i < t'_1: t_i moves to the front of leg2.
    leg2.insert(leg2.begin(), leg1.back());
    leg1.pop_back();
  } else {
    // (3b) t_i > t'_1: t'_1 is appended to leg1.
    leg1.push_back(leg2.front());
    leg2.erase(leg2.begin());
  }
  return assemble(p.source(), std::move(leg1), std::move(leg2));
}

std::map<Permutation, Permutation> interval_pairing(const Permutation &u, const Permutation &v) {
  require_strictly_below(u, v, "interval_pairing");
  std::map<Permutation, Permutation> out;
  for (const auto &w : interval(u, v)) {
    const VPath maximal(unique_maximal_path(u, w, Direction::Decreasing),
                        unique_maximal_path(w, v, Direction::Increasing));
    out.emplace(w, reflect(maximal).bottom());
  }
  return out;
}

ParityCensus parity_census(const Permutation &u, const Permutation &v) {
  ParityCensus census;
  const int base = length(u);
  for (const auto &w : interval(u, v)) {
    if ((length(w) - base) % 2 == 0) {
      ++census.even;
    } else {
      ++census.odd;
    }
  }
  return census;
}

std::string to_string(SIntervalFailure f) {
  switch (f) {
  case SIntervalFailure::None: return "none";
  case SIntervalFailure::LastPosition: return "condition-1";
  case SIntervalFailure::Shuffle: return "condition-2";
  case SIntervalFailure::Rotation: return "condition-3";
  }
  return "unknown";
}

SIntervalReport classify_s_interval(const Permutation &u, const Permutation &v) {
  require_strictly_below(u, v, "classify_s_interval");
  const int n = u.size();

  SIntervalReport rep;
  for (int p = 1; p <= n; ++p) {
    if (u(p) != v(p)) {
      rep.differing_positions.push_back(p);
      rep.b_values.push_back(u(p));
    }
  }
  std::sort(rep.b_values.begin(), rep.b_values.end());
  const auto &d = rep.differing_positions;
  const auto &b = rep.b_values;
  rep.m = d.front();
  const int first_value = u(rep.m);
  rep.j0 = static_cast<int>(std::find(b.begin(), b.end(), first_value) - b.begin()) + 1;

  auto fail = [&](SIntervalFailure why) {
    rep.failure_reason = why;
    return rep;
  };

  if (d.back() != n || u(n) != b.back()) return fail(SIntervalFailure::LastPosition);

  int last_above = 0;
  int last_below = n + 1;
  for (std::size_t idx = 1; idx + 1 < d.size(); ++idx) {
    const int x = u(d[idx]);
    if (x > first_value) {
      if (x < last_above) return fail(SIntervalFailure::Shuffle);
      last_above = x;
    } else {
      if (x > last_below) return fail(SIntervalFailure::Shuffle);
      last_below = x;
    }
  }

  for (int p : d) {
    int expected;
    if (p == n) {
      expected = b.front();
    } else {
      const auto rank = std::find(b.begin(), b.end(), u(p)) - b.begin();
      expected = b[static_cast<std::size_t>(rank) + 1];
    }
    if (v(p) != expected) return fail(SIntervalFailure::Rotation);
  }

  rep.is_s_interval = true;
  return rep;
}

std::vector<VPath> vpaths_ending_with(const Permutation &u, const Permutation &v, int k) {
  std::vector<VPath> out;
  for (const auto &w : interval_ending_with(u, v, k)) {
    const auto down = monotone_paths(u, w, Direction::Decreasing);
    if (down.empty()) continue;
    const auto up = monotone_paths(w, v, Direction::Increasing);
    for (const auto &a : down) {
      for (const auto &b : up) out.emplace_back(a, b);
    }
  }
  return out;
}

RefinedImage refined_reflect(const VPath &p, int k) {
  const Permutation &u = p.source();
  const Permutation v = p.target();
  const int n = u.size();
  require_strictly_below(u, v, "refined_reflect");
  if (p.bottom()(n) != k) {
    throw DomainError("bottom " + format_permutation(p.bottom()) + " does not end with " + std::to_string(k));
  }

  const Labels &down = p.leg1().labels();
  const Labels &up = p.leg2().labels();
  const auto internal = [n](const Transposition &t) { return !t.is_boundary(n); };

  std::optional<Transposition> t;
  if (!down.empty()) t = down.back();
  if (!up.empty() && (!t || up.front() < *t)) t = up.front();

  auto check = [&](VPath image) {
    if (!image.is_valid() || image.target() != v || image.bottom()(n) != k) {
      throw InvariantViolation("refined_reflect left P_" + std::to_string(k) + ": " + to_string(p) + " => " +
                               to_string(image));
    }
    return RefinedImage{std::move(image), false};
  };

  // Case 1: t internal.
  if (internal(*t)) return check(reflect(p));

  // Case 3: nothing internal anywhere.
  std::optional<Transposition> smallest_internal;
  bool in_leg1 = false;
  for (const auto &x : down) {
    if (internal(x) && (!smallest_internal || x < *smallest_internal)) {
      smallest_internal = x;
      in_leg1 = true;
    }
  }
  for (const auto &x : up) {
    if (internal(x) && (!smallest_internal || x < *smallest_internal)) {
      smallest_internal = x;
      in_leg1 = false;
    }
  }
  if (!smallest_internal) return RefinedImage{p, true};

  // Case 2: move the smallest internal label across the bottom, into the slot
  // that keeps the receiving leg monotone.
  Labels leg1 = down;
  Labels leg2 = up;
  if (in_leg1) {
    leg1.erase(std::find(leg1.begin(), leg1.end(), *smallest_internal));
    insert_sorted(leg2, *smallest_internal, Direction::Increasing);
  } else {
    leg2.erase(std::find(leg2.begin(), leg2.end(), *smallest_internal));
    insert_sorted(leg1, *smallest_internal, Direction::Decreasing);
  }
  return check(assemble(u, std::move(leg1), std::move(leg2)));
}

std::optional<VPath> canonical_fixed_point(const Permutation &u, const Permutation &v, int k) {
  const auto rep = classify_s_interval(u, v);
  const int n = u.size();
  if (!rep.is_s_interval || (k != u(rep.m) && k != v(rep.m))) return std::nullopt;

  std::vector<int> high; // u(j) >= k: leg1
  std::vector<int> low;  // u(j) < k: leg2
  for (int j : rep.differing_positions) {
    if (j == n) continue;
    (u(j) >= k ? high : low).push_back(j);
  }
  const auto by_value_desc = [&u](int a, int b) { return u(a) > u(b); };
  std::sort(high.begin(), high.end(), by_value_desc);
  std::sort(low.begin(), low.end(), by_value_desc);

  Labels leg1;
  Labels leg2;
  for (int j : high) leg1.emplace_back(j, n);
  for (int j : low) leg2.emplace_back(j, n);
  VPath candidate = assemble(u, std::move(leg1), std::move(leg2));

  const auto all_boundary = [n](const BruhatPath &path) {
    return std::all_of(path.labels().begin(), path.labels().end(),
                       [n](const Transposition &t) { return t.is_boundary(n); });
  };
  if (!candidate.is_valid() || candidate.target() != v || candidate.bottom()(n) != k ||
      !all_boundary(candidate.leg1()) || !all_boundary(candidate.leg2())) {
    return std::nullopt;
  }
  return candidate;
}

RefinementReport refinement_sum(const Permutation &u, const Permutation &v, int k, RTable &table) {
  require_strictly_below(u, v, "refinement_sum");
  const int n = u.size();
  if (k < 1 || k > n) {
    throw DomainError("k = " + std::to_string(k) + " out of range 1.." + std::to_string(n));
  }

  RefinementReport rep;
  rep.k = k;
  const int base = length(u);
  for (const auto &w : interval_ending_with(u, v, k)) {
    IntPolynomial term = rtilde(u, w, table) * rtilde(w, v, table);
    if ((length(w) - base) % 2 != 0) term = -term;
    rep.sum += term;
  }

  const auto cls = classify_s_interval(u, v);
  rep.s = static_cast<int>(cls.differing_positions.size());
  rep.r = static_cast<int>(std::count_if(cls.differing_positions.begin(), cls.differing_positions.end(),
                                         [&](int j) { return u(j) > k; }));
  if (cls.is_s_interval && (k == u(cls.m) || k == v(cls.m))) {
    rep.predicted = IntPolynomial::monomial(rep.s - 1, rep.r % 2 == 0 ? 1 : -1);
    rep.fixed_point = canonical_fixed_point(u, v, k);
  }
  return rep;
}

} // namespace klrpoly
