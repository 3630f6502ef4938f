#pragma once

/**
 * @file verify.hpp
 * @brief Exhaustive identity checks over single intervals or all of S_n.
 *
 * Each target checks one family of identities on a pair (u, v):
 *
 *   inversion   sum_w (-1)^{l(w)-l(u)} R~_{u,w} R~_{w,v} = delta_{u,v}      (u <= v)
 *   dyer        recurrence R~ = increasing-path count = decreasing-path count,
 *               descent independence, R~ = 0 iff u not <= v                (any pair)
 *   changevar   R from its recurrence = R from R~ by change of variable     (any pair)
 *   involution  reflect is a sign-reversing, length-preserving, fixed-point
 *               free involution on V-paths; V-path sum = inversion sum       (u < v)
 *   equidist    even/odd census balanced; the induced pairing on [u,v]
 *               is a fixed-point-free parity-flipping involution            (u < v)
 *   refinement  refined sum over [u,v]_k matches the closed form; the
 *               refined involution pairs P_k(u,v) with at most one fixed
 *               point, which matches the canonical construction              (u < v)
 */

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "klrpoly/perm.hpp"
#include "klrpoly/rpoly.hpp"

namespace klrpoly {

enum class Target { Inversion, Dyer, ChangeVar, Involution, Equidist, Refinement };

std::optional<Target> parse_target(std::string_view name);
std::string to_string(Target t);

/// Default --max-n for --all-n runs.
int default_budget(Target t);

/// Pairs a target accepts: u <= v, u < v, or anything.
enum class PairRequirement { Any, Leq, Less };
PairRequirement pair_requirement(Target t);

struct Failure {
  Target target;
  Permutation u;
  Permutation v;
  std::optional<int> k;
  std::string message;

  /// Command line that reproduces the failure.
  std::string replay() const;
};

struct CaseResult {
  std::vector<std::string> failures;
  std::int64_t vpaths = 0;
  /// Target-specific data (sums, censuses); reported for --interval runs.
  nlohmann::json details = nlohmann::json::object();
  std::vector<std::string> notes;
};

/// Runs one target on one pair. Checks that fail are reported in the result;
/// InvariantViolation and OverflowError raised underneath are caught and
/// reported as failures too. Throws DomainError if the pair does not meet
/// pair_requirement(target) or k is out of range.
CaseResult check_case(Target target, const Permutation &u, const Permutation &v, std::optional<int> k,
                      RTable &table);

struct RunReport {
  std::string command = "verify";
  nlohmann::json parameters = nlohmann::json::object();
  std::map<std::string, std::int64_t> counters;
  std::vector<Failure> failures;
  std::vector<std::string> notes;
  nlohmann::json details = nlohmann::json::object();
  std::chrono::milliseconds elapsed{0};

  bool passed() const { return failures.empty(); }
  /// Schema "kl-rpoly/1". elapsed_ms only when include_timing is set, so the
  /// default document is deterministic.
  nlohmann::json to_json(bool include_timing = false) const;
  std::string to_text(bool include_timing = false) const;
};

/// Every admissible pair of S_n, split across `threads` workers that share
/// `table`. Failures come back ordered by (u, v) regardless of scheduling.
RunReport verify_all(Target target, int n, RTable &table, unsigned threads);

RunReport verify_interval(Target target, const Permutation &u, const Permutation &v, std::optional<int> k,
                          RTable &table);

/// KLRPOLY_THREADS if set and positive, otherwise hardware concurrency.
unsigned worker_count();

} // namespace klrpoly
