#include "klrpoly/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "klrpoly/bruhat.hpp"
#include "klrpoly/error.hpp"
#include "klrpoly/involution.hpp"
#include "klrpoly/paths.hpp"
#include "klrpoly/serialize.hpp"

namespace klrpoly {

using nlohmann::json;

namespace {

constexpr std::pair<Target, const char *> kTargetNames[] = {
    {Target::Inversion, "inversion"},   {Target::Dyer, "dyer"},         {Target::ChangeVar, "changevar"},
    {Target::Involution, "involution"}, {Target::Equidist, "equidist"}, {Target::Refinement, "refinement"},
};

std::string pair_text(const Permutation &u, const Permutation &v) {
  return format_permutation(u) + " " + format_permutation(v);
}

bool admissible(PairRequirement req, const Permutation &u, const Permutation &v) {
  switch (req) {
  case PairRequirement::Any: return true;
  case PairRequirement::Leq: return bruhat_leq(u, v);
  case PairRequirement::Less: return bruhat_less(u, v);
  }
  return false;
}

// ---------------------------------------------------------------- per target

void check_inversion(const Permutation &u, const Permutation &v, RTable &table, CaseResult &res) {
  const auto sum = inversion_sum(u, v, table);
  const auto expected = IntPolynomial::constant(u == v ? 1 : 0);
  res.details["sum"] = to_string(sum);
  res.notes.push_back("sum: " + to_string(sum));
  if (sum != expected) {
    res.failures.push_back("inversion sum is " + to_string(sum) + ", expected " + to_string(expected));
  }
}

void check_dyer(const Permutation &u, const Permutation &v, RTable &table, CaseResult &res) {
  const auto rec = rtilde(u, v, table);
  const auto inc = rtilde_by_paths(u, v, Direction::Increasing);
  const auto dec = rtilde_by_paths(u, v, Direction::Decreasing);
  const auto largest = rtilde_with_descent(u, v, DescentChoice::Largest);
  res.details["rtilde"] = to_string(rec);
  res.notes.push_back("rtilde: " + to_string(rec));
  if (inc != rec) res.failures.push_back("increasing paths give " + to_string(inc) + ", recurrence " + to_string(rec));
  if (dec != rec) res.failures.push_back("decreasing paths give " + to_string(dec) + ", recurrence " + to_string(rec));
  if (largest != rec) {
    res.failures.push_back("largest-descent recurrence gives " + to_string(largest) + ", smallest " + to_string(rec));
  }
  if (rec.is_zero() == bruhat_leq(u, v)) res.failures.push_back("R~ vanishing disagrees with Bruhat comparison");
}

void check_changevar(const Permutation &u, const Permutation &v, RTable &table, CaseResult &res) {
  const auto direct = rpoly_r(u, v, table);
  res.details["r"] = to_string(direct);
  res.notes.push_back("r: " + to_string(direct));
  if (!bruhat_leq(u, v)) {
    if (!direct.is_zero()) res.failures.push_back("R is " + to_string(direct) + " although u is not <= v");
    return;
  }
  const auto via = rpoly_from_rtilde(u, v, table);
  if (via != direct) {
    res.failures.push_back("recurrence gives " + to_string(direct) + ", change of variable " + to_string(via));
  }
}

void check_involution(const Permutation &u, const Permutation &v, RTable &table, CaseResult &res) {
  const auto all = vpaths(u, v);
  res.vpaths += static_cast<std::int64_t>(all.size());
  IntPolynomial signed_sum;
  for (const auto &p : all) {
    signed_sum += IntPolynomial::monomial(p.total_length(), p.sign());
    const VPath image = reflect(p);
    std::string problem;
    if (!image.is_valid()) {
      problem = "image is not a V-path";
    } else if (image.source() != u || image.target() != v) {
      problem = "image has different endpoints";
    } else if (image.total_length() != p.total_length()) {
      problem = "image changes total length";
    } else if (image.sign() == p.sign()) {
      problem = "image keeps the sign";
    } else if (reflect(image) != p) {
      problem = "reflect is not self-inverse here";
    }
    if (!problem.empty()) res.failures.push_back(problem + ": " + to_string(p) + " => " + to_string(image));
  }
  const auto inv = inversion_sum(u, v, table);
  res.details["vpath_sum"] = to_string(signed_sum);
  res.details["vpaths"] = all.size();
  res.notes.push_back("vpath signed sum: " + to_string(signed_sum) + " over " + std::to_string(all.size()) +
                      " V-paths");
  if (signed_sum != inv) {
    res.failures.push_back("V-path sum " + to_string(signed_sum) + " differs from inversion sum " + to_string(inv));
  }
  if (!signed_sum.is_zero()) res.failures.push_back("V-path sum is " + to_string(signed_sum) + ", expected 0");
}

void check_equidist(const Permutation &u, const Permutation &v, CaseResult &res) {
  const auto census = parity_census(u, v);
  res.details["census"] = {census.even, census.odd};
  res.notes.push_back("census: (" + std::to_string(census.even) + "," + std::to_string(census.odd) + ")");
  if (census.even != census.odd) res.failures.push_back("unbalanced parity census");

  const auto pairing = interval_pairing(u, v);
  for (const auto &[w, image] : pairing) {
    const auto back = pairing.find(image);
    if (image == w) {
      res.failures.push_back("pairing fixes " + format_permutation(w));
    } else if (back == pairing.end() || back->second != w) {
      res.failures.push_back("pairing is not an involution at " + format_permutation(w));
    } else if ((length(image) - length(w)) % 2 == 0) {
      res.failures.push_back("pairing keeps parity: " + format_permutation(w) + " -> " + format_permutation(image));
    }
  }
}

void check_refinement_k(const Permutation &u, const Permutation &v, int k, RTable &table, CaseResult &res,
                        IntPolynomial &total) {
  const auto rep = refinement_sum(u, v, k, table);
  total += rep.sum;
  const std::string kt = "k=" + std::to_string(k) + ": ";
  res.details["k" + std::to_string(k)] = to_json(rep);
  res.notes.push_back(kt + "sum " + to_string(rep.sum) + ", predicted " + to_string(rep.predicted));
  if (!rep.holds()) {
    res.failures.push_back(kt + "sum " + to_string(rep.sum) + " but predicted " + to_string(rep.predicted));
  }

  const auto paths = vpaths_ending_with(u, v, k);
  res.vpaths += static_cast<std::int64_t>(paths.size());
  std::vector<VPath> fixed;
  for (const auto &p : paths) {
    const auto image = refined_reflect(p, k);
    if (image.fixed) {
      fixed.push_back(p);
      continue;
    }
    std::string problem;
    if (image.path.total_length() != p.total_length()) {
      problem = "image changes total length";
    } else if (image.path.sign() == p.sign()) {
      problem = "image keeps the sign";
    } else {
      const auto back = refined_reflect(image.path, k);
      if (back.fixed || back.path != p) problem = "refined involution is not self-inverse here";
    }
    if (!problem.empty()) res.failures.push_back(kt + problem + ": " + to_string(p) + " => " + to_string(image.path));
  }

  if (fixed.size() > 1) res.failures.push_back(kt + std::to_string(fixed.size()) + " fixed points");
  if (fixed.size() == 1) {
    const auto &f = fixed.front();
    if (rep.sum != IntPolynomial::monomial(f.total_length(), f.sign())) {
      res.failures.push_back(kt + "fixed point " + to_string(f) + " does not account for the sum");
    }
  }
  if (fixed.empty() != rep.predicted.is_zero()) {
    res.failures.push_back(kt + "fixed point count " + std::to_string(fixed.size()) + " but predicted " +
                           to_string(rep.predicted));
  }
  if (fixed.size() == 1 && rep.fixed_point != fixed.front()) {
    res.failures.push_back(kt + "canonical fixed point differs from the one found by search");
  }
}

void check_refinement(const Permutation &u, const Permutation &v, std::optional<int> k, RTable &table,
                      CaseResult &res) {
  IntPolynomial total;
  if (k) {
    check_refinement_k(u, v, *k, table, res, total);
    res.details["sum"] = to_string(total);
    res.notes.insert(res.notes.begin(), "sum: " + to_string(total));
    return;
  }
  for (int kk = 1; kk <= u.size(); ++kk) check_refinement_k(u, v, kk, table, res, total);
  res.details["total"] = to_string(total);
  res.notes.push_back("sum over k: " + to_string(total));
  if (!total.is_zero()) res.failures.push_back("sum over all k is " + to_string(total) + ", expected 0");
}

} // namespace

std::optional<Target> parse_target(std::string_view name) {
  for (const auto &[t, s] : kTargetNames) {
    if (name == s) return t;
  }
  return std::nullopt;
}

std::string to_string(Target t) {
  for (const auto &[tt, s] : kTargetNames) {
    if (tt == t) return s;
  }
  return "unknown";
}

int default_budget(Target t) {
  switch (t) {
  case Target::Inversion:
  case Target::Equidist:
  case Target::ChangeVar: return 5;
  case Target::Dyer:
  case Target::Involution:
  case Target::Refinement: return 4;
  }
  return 4;
}

PairRequirement pair_requirement(Target t) {
  switch (t) {
  case Target::Dyer:
  case Target::ChangeVar: return PairRequirement::Any;
  case Target::Inversion: return PairRequirement::Leq;
  case Target::Involution:
  case Target::Equidist:
  case Target::Refinement: return PairRequirement::Less;
  }
  return PairRequirement::Any;
}

std::string Failure::replay() const {
  std::string out = "verify " + to_string(target) + " --interval " + pair_text(u, v);
  if (k) out += " --k " + std::to_string(*k);
  return out;
}

CaseResult check_case(Target target, const Permutation &u, const Permutation &v, std::optional<int> k,
                      RTable &table) {
  require_same_size(u, v);
  if (!admissible(pair_requirement(target), u, v)) {
    const char *need = pair_requirement(target) == PairRequirement::Less ? "u < v" : "u <= v";
    throw DomainError("verify " + to_string(target) + " needs " + need + " in Bruhat order, got " + pair_text(u, v));
  }
  if (k && target != Target::Refinement) throw DomainError("--k only applies to the refinement target");
  if (k && (*k < 1 || *k > u.size())) {
    throw DomainError("k = " + std::to_string(*k) + " out of range 1.." + std::to_string(u.size()));
  }

  CaseResult res;
  try {
    switch (target) {
    case Target::Inversion: check_inversion(u, v, table, res); break;
    case Target::Dyer: check_dyer(u, v, table, res); break;
    case Target::ChangeVar: check_changevar(u, v, table, res); break;
    case Target::Involution: check_involution(u, v, table, res); break;
    case Target::Equidist: check_equidist(u, v, res); break;
    case Target::Refinement: check_refinement(u, v, k, table, res); break;
    }
  } catch (const InvariantViolation &e) {
    res.failures.push_back(e.what());
  } catch (const OverflowError &e) {
    res.failures.push_back(e.what());
  }
  return res;
}

unsigned worker_count() {
  if (const char *env = std::getenv("KLRPOLY_THREADS")) {
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

RunReport verify_all(Target target, int n, RTable &table, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  const auto group = all_permutations(n);
  const auto req = pair_requirement(target);

  std::vector<std::pair<const Permutation *, const Permutation *>> pairs;
  for (const auto &u : group) {
    for (const auto &v : group) {
      if (admissible(req, u, v)) pairs.emplace_back(&u, &v);
    }
  }

  std::vector<CaseResult> results(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t idx; (idx = next.fetch_add(1)) < pairs.size();) {
      results[idx] = check_case(target, *pairs[idx].first, *pairs[idx].second, std::nullopt, table);
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(pairs.size())));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  RunReport rep;
  rep.parameters = {{"target", to_string(target)}, {"scope", "all-n"}, {"n", n}};
  std::int64_t vp = 0;
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    vp += results[idx].vpaths;
    for (auto &msg : results[idx].failures) {
      rep.failures.push_back({target, *pairs[idx].first, *pairs[idx].second, std::nullopt, std::move(msg)});
    }
  }
  rep.counters["pairs_checked"] = static_cast<std::int64_t>(pairs.size());
  rep.counters["vpaths_enumerated"] = vp;
  rep.counters["cache_entries"] =
      static_cast<std::int64_t>(table.size(RTable::Kind::RTilde) + table.size(RTable::Kind::R));
  rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return rep;
}

RunReport verify_interval(Target target, const Permutation &u, const Permutation &v, std::optional<int> k,
                          RTable &table) {
  const auto start = std::chrono::steady_clock::now();
  auto res = check_case(target, u, v, k, table);

  RunReport rep;
  rep.parameters = {{"target", to_string(target)},
                    {"scope", "interval"},
                    {"u", format_permutation(u)},
                    {"v", format_permutation(v)},
                    {"k", k ? json(*k) : json(nullptr)}};
  for (auto &msg : res.failures) rep.failures.push_back({target, u, v, k, std::move(msg)});
  rep.notes = std::move(res.notes);
  rep.details = std::move(res.details);
  rep.counters["pairs_checked"] = 1;
  rep.counters["vpaths_enumerated"] = res.vpaths;
  rep.counters["cache_entries"] =
      static_cast<std::int64_t>(table.size(RTable::Kind::RTilde) + table.size(RTable::Kind::R));
  rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return rep;
}

json RunReport::to_json(bool include_timing) const {
  json fails = json::array();
  for (const auto &f : failures) {
    fails.push_back({{"u", format_permutation(f.u)},
                     {"v", format_permutation(f.v)},
                     {"k", f.k ? json(*f.k) : json(nullptr)},
                     {"message", f.message},
                     {"replay", f.replay()}});
  }
  json out = {{"schema", kSchema},
              {"command", command},
              {"parameters", parameters},
              {"status", passed() ? "pass" : "fail"},
              {"counters", counters},
              {"failures", std::move(fails)}};
  if (!details.empty()) out["details"] = details;
  if (include_timing) out["elapsed_ms"] = elapsed.count();
  return out;
}

std::string RunReport::to_text(bool include_timing) const {
  std::string out = command + " " + parameters.value("target", std::string{}) + ": ";
  if (parameters.value("scope", std::string{}) == "all-n") {
    out += "all pairs of S_" + std::to_string(parameters.value("n", 0)) + "\n";
  } else {
    out += "interval " + parameters.value("u", std::string{}) + " " + parameters.value("v", std::string{});
    if (parameters.contains("k") && !parameters["k"].is_null()) out += " k=" + parameters["k"].dump();
    out += "\n";
  }
  for (const auto &note : notes) out += note + "\n";
  for (const auto &[name, value] : counters) out += name + ": " + std::to_string(value) + "\n";
  for (const auto &f : failures) out += "counterexample: " + f.replay() + " : " + f.message + "\n";
  if (include_timing) out += "elapsed_ms: " + std::to_string(elapsed.count()) + "\n";
  out += std::string("status: ") + (passed() ? "pass" : "fail") + "\n";
  return out;
}

} // namespace klrpoly
