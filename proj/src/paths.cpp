#include "klrpoly/paths.hpp"

#include "klrpoly/bruhat.hpp"
#include "klrpoly/error.hpp"

namespace klrpoly {

std::strong_ordering lex_compare(const Transposition &a, const Transposition &b) { return a <=> b; }

BruhatPath::BruhatPath(Permutation start, std::vector<Transposition> labels)
    : start_(std::move(start)), labels_(std::move(labels)) {
  for (const auto &t : labels_) {
    if (t.j() > start_.size()) {
      throw DomainError(to_string(t) + " is not a transposition of S_" + std::to_string(start_.size()));
    }
  }
}

std::vector<Permutation> BruhatPath::nodes() const {
  std::vector<Permutation> out{start_};
  out.reserve(labels_.size() + 1);
  for (const auto &t : labels_) out.push_back(multiply_right(out.back(), t));
  return out;
}

Permutation BruhatPath::end() const {
  Permutation w = start_;
  for (const auto &t : labels_) w = multiply_right(w, t);
  return w;
}

bool BruhatPath::is_bruhat_path() const {
  Permutation w = start_;
  for (const auto &t : labels_) {
    if (w(t.i()) > w(t.j())) return false;
    w = multiply_right(w, t);
  }
  return true;
}

bool BruhatPath::is_monotone(Direction dir) const {
  for (std::size_t k = 1; k < labels_.size(); ++k) {
    const auto c = lex_compare(labels_[k - 1], labels_[k]);
    if (dir == Direction::Increasing ? c >= 0 : c <= 0) return false;
  }
  return true;
}

std::string to_string(const BruhatPath &p) {
  std::string out = format_permutation(p.start());
  Permutation w = p.start();
  for (const auto &t : p.labels()) {
    w = multiply_right(w, t);
    out += " -" + to_string(t) + "-> " + format_permutation(w);
  }
  return out;
}

namespace {

struct PathSearch {
  const Permutation &target;
  Direction dir;
  std::vector<Transposition> labels;
  std::vector<BruhatPath> *out;
  const Permutation &start;

  bool admissible(const Transposition &t) const {
    if (labels.empty()) return true;
    const auto c = lex_compare(labels.back(), t);
    return dir == Direction::Increasing ? c < 0 : c > 0;
  }

  void visit(const Permutation &w) {
    if (w == target) {
      // Length strictly increases along arcs, so the target cannot be
      // revisited by any extension.
      out->emplace_back(start, labels);
      return;
    }
    const int n = w.size();
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (w(i) > w(j)) continue;
        const Transposition t(i, j);
        if (!admissible(t)) continue;
        Permutation next = multiply_right(w, t);
        if (!bruhat_leq(next, target)) continue;
        labels.push_back(t);
        visit(next);
        labels.pop_back();
      }
    }
  }
};

} // namespace

std::vector<BruhatPath> monotone_paths(const Permutation &u, const Permutation &v, Direction dir) {
  require_same_size(u, v);
  std::vector<BruhatPath> out;
  if (!bruhat_leq(u, v)) return out;
  PathSearch search{v, dir, {}, &out, u};
  search.visit(u);
  return out;
}

BruhatPath unique_maximal_path(const Permutation &u, const Permutation &v, Direction dir) {
  if (!bruhat_leq(u, v)) {
    throw DomainError(format_permutation(u) + " is not <= " + format_permutation(v));
  }
  const int top = length(v) - length(u);
  std::vector<BruhatPath> maximal;
  for (auto &p : monotone_paths(u, v, dir)) {
    if (p.length() == top) maximal.push_back(std::move(p));
  }
  if (maximal.size() != 1) {
    throw InvariantViolation("expected exactly one maximal monotone path from " + format_permutation(u) +
                             " to " + format_permutation(v) + ", found " + std::to_string(maximal.size()));
  }
  return std::move(maximal.front());
}

VPath::VPath(BruhatPath leg1, BruhatPath leg2) : leg1_(std::move(leg1)), leg2_(std::move(leg2)) {
  if (leg1_.end() != leg2_.start()) {
    throw InvariantViolation("V-path legs do not meet: " + to_string(leg1_) + " / " + to_string(leg2_));
  }
}

bool VPath::is_valid() const {
  return leg1_.is_bruhat_path() && leg2_.is_bruhat_path() && leg1_.is_monotone(Direction::Decreasing) &&
         leg2_.is_monotone(Direction::Increasing);
}

std::string to_string(const VPath &p) {
  const auto nodes1 = p.leg1().nodes();
  const auto nodes2 = p.leg2().nodes();
  std::string out;
  for (std::size_t k = 0; k + 1 < nodes1.size(); ++k) {
    out += format_permutation(nodes1[k]) + " -" + to_string(p.leg1().labels()[k]) + "-> ";
  }
  out += '*' + format_permutation(p.bottom()) + '*';
  for (std::size_t k = 0; k < p.leg2().labels().size(); ++k) {
    out += " -" + to_string(p.leg2().labels()[k]) + "-> " + format_permutation(nodes2[k + 1]);
  }
  return out;
}

std::vector<VPath> vpaths(const Permutation &u, const Permutation &v) {
  std::vector<VPath> out;
  for (const auto &w : interval(u, v)) {
    const auto down = monotone_paths(u, w, Direction::Decreasing);
    if (down.empty()) continue;
    const auto up = monotone_paths(w, v, Direction::Increasing);
    for (const auto &a : down) {
      for (const auto &b : up) out.emplace_back(a, b);
    }
  }
  return out;
}

IntPolynomial vpath_signed_sum(const Permutation &u, const Permutation &v) {
  IntPolynomial sum;
  for (const auto &p : vpaths(u, v)) sum += IntPolynomial::monomial(p.total_length(), p.sign());
  return sum;
}

} // namespace klrpoly
