#include "klrpoly/serialize.hpp"

namespace klrpoly {

using nlohmann::json;

json to_json(const IntPolynomial &p) {
  json out = json::object();
  for (int d = 0; d <= p.degree(); ++d) {
    if (const auto c = p.coefficient(d); c != 0) out[std::to_string(d)] = c;
  }
  return out;
}

json to_json(const Transposition &t) { return json::array({t.i(), t.j()}); }

json to_json(const BruhatPath &p) {
  json labels = json::array();
  for (const auto &t : p.labels()) labels.push_back(to_json(t));
  json nodes = json::array();
  for (const auto &w : p.nodes()) nodes.push_back(format_permutation(w));
  return {{"start", format_permutation(p.start())}, {"labels", std::move(labels)}, {"nodes", std::move(nodes)}};
}

json to_json(const VPath &p) {
  return {{"bottom", format_permutation(p.bottom())},
          {"sign", p.sign()},
          {"total_length", p.total_length()},
          {"leg1", to_json(p.leg1())},
          {"leg2", to_json(p.leg2())}};
}

json to_json(const SIntervalReport &r) {
  return {{"is_s_interval", r.is_s_interval},
          {"differing_positions", r.differing_positions},
          {"b_values", r.b_values},
          {"m", r.m},
          {"j0", r.j0 ? json(*r.j0) : json(nullptr)},
          {"failure_reason", r.is_s_interval ? json(nullptr) : json(to_string(r.failure_reason))}};
}

json to_json(const RefinementReport &r) {
  return {{"k", r.k},
          {"sum", to_json(r.sum)},
          {"predicted", to_json(r.predicted)},
          {"s", r.s},
          {"r", r.r},
          {"fixed_point", r.fixed_point ? to_json(*r.fixed_point) : json(nullptr)}};
}

json to_json(const BruhatGraph &g) {
  json nodes = json::array();
  for (const auto &w : g.nodes) nodes.push_back(format_permutation(w));
  json edges = json::array();
  for (const auto &a : g.arcs) {
    edges.push_back({{"source", format_permutation(a.source)},
                     {"target", format_permutation(a.target)},
                     {"label", to_json(a.label)}});
  }
  return {{"schema", kSchema}, {"n", g.n}, {"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

std::string to_dot(const BruhatGraph &g) {
  std::string out = "digraph bruhat_S" + std::to_string(g.n) + " {\n";
  for (const auto &w : g.nodes) out += "  \"" + format_permutation(w) + "\";\n";
  for (const auto &a : g.arcs) {
    out += "  \"" + format_permutation(a.source) + "\" -> \"" + format_permutation(a.target) + "\" [label=\"" +
           to_string(a.label) + "\"];\n";
  }
  out += "}\n";
  return out;
}

} // namespace klrpoly
