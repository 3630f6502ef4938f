#include "klrpoly/cli.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "klrpoly/bruhat.hpp"
#include "klrpoly/error.hpp"
#include "klrpoly/involution.hpp"
#include "klrpoly/paths.hpp"
#include "klrpoly/rpoly.hpp"
#include "klrpoly/serialize.hpp"
#include "klrpoly/verify.hpp"

namespace klrpoly {

using nlohmann::json;

namespace {

struct Options {
  // shared
  std::string u_text;
  std::string v_text;
  bool json_out = false;
  // rpoly
  std::string kind = "rtilde";
  // verify
  std::string target;
  std::optional<int> all_n;
  std::vector<std::string> interval_pair;
  std::optional<int> k;
  std::optional<int> max_n;
  bool timing = false;
  // graph / table
  int n = 0;
  std::string format = "dot";
  // paths
  std::string direction = "inc";
  bool with_vpaths = false;
};

std::string join(const std::vector<int> &xs, const char *open, const char *close) {
  std::string s = open;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + close;
}

void require_within(int n, int limit, const char *what) {
  if (n < 1) throw DomainError(std::string(what) + ": n must be >= 1");
  if (n > limit) {
    throw DomainError(std::string(what) + ": n = " + std::to_string(n) + " exceeds the budget of " +
                      std::to_string(limit) + "; pass --max-n " + std::to_string(n) +
                      " to run it anyway (cost grows like (n!)^2)");
  }
}

int cmd_rpoly(const Options &o, std::string &out) {
  const auto u = parse_permutation(o.u_text);
  const auto v = parse_permutation(o.v_text);
  require_same_size(u, v);
  RTable table;
  const auto p = o.kind == "r" ? rpoly_r(u, v, table) : rtilde(u, v, table);
  if (o.json_out) {
    out = json{{"schema", kSchema},
               {"u", format_permutation(u)},
               {"v", format_permutation(v)},
               {"kind", o.kind},
               {"polynomial", to_string(p)},
               {"coefficients", to_json(p)}}
              .dump(2) +
          "\n";
  } else {
    out = to_string(p) + "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options &o, std::string &out) {
  const auto target = parse_target(o.target);
  if (!target) throw ParseError("unknown verify target '" + o.target + "'");

  RTable table;
  RunReport rep;
  if (o.all_n) {
    if (o.k) throw DomainError("--k needs --interval");
    require_within(*o.all_n, o.max_n.value_or(default_budget(*target)), "verify --all-n");
    rep = verify_all(*target, *o.all_n, table, worker_count());
  } else if (o.interval_pair.size() == 2) {
    rep = verify_interval(*target, parse_permutation(o.interval_pair[0]), parse_permutation(o.interval_pair[1]),
                          o.k, table);
  } else {
    throw DomainError("verify needs --all-n N or --interval U V");
  }
  out = o.json_out ? rep.to_json(o.timing).dump(2) + "\n" : rep.to_text(o.timing);
  return rep.passed() ? kExitOk : kExitCounterexample;
}

int cmd_graph(const Options &o, std::string &out) {
  require_within(o.n, o.max_n.value_or(6), "graph");
  const auto g = bruhat_graph(o.n);
  out = o.format == "json" ? to_json(g).dump(2) + "\n" : to_dot(g);
  return kExitOk;
}

int cmd_paths(const Options &o, std::string &out) {
  const auto u = parse_permutation(o.u_text);
  const auto v = parse_permutation(o.v_text);
  require_same_size(u, v);
  const Direction dir = o.direction.starts_with("inc") ? Direction::Increasing : Direction::Decreasing;

  std::ostringstream text;
  json doc = {{"schema", kSchema}, {"u", format_permutation(u)}, {"v", format_permutation(v)}};
  if (o.with_vpaths) {
    json list = json::array();
    for (const auto &p : vpaths(u, v)) {
      json entry = to_json(p);
      text << (p.sign() > 0 ? "+ " : "- ") << to_string(p) << "\n";
      if (u != v) {
        const auto image = reflect(p);
        text << "    I: " << to_string(image) << "\n";
        entry["image"] = to_json(image);
      }
      list.push_back(std::move(entry));
    }
    doc["vpaths"] = std::move(list);
  } else {
    json list = json::array();
    for (const auto &p : monotone_paths(u, v, dir)) {
      text << to_string(p) << "\n";
      list.push_back(to_json(p));
    }
    doc["direction"] = dir == Direction::Increasing ? "increasing" : "decreasing";
    doc["paths"] = std::move(list);
  }
  out = o.json_out ? doc.dump(2) + "\n" : text.str();
  return kExitOk;
}

int cmd_classify(const Options &o, std::string &out) {
  const auto u = parse_permutation(o.u_text);
  const auto v = parse_permutation(o.v_text);
  const auto rep = classify_s_interval(u, v);
  if (o.json_out) {
    json doc = to_json(rep);
    doc["schema"] = kSchema;
    doc["u"] = format_permutation(u);
    doc["v"] = format_permutation(v);
    out = doc.dump(2) + "\n";
    return kExitOk;
  }
  out = "s_interval: " + std::string(rep.is_s_interval ? "yes" : "no") + "\n";
  out += "D(u,v): " + join(rep.differing_positions, "{", "}") + "\n";
  out += "b: " + join(rep.b_values, "(", ")") + "\n";
  out += "m: " + std::to_string(rep.m) + "\n";
  if (rep.j0) out += "j0: " + std::to_string(*rep.j0) + "\n";
  if (!rep.is_s_interval) out += "failure: " + to_string(rep.failure_reason) + "\n";
  return kExitOk;
}

int cmd_table(const Options &o, std::string &out) {
  require_within(o.n, o.max_n.value_or(6), "table");
  const auto group = all_permutations(o.n);
  RTable table;
  std::string csv = "u,v,rtilde\n";
  for (const auto &u : group) {
    for (const auto &v : group) {
      if (!bruhat_leq(u, v)) continue;
      csv += format_permutation(u) + "," + format_permutation(v) + "," + to_string(rtilde(u, v, table)) + "\n";
    }
  }
  out = std::move(csv);
  return kExitOk;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Kazhdan-Lusztig R-polynomials on S_n: computation and exhaustive verification", "klrpoly"};
  app.require_subcommand(1);
  Options o;

  auto *rpoly = app.add_subcommand("rpoly", "Print R_{u,v} or R~_{u,v}");
  rpoly->add_option("u", o.u_text, "Lower permutation")->required();
  rpoly->add_option("v", o.v_text, "Upper permutation")->required();
  rpoly->add_option("--kind", o.kind, "r or rtilde")->check(CLI::IsMember({"r", "rtilde"}));
  rpoly->add_flag("--json", o.json_out, "JSON output");

  auto *verify = app.add_subcommand("verify", "Exhaustively check an identity");
  verify->add_option("target", o.target, "inversion|dyer|involution|equidist|refinement|changevar")
      ->required()
      ->check(CLI::IsMember({"inversion", "dyer", "involution", "equidist", "refinement", "changevar"}));
  auto *all_n = verify->add_option("--all-n", o.all_n, "Check every admissible pair of S_N");
  auto *iv = verify->add_option("--interval", o.interval_pair, "Check a single pair U V")->expected(2);
  all_n->excludes(iv);
  verify->add_option("--k", o.k, "Last entry for the refinement target");
  verify->add_option("--max-n", o.max_n, "Raise the default budget for --all-n");
  verify->add_flag("--json", o.json_out, "Print the run report as JSON");
  verify->add_flag("--timing", o.timing, "Include elapsed time in the report");

  auto *graph = app.add_subcommand("graph", "Export the Bruhat graph of S_n");
  graph->add_option("n", o.n, "Size")->required();
  graph->add_option("--format", o.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  graph->add_option("--max-n", o.max_n, "Size guard (default 6)");

  auto *paths = app.add_subcommand("paths", "List monotone Bruhat paths or V-paths");
  paths->add_option("u", o.u_text, "Start")->required();
  paths->add_option("v", o.v_text, "End")->required();
  paths->add_option("--direction", o.direction, "inc or dec")
      ->check(CLI::IsMember({"inc", "dec", "increasing", "decreasing"}));
  paths->add_flag("--vpaths", o.with_vpaths, "List V-paths with sign, bottom and reflected image");
  paths->add_flag("--json", o.json_out, "JSON output");

  auto *classify = app.add_subcommand("classify", "S-interval report for u < v");
  classify->add_option("u", o.u_text, "Lower permutation")->required();
  classify->add_option("v", o.v_text, "Upper permutation")->required();
  classify->add_flag("--json", o.json_out, "JSON output");

  auto *table = app.add_subcommand("table", "CSV of R~_{u,v} for all u <= v in S_n");
  table->add_option("n", o.n, "Size")->required();
  table->add_option("--max-n", o.max_n, "Size guard (default 6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    // Subcommand help requests surface here as well.
    if (e.get_exit_code() == 0) {
      for (auto *sub : app.get_subcommands()) out << sub->help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::string buffer;
  int code = kExitOk;
  try {
    if (*rpoly) code = cmd_rpoly(o, buffer);
    else if (*verify) code = cmd_verify(o, buffer);
    else if (*graph) code = cmd_graph(o, buffer);
    else if (*paths) code = cmd_paths(o, buffer);
    else if (*classify) code = cmd_classify(o, buffer);
    else if (*table) code = cmd_table(o, buffer);
  } catch (const ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantViolation &e) {
    err << "invariant violated: " << e.what() << "\n";
    return kExitCounterexample;
  } catch (const OverflowError &e) {
    err << "overflow: " << e.what() << "\n";
    return kExitCounterexample;
  }
  out << buffer;
  return code;
}

} // namespace klrpoly
