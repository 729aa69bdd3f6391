#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "vpoly/error.hpp"
#include "vpoly/evaluators.hpp"
#include "vpoly/ffcount.hpp"
#include "vpoly/groth.hpp"
#include "vpoly/json_io.hpp"
#include "vpoly/vpolynomial.hpp"

namespace vpoly::cli {

namespace {

using json_io::Json;

std::vector<std::uint64_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::uint64_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      if (part.empty() || part[0] == '-') throw std::invalid_argument(part);
      v = std::stoull(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size())
      throw CLI::ValidationError(what, "'" + part + "' is not a non-negative integer");
    out.push_back(v);
  }
  return out;
}

// "e1=0.5,e2=1" into a map.
std::map<std::string, double> parse_assignments(const std::string& text, const char* what) {
  std::map<std::string, double> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto eq = part.find('=');
    std::size_t used = 0;
    double v = 0;
    if (eq != std::string::npos && eq > 0) {
      try {
        v = std::stod(part.substr(eq + 1), &used);
      } catch (const std::exception&) {
        used = 0;
      }
    }
    if (eq == std::string::npos || used == 0 || used != part.size() - eq - 1)
      throw CLI::ValidationError(what, "expected id=value, got '" + part + "'");
    out[part.substr(0, eq)] = v;
  }
  return out;
}

std::string text_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); })) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : ", ") + text_value(e);
    return s;
  }
  return v.dump();
}

// One aligned "key  value" row per top-level field.
void write_text(std::ostream& out, const Json& report) {
  std::size_t width = 0;
  for (const auto& [k, _] : report.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : report.items())
    out << std::left << std::setw(static_cast<int>(width)) << k << "  " << text_value(v) << "\n";
}

struct Output {
  bool text = false;
  void emit(std::ostream& out, const Json& report) const {
    if (text)
      write_text(out, report);
    else
      out << json_io::dump(report);
  }
};

template <EvaluationRing Ring>
Json value_json(const Ring& ring, const typename Ring::value_type& v) {
  (void)ring;
  if constexpr (std::is_same_v<Ring, PrimeField>)
    return v;
  else
    return json_io::scalar_to_json(v);
}

template <class Eval>
Json evaluate_any(const AnyAssignment& point, Eval&& eval) {
  return std::visit(
      [&](const auto& a) -> Json {
        return {{"ring", json_io::ring_to_json(point)}, {"value", value_json(a.ring(), eval(a))}};
      },
      point);
}

Json gadget_report(const std::vector<std::uint64_t>& set, const std::string& host, std::size_t n) {
  bool positive = false;
  std::size_t tree_size = 0;
  std::uint64_t total = 0;
  for (auto v : set) total += v;
  const bool degenerate = set.size() < 2 || total % 2 == 1;
  if (host == "binary") {
    positive = decide_half_partition(set);
    if (!degenerate) tree_size = build_partition_gadget(set).tree.vertex_count();
  } else {
    if (std::find(set.begin(), set.end(), 0) != set.end())
      throw InputError("set elements must be positive");
    if (degenerate) {
      positive = decide_half_partition(set);
    } else {
      const auto tree = minimal_one_plus_1_over_n_host(n, set.size());
      const auto gadget = build_partition_gadget_general(set, tree, "v1");
      positive = gadget_value(gadget) > 0;
      tree_size = gadget.tree.vertex_count();
    }
  }
  return {{"set", set}, {"value_positive", positive}, {"oracle", half_partition_exists(set)},
          {"tree_size", tree_size}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Potts partition functions with external field: V-polynomials, evaluators, point counts "
               "and banana-graph classes."};
  app.name("vpoly");
  app.require_subcommand(1);
  app.fallthrough();

  Output output;
  bool json_flag = false;
  auto* json_opt = app.add_flag("--json", json_flag, "Machine-readable JSON output (default)");
  app.add_flag("--text", output.text, "Aligned human-readable output")->excludes(json_opt);

  std::string graph_path, point_path, root = "v1", method, set_text, fit_text, validate_text;
  std::string host = "binary", j_text, m_text;
  std::uint64_t prime = 0, budget = CountOptions{}.budget;
  std::optional<std::uint64_t> at_prime;
  std::optional<std::size_t> degree_bound;
  std::size_t banana_m = 0, arity = 2;
  unsigned workers = 0;
  double beta = 1.0, default_j = 0.0, default_m = 0.0;
  bool no_field = false, euler = false, use_dc = false;

  auto add_graph = [&](CLI::App* sub) { sub->add_option("--graph", graph_path, "Graph JSON file")->required(); };
  auto add_point = [&](CLI::App* sub) { sub->add_option("--point", point_path, "Assignment JSON file")->required(); };
  auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", workers, "Worker threads (default: VPOLY_WORKERS or 1)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--budget", budget, "Maximum polynomial evaluations per prime");
  };

  auto* compute = app.add_subcommand("compute", "Expand the V-polynomial of a graph");
  add_graph(compute);
  compute->add_flag("--dc", use_dc, "Use deletion-contraction instead of the subset expansion");

  auto* eval = app.add_subcommand("eval", "Evaluate at a point by scalar deletion-contraction");
  add_graph(eval);
  add_point(eval);
  auto* eval_line_cmd = app.add_subcommand("eval-line", "Evaluate a line graph by dynamic programming");
  add_graph(eval_line_cmd);
  add_point(eval_line_cmd);
  auto* eval_cycle_cmd = app.add_subcommand("eval-cycle", "Evaluate a cycle graph by reduction to lines");
  add_graph(eval_cycle_cmd);
  add_point(eval_cycle_cmd);
  auto* eval_tree_cmd = app.add_subcommand("eval-tree", "Evaluate a tree by weight-indexed dynamic programming");
  add_graph(eval_tree_cmd);
  add_point(eval_tree_cmd);
  eval_tree_cmd->add_option("--root", root, "Root vertex id")->capture_default_str();

  auto* gadget = app.add_subcommand("gadget", "Build the half-partition tree gadget and evaluate it");
  gadget->add_option("--set", set_text, "Comma-separated positive integers")->required();
  gadget->add_option("--host", host, "Host tree family")->check(CLI::IsMember({"binary", "caterpillar"}))
      ->capture_default_str();
  gadget->add_option("--n", arity, "n of the (1 + 1/n)-ary caterpillar host")->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* partition = app.add_subcommand("partition", "Decide whether a multiset splits into equal halves");
  partition->add_option("--set", set_text, "Comma-separated positive integers")->required();

  auto* physical = app.add_subcommand("physical", "Physical partition function Z(beta, J, M)");
  add_graph(physical);
  physical->add_option("--beta", beta, "Inverse temperature")->capture_default_str();
  physical->add_option("--J", j_text, "Edge couplings, e.g. e1=0.5,e2=1");
  physical->add_option("--M", m_text, "Vertex field energies, e.g. v1=0.2");
  physical->add_option("--default-J", default_j, "Coupling for unlisted edges")->capture_default_str();
  physical->add_option("--default-M", default_m, "Field energy for unlisted vertices")->capture_default_str();

  auto* count = app.add_subcommand("count", "Count zeros of the V-polynomial over F_p");
  add_graph(count);
  count->add_option("--prime", prime, "Prime p")->required();
  count->add_option("--method", method, "brute or elim (default: elim when possible)")
      ->check(CLI::IsMember({"brute", "elim"}));
  add_workers(count);

  auto* countability = app.add_subcommand("countability", "Interpolate zero counts over several primes");
  add_graph(countability);
  countability->add_option("--fit", fit_text, "Fit primes, e.g. 2,3,5,7,11,13")->required();
  countability->add_option("--validate", validate_text, "Validation primes, e.g. 17,19");
  countability->add_option("--degree-bound", degree_bound, "Maximum accepted degree (default: #variables)");
  countability->add_option("--method", method, "brute or elim")->check(CLI::IsMember({"brute", "elim"}));
  add_workers(countability);

  auto* banana = app.add_subcommand("banana", "Class of the banana graph hypersurface complement");
  banana->add_option("--m", banana_m, "Number of extra parallel edges")->required();
  banana->add_flag("--no-field", no_field, "Use the comparison class without magnetic field");
  banana->add_flag("--euler", euler, "Report the Euler characteristic with compact support");
  banana->add_option("--at-prime", at_prime, "Report the predicted F_p point count");

  auto* selftest = app.add_subcommand("selftest", "Run the reproduction checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  try {
    Json report;
    if (compute->parsed()) {
      const auto g = json_io::graph_from_json(json_io::read_file(graph_path));
      const auto poly = use_dc ? dc_polynomial(g) : fk_polynomial(g);
      if (output.text) {
        out << poly.to_string() << "\n";
        return kOk;
      }
      Json vars = Json::array();
      for (const auto& v : variables_of(poly)) vars.push_back(v.to_string());
      report = {{"text", poly.to_string()}, {"polynomial", json_io::poly_to_json(poly)}, {"variables", vars}};
    } else if (eval->parsed() || eval_line_cmd->parsed() || eval_cycle_cmd->parsed() || eval_tree_cmd->parsed()) {
      const auto g = json_io::graph_from_json(json_io::read_file(graph_path));
      const auto point = json_io::assignment_from_json(json_io::read_file(point_path));
      report = evaluate_any(point, [&](const auto& a) {
        if (eval_line_cmd->parsed()) return eval_line(g, a);
        if (eval_cycle_cmd->parsed()) return eval_cycle(g, a);
        if (eval_tree_cmd->parsed()) return eval_tree(g, root, a);
        return eval_generic(g, a);
      });
    } else if (gadget->parsed()) {
      report = gadget_report(parse_list(set_text, "--set"), host, arity);
    } else if (partition->parsed()) {
      const auto set = parse_list(set_text, "--set");
      report = {{"set", set}, {"half_partition", decide_half_partition(set)}};
    } else if (physical->parsed()) {
      const auto g = json_io::graph_from_json(json_io::read_file(graph_path));
      PhysicalParams params;
      params.beta = beta;
      const auto j_given = parse_assignments(j_text, "--J");
      const auto m_given = parse_assignments(m_text, "--M");
      for (const auto& [id, _] : j_given)
        if (!g.has_edge(id)) throw InputError("--J names unknown edge " + id);
      for (const auto& [id, _] : m_given)
        if (!g.has_vertex(id)) throw InputError("--M names unknown vertex " + id);
      for (const auto& id : g.edge_ids()) params.coupling[id] = j_given.contains(id) ? j_given.at(id) : default_j;
      for (const auto& id : g.vertex_ids()) params.field[id] = m_given.contains(id) ? m_given.at(id) : default_m;
      const double direct = physical_partition_function(g, params);
      const double symbolic = physical_partition_function_symbolic(g, params);
      const double scale = std::max(std::abs(direct), std::abs(symbolic));
      report = {{"beta", beta},
                {"direct", direct},
                {"symbolic", symbolic},
                {"relative_difference", scale == 0 ? 0.0 : std::abs(direct - symbolic) / scale}};
    } else if (count->parsed() || countability->parsed()) {
      const auto g = json_io::graph_from_json(json_io::read_file(graph_path));
      const auto poly = fk_polynomial(g);
      CountOptions options;
      options.budget = budget;
      options.workers = workers;
      if (!method.empty()) options.method = parse_count_method(method);
      if (count->parsed()) {
        report = json_io::count_to_json(count_zeros(poly, variables_of(poly), prime, options));
      } else {
        report = json_io::countability_to_json(countability_test(
            poly, parse_list(fit_text, "--fit"), parse_list(validate_text, "--validate"), degree_bound, options));
      }
    } else if (banana->parsed()) {
      const auto c = no_field ? no_field_banana(banana_m) : banana_closed(banana_m);
      report = {{"m", banana_m}, {"magnetic_field", !no_field}, {"class", json_io::torus_to_json(c)}};
      if (euler) report["euler_char_c"] = euler_char_c(c).str();
      if (at_prime) report["point_count"] = class_to_count(c, *at_prime).str();
      if (output.text) {
        Json flat{{"m", banana_m}, {"class", c.to_string()}};
        if (euler) flat["euler_char_c"] = report["euler_char_c"];
        if (at_prime) flat["point_count"] = report["point_count"];
        report = flat;
      }
    } else if (selftest->parsed()) {
      const auto claims = run_selftest();
      bool all = true;
      Json rows = Json::array();
      for (const auto& c : claims) {
        all = all && c.passed;
        rows.push_back({{"claim", c.key}, {"passed", c.passed}, {"detail", c.detail}});
      }
      if (output.text) {
        std::size_t width = 0;
        for (const auto& c : claims) width = std::max(width, c.key.size());
        for (const auto& c : claims)
          out << std::left << std::setw(static_cast<int>(width)) << c.key << "  " << (c.passed ? "PASS" : "FAIL")
              << "  " << c.detail << "\n";
      } else {
        out << json_io::dump({{"claims", rows}, {"passed", all}});
      }
      return all ? kOk : kDomainError;
    }
    output.emit(out, report);
    return kOk;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace vpoly::cli
