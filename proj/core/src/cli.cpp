#include "artin/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>

#include "artin/classes.hpp"
#include "artin/io.hpp"
#include "artin/oracle.hpp"
#include "artin/splittings.hpp"
#include "artin/tits.hpp"
#include "json_util.hpp"

namespace artin {

namespace {

using nlohmann::json;

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(csv);
  while (std::getline(is, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string graph_header(const GraphDocument& doc) {
  std::ostringstream os;
  const std::string& name = doc.graph.graph_name();
  os << "graph: " << (name.empty() ? doc.source_path : name) << " ("
     << doc.graph.vertex_count() << " vertices, " << doc.graph.edge_count()
     << " edges)";
  return os.str();
}

std::string evidence_text(const PipRpEvidence& e) {
  if (!e.certified) return "unknown";
  if (e.rule == kRuleUserSuperset)
    return "certified (UserSuperset via " + e.superset_rule + ")";
  return "certified (" + e.rule + ")";
}

std::string names_joined(const PresentationGraph& g, const std::vector<int>& vs) {
  std::string out;
  for (int v : vs) {
    if (!out.empty()) out += ' ';
    out += g.name_of(v);
  }
  return out;
}

void print_verdict_text(const PresentationGraph& g, const AcylindricityVerdict& v,
                        const std::string& pad, std::ostream& out) {
  if (v.criterion.holds) {
    out << pad << "criterion: holds -- N(X\\Z) = "
        << set_to_string(g, v.criterion.side_x_neighbourhood)
        << ", N(Y\\Z) = " << set_to_string(g, v.criterion.side_y_neighbourhood)
        << "\n";
  } else {
    out << pad << "criterion: fails -- witness ("
        << g.name_of(v.criterion.witness->first) << ", "
        << g.name_of(v.criterion.witness->second)
        << "), odd path: " << names_joined(g, v.criterion.path) << "\n";
  }
  out << pad << "hypothesis X: " << evidence_text(v.hypothesis_x)
      << "; hypothesis Y: " << evidence_text(v.hypothesis_y) << "\n";
  out << pad << "verdict: " << verdict_to_string(v.verdict);
  if (v.verdict == Verdict::Acylindrical)
    out << " (k = " << AcylindricityVerdict::kPathLength
        << ", C = " << AcylindricityVerdict::kStabiliserBound << ")";
  out << "\n";
  if (v.witness)
    out << pad << "witness word: " << v.witness->to_string() << "\n";
}

json classify_to_json(const PresentationGraph& g, const ClassReport& r) {
  json classes;
  auto edge_flag = [&](const EdgeFlag& f) {
    json j{{"value", f.value}};
    if (f.witness)
      j["witness"] = {{"edge", {f.witness->u, f.witness->v}}, {"m", f.witness->m}};
    return j;
  };
  classes["right_angled"] = edge_flag(r.right_angled);
  classes["even"] = edge_flag(r.even);
  classes["large_type"] = edge_flag(r.large_type);
  {
    json j{{"value", r.two_two_free.value}};
    if (r.two_two_free.witness)
      j["witness"] = {{"vertex", r.two_two_free.witness->vertex},
                      {"two_edges_to",
                       {r.two_two_free.witness->first_neighbour,
                        r.two_two_free.witness->second_neighbour}}};
    classes["two_two_free"] = j;
  }
  {
    json j{{"value", r.two_dimensional.value}};
    if (r.two_dimensional.witness)
      j["witness"] = {{"spherical_triple",
                       set_to_names(g, *r.two_dimensional.witness)}};
    classes["two_dimensional"] = j;
  }
  {
    json j{{"value", r.fc_type.value}};
    if (r.fc_type.witness)
      j["witness"] = {{"non_spherical_clique", set_to_names(g, *r.fc_type.witness)}};
    classes["fc_type"] = j;
  }
  {
    json j{{"value", r.spherical}};
    if (r.non_spherical_component)
      j["witness"] = {{"non_spherical_component",
                       set_to_names(g, *r.non_spherical_component)}};
    classes["spherical"] = j;
  }
  {
    json j{{"value", r.reducible}};
    json comps = json::array();
    for (const auto& comp : r.irreducible_components)
      comps.push_back(set_to_names(g, comp));
    j["irreducible_components"] = std::move(comps);
    classes["reducible"] = j;
  }
  return json{{"graph", detail::graph_to_json(g)}, {"classes", classes}};
}

void print_classify_text(const PresentationGraph& g, const ClassReport& r,
                         std::ostream& out) {
  auto yesno = [](bool b) { return b ? "yes" : "no"; };
  auto edge_note = [&](const EdgeFlag& f) {
    if (f.value) return std::string();
    return "   (edge {" + f.witness->u + ", " + f.witness->v + "} has label " +
           std::to_string(f.witness->m) + ")";
  };
  out << "right-angled:  " << yesno(r.right_angled.value)
      << edge_note(r.right_angled) << "\n";
  out << "even:          " << yesno(r.even.value) << edge_note(r.even) << "\n";
  out << "large-type:    " << yesno(r.large_type.value)
      << edge_note(r.large_type) << "\n";
  out << "(2,2)-free:    " << yesno(r.two_two_free.value);
  if (!r.two_two_free.value)
    out << "   (vertex " << r.two_two_free.witness->vertex << " has 2-edges to "
        << r.two_two_free.witness->first_neighbour << " and "
        << r.two_two_free.witness->second_neighbour << ")";
  out << "\n";
  out << "2-dimensional: " << yesno(r.two_dimensional.value);
  if (!r.two_dimensional.value)
    out << "   (spherical triple " << set_to_string(g, *r.two_dimensional.witness)
        << ")";
  out << "\n";
  out << "FC-type:       " << yesno(r.fc_type.value);
  if (!r.fc_type.value)
    out << "   (non-spherical clique " << set_to_string(g, *r.fc_type.witness)
        << ")";
  out << "\n";
  out << "spherical:     " << yesno(r.spherical);
  if (!r.spherical)
    out << "   (non-spherical component "
        << set_to_string(g, *r.non_spherical_component) << ")";
  out << "\n";
  out << "reducible:     " << yesno(r.reducible) << "   ("
      << r.irreducible_components.size() << " irreducible component"
      << (r.irreducible_components.size() == 1 ? "" : "s") << ")\n";
}

void write_output(const std::string& text, const std::string& out_path,
                  std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw input_error("cannot write \"" + out_path + "\"");
  file << text;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"visual splittings of Artin groups: acylindricity criteria and "
               "strong Tits alternative certificates",
               "artin"};
  app.require_subcommand(1);

  // classify
  std::string classify_path;
  bool classify_json = false;
  auto* classify_cmd = app.add_subcommand("classify", "class predicates with witnesses");
  classify_cmd->add_option("graph", classify_path, "graph file")->required();
  classify_cmd->add_flag("--json", classify_json, "JSON output");

  // splittings
  std::string splittings_path, splittings_mode = "all";
  bool splittings_json = false;
  int splittings_cap = kDefaultSplittingCap;
  auto* splittings_cmd =
      app.add_subcommand("splittings", "enumerate visual splittings with verdicts");
  splittings_cmd->add_option("graph", splittings_path, "graph file")->required();
  splittings_cmd->add_option("--mode", splittings_mode, "all | pairs")
      ->check(CLI::IsMember({"all", "pairs"}));
  splittings_cmd->add_option("--cap", splittings_cap,
                             "vertex cap for mode=all enumeration");
  splittings_cmd->add_flag("--json", splittings_json, "JSON output");

  // check
  std::string check_path, check_x, check_y, check_x_superset, check_y_superset;
  bool check_json = false;
  auto* check_cmd = app.add_subcommand("check", "verdict for one visual splitting");
  check_cmd->add_option("graph", check_path, "graph file")->required();
  check_cmd->add_option("--x", check_x, "comma-separated vertices of X")->required();
  check_cmd->add_option("--y", check_y, "comma-separated vertices of Y")->required();
  check_cmd->add_option("--x-superset", check_x_superset,
                        "graph file containing X's side as an induced subgraph");
  check_cmd->add_option("--y-superset", check_y_superset,
                        "graph file containing Y's side as an induced subgraph");
  check_cmd->add_flag("--json", check_json, "JSON output");

  // certify-tits
  std::string tits_path, tits_bases;
  bool tits_json = false;
  int tits_depth = 64, tits_cap = kDefaultSplittingCap;
  auto* tits_cmd =
      app.add_subcommand("certify-tits", "recursive strong Tits alternative certificate");
  tits_cmd->add_option("graph", tits_path, "graph file")->required();
  tits_cmd->add_option("--bases", tits_bases,
                       "comma-separated base classes (default "
                       "Spherical,FCType,TwoDimensional,LargeType)");
  tits_cmd->add_option("--max-depth", tits_depth, "recursion depth limit");
  tits_cmd->add_option("--cap", tits_cap, "vertex cap for full splitting enumeration");
  tits_cmd->add_flag("--json", tits_json, "JSON output");

  // export-dot
  std::string dot_path, dot_out;
  bool dot_highlight = false;
  auto* dot_cmd = app.add_subcommand("export-dot", "DOT export with edge labels");
  dot_cmd->add_option("graph", dot_path, "graph file")->required();
  dot_cmd->add_flag("--highlight-odd", dot_highlight, "mark odd-labelled edges");
  dot_cmd->add_option("-o,--output", dot_out, "output file (default stdout)");

  // coxeter-order (oracle surface, hidden from help)
  std::string order_path;
  std::size_t order_cap = oracle::kDefaultEnumerationCap;
  auto* order_cmd = app.add_subcommand(
      "coxeter-order", "enumerate the Coxeter quotient in the reflection representation");
  order_cmd->add_option("graph", order_path, "graph file")->required();
  order_cmd->add_option("--cap", order_cap, "element cap");
  order_cmd->group("");

  std::vector<const char*> argv;
  argv.push_back("artin");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(classify_cmd)) {
      const GraphDocument doc = load_graph_file(classify_path);
      const ClassReport report = classify(doc.graph);
      if (classify_json) {
        out << detail::dump(classify_to_json(doc.graph, report));
      } else {
        out << graph_header(doc) << "\n";
        print_classify_text(doc.graph, report, out);
      }
      return 0;
    }

    if (app.got_subcommand(splittings_cmd)) {
      const GraphDocument doc = load_graph_file(splittings_path);
      const auto mode = splittings_mode == "pairs" ? SplittingMode::VertexPairs
                                                   : SplittingMode::All;
      const auto list = enumerate_splittings(doc.graph, mode, splittings_cap);
      if (splittings_json) {
        json j;
        j["graph"] = detail::graph_to_json(doc.graph);
        j["mode"] = splittings_mode;
        json items = json::array();
        for (const auto& s : list) {
          const auto verdict = theorem_verdict(doc.graph, s);
          items.push_back({{"splitting", detail::splitting_to_json(doc.graph, s)},
                           {"verdict", detail::verdict_to_json(doc.graph, verdict)}});
        }
        j["splittings"] = std::move(items);
        out << detail::dump(j);
      } else {
        out << graph_header(doc) << "\n";
        out << list.size() << " visual splitting" << (list.size() == 1 ? "" : "s")
            << " (mode " << splittings_mode << ")\n";
        int index = 0;
        for (const auto& s : list) {
          const auto verdict = theorem_verdict(doc.graph, s);
          out << "\n[" << ++index << "] X = " << set_to_string(doc.graph, s.x)
              << ", Y = " << set_to_string(doc.graph, s.y)
              << ", Z = " << set_to_string(doc.graph, s.z) << "\n";
          print_verdict_text(doc.graph, verdict, "    ", out);
        }
      }
      return 0;
    }

    if (app.got_subcommand(check_cmd)) {
      const GraphDocument doc = load_graph_file(check_path);
      const VertexSet x = VertexSet::of(doc.graph, split_csv(check_x));
      const VertexSet y = VertexSet::of(doc.graph, split_csv(check_y));
      const auto checked = validate_splitting(doc.graph, x, y);
      if (const auto* violation = std::get_if<SplittingViolation>(&checked)) {
        err << "error: " << violation->message() << "\n";
        return 1;
      }
      const auto& s = std::get<VisualSplitting>(checked);
      SupersetPair supersets;
      if (!check_x_superset.empty())
        supersets.for_x = load_graph_file(check_x_superset).graph;
      if (!check_y_superset.empty())
        supersets.for_y = load_graph_file(check_y_superset).graph;
      const auto verdict =
          theorem_verdict(doc.graph, s, PipRpRegistry::defaults(), supersets);
      if (check_json) {
        json j;
        j["graph"] = detail::graph_to_json(doc.graph);
        j["splitting"] = detail::splitting_to_json(doc.graph, s);
        j["verdict"] = detail::verdict_to_json(doc.graph, verdict);
        out << detail::dump(j);
      } else {
        out << graph_header(doc) << "\n";
        out << "splitting: X = " << set_to_string(doc.graph, s.x)
            << ", Y = " << set_to_string(doc.graph, s.y)
            << ", Z = " << set_to_string(doc.graph, s.z) << "\n";
        print_verdict_text(doc.graph, verdict, "", out);
      }
      return 0;
    }

    if (app.got_subcommand(tits_cmd)) {
      const GraphDocument doc = load_graph_file(tits_path);
      const BaseClassRegistry registry =
          tits_bases.empty() ? BaseClassRegistry::defaults()
                             : BaseClassRegistry::from_tags(split_csv(tits_bases));
      CertifyOptions options;
      options.max_depth = tits_depth;
      options.split_cap = tits_cap;
      const TitsCertificate cert = certify(doc.graph, registry, options);
      out << render_certificate(cert, tits_json ? CertificateFormat::Json
                                                : CertificateFormat::Text);
      return 0;
    }

    if (app.got_subcommand(dot_cmd)) {
      const GraphDocument doc = load_graph_file(dot_path);
      write_output(render_dot(doc.graph, dot_highlight), dot_out, out);
      return 0;
    }

    if (app.got_subcommand(order_cmd)) {
      const GraphDocument doc = load_graph_file(order_path);
      const auto table = oracle::enumerate_coxeter(
          coxeter_matrix(doc.graph, doc.graph.all_vertices()), order_cap);
      if (const auto* cap = std::get_if<oracle::CapExceeded>(&table))
        out << "cap exceeded (" << cap->cap << " elements)\n";
      else
        out << "order: " << std::get<oracle::CoxeterElementTable>(table).order()
            << "\n";
      return 0;
    }
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }

  err << "error: no subcommand selected\n";
  return 1;
}

} // namespace artin
