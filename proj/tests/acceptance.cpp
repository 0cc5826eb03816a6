// Acceptance suite: reproduces the worked examples exactly and runs the
// cross-validation sweeps, one pass/fail line per criterion, each with
// its pinned time budget.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "artin/cli.hpp"
#include "artin/corpus.hpp"
#include "artin/io.hpp"
#include "artin/oracle.hpp"
#include "artin/splittings.hpp"
#include "artin/tits.hpp"
#include "test_util.hpp"

using namespace artin;
using namespace artin::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
  void note(const std::string& text) { detail << " " << text; }
};

std::string corpus_path(const std::string& name) {
  return std::string(ARTIN_CORPUS_DIR) + "/" + name;
}

// ---- criterion 1: the path (2,3) worked example -------------------------

void criterion_example_3_4(Outcome& r) {
  const auto g = corpus::example3_4();
  const auto all = enumerate_splittings(g, SplittingMode::All);
  r.expect(all.size() == 1, "exactly one splitting");
  if (all.size() != 1) return;

  const auto verdict = theorem_verdict(g, all[0]);
  r.expect(verdict.verdict == Verdict::NotAcylindrical, "verdict not-acylindrical");
  r.expect(verdict.criterion.witness.has_value() &&
               g.name_of(verdict.criterion.witness->first) == "b" &&
               g.name_of(verdict.criterion.witness->second) == "b",
           "witness pair (b, b)");
  r.expect(verdict.witness && verdict.witness->to_string() == "c b c c b c a",
           "witness word c b c c b c a");
  r.expect(pair_criterion(g).empty(), "pair criterion empty");

  std::ostringstream out, err;
  const int code =
      run_cli({"splittings", corpus_path("example3_4.txt"), "--mode", "all"}, out, err);
  r.expect(code == 0, "cli exit 0");
  r.expect(out.str().find("1 visual splitting (mode all)") != std::string::npos,
           "cli emits one splitting");
  r.expect(out.str().find("witness word: c b c c b c a") != std::string::npos,
           "cli emits the witness word");
  r.note("1 splitting, word reproduced");
}

// ---- criterion 2: the 12-edge union graph --------------------------------

void criterion_union_graph(Outcome& r) {
  const auto g = corpus::figure3_union();
  const auto x = VertexSet::of(g, {"a", "b", "c", "e", "f", "g"});
  const auto y = VertexSet::of(g, {"b", "c", "d", "f", "g", "h"});
  const auto checked = validate_splitting(g, x, y);
  r.expect(std::holds_alternative<VisualSplitting>(checked), "splitting validates");
  if (!std::holds_alternative<VisualSplitting>(checked)) return;
  const auto& s = std::get<VisualSplitting>(checked);
  r.expect(set_to_names(g, s.z) == std::vector<std::string>{"b", "c", "f", "g"},
           "Z = {b, c, f, g}");

  const auto c = criterion(g, s);
  r.expect(c.holds, "criterion holds");
  r.expect(set_to_names(g, c.side_x_neighbourhood) ==
               std::vector<std::string>{"a", "b", "e", "f"},
           "N(X\\Z) = {a, b, e, f}");
  r.expect(set_to_names(g, c.side_y_neighbourhood) ==
               std::vector<std::string>{"c", "d", "g", "h"},
           "N(Y\\Z) = {c, d, g, h}");
  r.expect(!c.side_x_neighbourhood.intersects(c.side_y_neighbourhood),
           "neighbourhoods disjoint");

  const auto odd = odd_components(g);
  r.expect(odd.class_count() == 5, "five odd classes");
  r.expect(odd.class_set(g.require_vertex("c")) ==
               VertexSet::of(g, {"c", "d", "g", "h"}),
           "odd class {c, d, g, h}");

  const auto verdict = theorem_verdict(g, s);
  r.expect(verdict.hypothesis_x.certified && verdict.hypothesis_x.rule == kRuleEvenFc,
           "X side certified EvenFC");
  r.expect(verdict.hypothesis_y.certified &&
               verdict.hypothesis_y.rule == kRuleTwoDimTwoTwoFree,
           "Y side certified TwoDimTwoTwoFree");
  r.expect(verdict.verdict == Verdict::Acylindrical, "verdict acylindrical");
  r.expect(AcylindricityVerdict::kPathLength == 3 &&
               AcylindricityVerdict::kStabiliserBound == 1,
           "(k, C) = (3, 1)");

  const auto cert = certify(g);
  r.expect(cert.complete() && cert.depth() == 1, "complete depth-1 certificate");
  r.expect(cert.status == TitsCertificate::Status::Split &&
               cert.splitting.has_value() && *cert.splitting == s,
           "certificate splits at the flagship splitting");
  r.note("flagship splitting certified");
}

// ---- criterion 3: the printed 13-edge variant ----------------------------

void criterion_printed_figure(Outcome& r) {
  const auto g = corpus::figure2_as_printed();
  r.expect(g.edge_count() == 13, "13 edges as printed");
  const auto checked =
      validate_splitting(g, VertexSet::of(g, {"a", "b", "c", "e", "f", "g"}),
                         VertexSet::of(g, {"b", "c", "d", "f", "g", "h"}));
  r.expect(std::holds_alternative<SplittingViolation>(checked), "validation fails");
  if (!std::holds_alternative<SplittingViolation>(checked)) return;
  const auto& v = std::get<SplittingViolation>(checked);
  r.expect(v.kind == SplittingViolation::Kind::SeparationFailure, "separation failure");
  r.expect(v.crossing_edge == std::make_pair(std::string("e"), std::string("h")),
           "crossing edge (e, h)");
  r.note("separation failure with witness (e, h)");
}

// ---- criterion 4: even/diameter corollary on random graphs ---------------

void criterion_even_diameter(Outcome& r) {
  std::mt19937 rng(402653189);
  const std::vector<Label> labels{2, 4, 6};
  int checked = 0, discrepancies = 0;
  const double probabilities[] = {0.25, 0.4, 0.55, 0.7, 0.85};
  while (checked < 600) {
    const int n = 2 + checked % 6; // 2..7
    const auto g = random_graph(rng, n, labels,
                                probabilities[static_cast<std::size_t>(checked) % 5]);
    const bool pairs = !pair_criterion(g).empty();
    const bool dia = even_diameter_criterion(g);
    if (pairs != dia) ++discrepancies;
    ++checked;
  }
  r.expect(discrepancies == 0, "pair criterion <=> diameter >= 3");
  r.note(std::to_string(checked) + " even graphs, " + std::to_string(discrepancies) +
         " discrepancies");
}

// ---- criterion 5: right-angled consistency, exhaustive -------------------

void criterion_right_angled(Outcome& r) {
  int connected_graphs = 0, discrepancies = 0;
  for (int n = 1; n <= 6; ++n) {
    for_each_topology(n, {2}, [&](const PresentationGraph& g) {
      if (connected_components(g).class_count() != 1) return;
      ++connected_graphs;
      const bool pairs = !pair_criterion(g).empty();
      const bool dia = diameter_at_least(g, 3);
      if (pairs != dia) ++discrepancies;
    });
  }
  r.expect(discrepancies == 0, "pair criterion <=> diameter >= 3");
  r.note(std::to_string(connected_graphs) + " connected right-angled graphs, " +
         std::to_string(discrepancies) + " discrepancies");
}

// ---- criterion 6: sphericity recognizer vs Gram oracle -------------------

void criterion_sphericity(Outcome& r) {
  long long checked = 0, discrepancies = 0;

  auto compare = [&](const PresentationGraph& g) {
    const bool recognized = is_spherical(g, g.all_vertices());
    const bool gram =
        oracle::gram_positive_definite(coxeter_matrix(g, g.all_vertices()));
    if (recognized != gram) ++discrepancies;
    ++checked;
  };

  // exhaustive on <= 4 vertices over labels {2,...,7} and absent
  for (int n = 1; n <= 4; ++n) {
    const auto slots = edge_slots(n);
    std::vector<int> choice(slots.size(), 0);
    for (;;) {
      std::vector<PresentationGraph::NamedEdge> edges;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (choice[s] > 0)
          edges.push_back({letter(slots[s].first), letter(slots[s].second),
                           choice[s] + 1});
      compare(PresentationGraph(letters(n), edges));
      std::size_t pos = 0;
      while (pos < slots.size() && ++choice[pos] > 6) choice[pos++] = 0;
      if (pos == slots.size()) break;
    }
  }
  const long long exhaustive = checked;

  std::mt19937 rng(271828183);
  for (int round = 0; round < 1200; ++round) {
    const int n = 5 + round % 3;
    compare(random_graph(rng, n, {2, 3, 4, 5, 6, 7}));
  }
  r.expect(discrepancies == 0, "recognizer == Gram oracle");
  r.note(std::to_string(exhaustive) + " exhaustive + " +
         std::to_string(checked - exhaustive) + " random graphs, " +
         std::to_string(discrepancies) + " discrepancies");
}

// ---- criterion 7: conjugacy oracle ----------------------------------------

void criterion_conjugacy(Outcome& r) {
  struct Instance {
    std::string name;
    PresentationGraph graph;
    std::size_t order;
  };
  std::vector<Instance> instances;
  instances.push_back({"A3",
                       PresentationGraph({"a", "b", "c"},
                                         {{"a", "b", 3}, {"b", "c", 3}, {"a", "c", 2}}),
                       24});
  instances.push_back({"B3",
                       PresentationGraph({"a", "b", "c"},
                                         {{"a", "b", 4}, {"b", "c", 3}, {"a", "c", 2}}),
                       48});
  instances.push_back({"H3",
                       PresentationGraph({"a", "b", "c"},
                                         {{"a", "b", 5}, {"b", "c", 3}, {"a", "c", 2}}),
                       120});
  for (int m = 3; m <= 12; ++m)
    instances.push_back({"I2(" + std::to_string(m) + ")",
                         PresentationGraph({"a", "b"}, {{"a", "b", m}}),
                         2 * static_cast<std::size_t>(m)});

  int discrepancies = 0;
  for (const auto& inst : instances) {
    const auto enumerated =
        oracle::enumerate_coxeter(coxeter_matrix(inst.graph, inst.graph.all_vertices()));
    if (!std::holds_alternative<oracle::CoxeterElementTable>(enumerated)) {
      r.expect(false, inst.name + " enumerates");
      continue;
    }
    const auto& table = std::get<oracle::CoxeterElementTable>(enumerated);
    r.expect(table.order() == inst.order,
             inst.name + " order " + std::to_string(inst.order) + " (got " +
                 std::to_string(table.order()) + ")");
    const auto odd = odd_components(inst.graph);
    for (int s = 0; s < inst.graph.vertex_count(); ++s)
      for (int t = 0; t < inst.graph.vertex_count(); ++t)
        if (oracle::generators_conjugate_bruteforce(table, s, t) != odd.same_class(s, t))
          ++discrepancies;
  }
  r.expect(discrepancies == 0, "conjugacy == odd components");
  r.note(std::to_string(instances.size()) + " groups, " +
         std::to_string(discrepancies) + " discrepancies");
}

// ---- criterion 8: enumeration oracles -------------------------------------

void criterion_enumeration_oracles(Outcome& r) {
  int splitting_graphs = 0, splitting_mismatches = 0;
  int join_cases = 0, join_mismatches = 0;
  std::mt19937 rng(314159265);

  auto check_splittings = [&](const PresentationGraph& g) {
    if (enumerate_splittings(g, SplittingMode::All) !=
        oracle::brute_force_splittings(g))
      ++splitting_mismatches;
    ++splitting_graphs;
  };
  auto check_join = [&](const PresentationGraph& g) {
    const int n = g.vertex_count();
    for (int round = 0; round < 4; ++round) {
      const auto a = random_subset(rng, n);
      const auto b = random_subset(rng, n);
      if (joined_by_odd_path(g, a, b).has_value() !=
          oracle::brute_force_odd_join(g, a, b))
        ++join_mismatches;
      ++join_cases;
    }
    if (joined_by_odd_path(g, g.all_vertices(), g.all_vertices()).has_value() !=
        oracle::brute_force_odd_join(g, g.all_vertices(), g.all_vertices()))
      ++join_mismatches;
    ++join_cases;
  };

  for (int n = 1; n <= 4; ++n)
    for_each_topology(n, {2, 3, 4, 5, 6}, [&](const PresentationGraph& g) {
      check_splittings(g);
      check_join(g);
    });
  for (int round = 0; round < 400; ++round) {
    const int n = 5 + round % 2; // 5, 6
    const auto g = random_graph(rng, n, {2, 3, 4, 5});
    check_splittings(g);
    check_join(g);
  }
  for (int round = 0; round < 200; ++round) {
    const auto g = random_graph(rng, 7, {2, 3, 4, 5});
    check_join(g);
  }

  r.expect(splitting_mismatches == 0, "enumerate_splittings == brute force");
  r.expect(join_mismatches == 0, "odd join == brute-force paths");
  r.note(std::to_string(splitting_graphs) + " graphs for splittings, " +
         std::to_string(join_cases) + " join cases, " +
         std::to_string(splitting_mismatches + join_mismatches) + " mismatches");
}

// ---- criterion 9: certificates and witness words re-validate --------------

bool word_identities_hold(const PresentationGraph& g, const WitnessWord& w) {
  // flattened structure g^-1 zy g zx
  Word expect;
  for (auto it = w.conjugator.rbegin(); it != w.conjugator.rend(); ++it)
    expect.push_back({it->generator, !it->inverse});
  expect.insert(expect.end(), w.z_y.begin(), w.z_y.end());
  expect.insert(expect.end(), w.conjugator.begin(), w.conjugator.end());
  expect.insert(expect.end(), w.z_x.begin(), w.z_x.end());
  if (w.word() != expect) return false;

  // literal dihedral identity on every odd path edge
  for (std::size_t i = 1; i < w.path.size(); ++i) {
    const int u = g.require_vertex(w.path[i - 1]);
    const int v = g.require_vertex(w.path[i]);
    const auto m = g.edge_label(u, v);
    if (!m || *m % 2 == 0) return false;
    Word lhs = alternating_word(w.path[i], w.path[i - 1], *m);
    lhs.push_back({w.path[i - 1], false});
    Word rhs = alternating_word(w.path[i - 1], w.path[i], *m);
    rhs.insert(rhs.begin(), {w.path[i], false});
    if (lhs != rhs) return false;
  }
  return true;
}

void criterion_revalidation(Outcome& r) {
  std::vector<PresentationGraph> graphs{
      corpus::example3_4(),   corpus::figure3_union(), corpus::figure2_as_printed(),
      corpus::complete(4, 2), corpus::discrete(3),     corpus::path(4, 2),
      corpus::cycle(5, 3),    corpus::path(5, std::vector<Label>{2, 3, 4, 2})};
  std::mt19937 rng(161803398);
  for (int round = 0; round < 150; ++round)
    graphs.push_back(random_graph(rng, 2 + round % 5, {2, 3, 4, 5}));

  int complete_certs = 0, cert_failures = 0;
  int words = 0, word_failures = 0;
  for (const auto& g : graphs) {
    const auto cert = certify(g);
    if (cert.complete()) {
      ++complete_certs;
      if (!check_certificate(cert).ok) ++cert_failures;
    }
    for (const auto& s : enumerate_splittings(g, SplittingMode::All)) {
      const auto c = criterion(g, s);
      if (c.holds) continue;
      const auto w = witness_word(g, s, c);
      ++words;
      if (!word_identities_hold(g, w)) ++word_failures;
    }
  }
  r.expect(cert_failures == 0, "complete certificates re-validate");
  r.expect(word_failures == 0, "witness words pass their string identities");
  r.expect(complete_certs > 100, "sweep produced complete certificates");
  r.expect(words > 200, "sweep produced witness words");
  r.note(std::to_string(complete_certs) + " complete certificates, " +
         std::to_string(words) + " witness words, " +
         std::to_string(cert_failures + word_failures) + " failures");
}

} // namespace

int main() {
  struct Criterion {
    int id;
    std::string label;
    double budget_seconds;
    std::function<void(Outcome&)> body;
  };
  const std::vector<Criterion> criteria{
      {1, "path (2,3) reproduction: one splitting, word c b c c b c a", 1.0,
       criterion_example_3_4},
      {2, "union graph reproduction: (3,1)-acylindrical, depth-1 certificate", 1.0,
       criterion_union_graph},
      {3, "printed 13-edge variant: separation failure with witness (e, h)", 1.0,
       criterion_printed_figure},
      {4, "even/diameter corollary on 600 random even graphs", 30.0,
       criterion_even_diameter},
      {5, "right-angled consistency over all connected topologies <= 6", 60.0,
       criterion_right_angled},
      {6, "sphericity recognizer vs Gram oracle", 300.0, criterion_sphericity},
      {7, "Coxeter conjugacy oracle: A3, B3, H3, I2(3..12)", 60.0,
       criterion_conjugacy},
      {8, "enumeration oracles: splittings and odd joins", 120.0,
       criterion_enumeration_oracles},
      {9, "certificate and witness-word re-validation", 120.0, criterion_revalidation},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    criterion.body(outcome);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > criterion.budget_seconds) {
      outcome.ok = false;
      outcome.detail << " [over budget " << criterion.budget_seconds << " s]";
    }
    std::ostringstream line;
    line << (outcome.ok ? "PASS" : "FAIL") << " criterion " << criterion.id << ": "
         << criterion.label << " --" << outcome.detail.str() << " ("
         << std::fixed << std::setprecision(2) << elapsed << " s, budget "
         << criterion.budget_seconds << " s)";
    std::cout << line.str() << std::endl;
    if (!outcome.ok) ++failures;
  }
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all 9 acceptance criteria passed" << std::endl;
  return 0;
}
