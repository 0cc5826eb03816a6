#include "artin/classes.hpp"

#include <algorithm>

namespace artin {

namespace {

EdgeWitness make_edge_witness(const PresentationGraph& g,
                              const PresentationGraph::Edge& e) {
  return EdgeWitness{g.name_of(e.u), g.name_of(e.v), e.m};
}

// Bron-Kerbosch with pivoting; reports maximal cliques in a
// deterministic order.
void bron_kerbosch(const PresentationGraph& g, VertexSet r, VertexSet p,
                   VertexSet x, std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  int pivot = -1, best = -1;
  (p | x).for_each([&](int u) {
    const int deg = (g.adjacent(u) & p).count();
    if (deg > best) {
      best = deg;
      pivot = u;
    }
  });
  const VertexSet candidates = p - g.adjacent(pivot);
  for (int v : candidates.elements()) {
    VertexSet r2 = r;
    r2.insert(v);
    bron_kerbosch(g, r2, p & g.adjacent(v), x & g.adjacent(v), out);
    p.erase(v);
    x.insert(v);
  }
}

} // namespace

EdgeFlag is_right_angled(const PresentationGraph& g) {
  for (const auto& e : g.edges())
    if (e.m != 2) return {false, make_edge_witness(g, e)};
  return {true, std::nullopt};
}

EdgeFlag is_even(const PresentationGraph& g) {
  for (const auto& e : g.edges())
    if (e.m % 2 == 1) return {false, make_edge_witness(g, e)};
  return {true, std::nullopt};
}

EdgeFlag is_large_type(const PresentationGraph& g) {
  for (const auto& e : g.edges())
    if (e.m < 3) return {false, make_edge_witness(g, e)};
  return {true, std::nullopt};
}

TwoTwoFlag is_two_two_free(const PresentationGraph& g) {
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v) {
    std::vector<int> twos;
    g.adjacent(v).for_each([&](int u) {
      if (*g.edge_label(u, v) == 2) twos.push_back(u);
    });
    if (twos.size() >= 2)
      return {false, TwoTwoWitness{g.name_of(v), g.name_of(twos[0]),
                                   g.name_of(twos[1])}};
  }
  return {true, std::nullopt};
}

SubsetFlag is_two_dimensional(const PresentationGraph& g) {
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        VertexSet triple(n);
        triple.insert(a);
        triple.insert(b);
        triple.insert(c);
        if (is_spherical(g, triple)) return {false, triple};
      }
  return {true, std::nullopt};
}

SubsetFlag is_fc_type(const PresentationGraph& g) {
  std::vector<VertexSet> cliques;
  bron_kerbosch(g, VertexSet(g.vertex_count()), g.all_vertices(),
                VertexSet(g.vertex_count()), cliques);
  std::sort(cliques.begin(), cliques.end());
  for (const auto& clique : cliques)
    if (!is_spherical(g, clique)) return {false, clique};
  return {true, std::nullopt};
}

ClassReport classify(const PresentationGraph& g) {
  ClassReport report;
  report.right_angled = is_right_angled(g);
  report.even = is_even(g);
  report.large_type = is_large_type(g);
  report.two_two_free = is_two_two_free(g);
  report.two_dimensional = is_two_dimensional(g);
  report.fc_type = is_fc_type(g);

  const auto sph = sphericity_partition(g, g.all_vertices());
  report.spherical = true;
  for (const auto& comp : sph.components) {
    if (!comp.spherical()) {
      report.spherical = false;
      report.non_spherical_component = comp.vertices;
      break;
    }
  }
  for (const auto& comp : sph.components)
    report.irreducible_components.push_back(comp.vertices);
  report.reducible = sph.components.size() > 1;
  return report;
}

// ---- PIP/RP ------------------------------------------------------------

PipRpRegistry PipRpRegistry::defaults() {
  PipRpRegistry reg;
  reg.rules.push_back(
      {kRuleSpherical, "spherical",
       [](const PresentationGraph& g) { return is_spherical(g, g.all_vertices()); }});
  reg.rules.push_back({kRuleEvenFc, "even and FC-type",
                       [](const PresentationGraph& g) {
                         return is_even(g).value && is_fc_type(g).value;
                       }});
  reg.rules.push_back({kRuleTwoDimTwoTwoFree, "2-dimensional and (2,2)-free",
                       [](const PresentationGraph& g) {
                         return is_two_dimensional(g).value &&
                                is_two_two_free(g).value;
                       }});
  return reg;
}

const PipRpRule* PipRpRegistry::find(const std::string& id) const {
  for (const auto& rule : rules)
    if (rule.id == id) return &rule;
  return nullptr;
}

std::optional<std::vector<int>> induced_embedding(const PresentationGraph& g,
                                                  const PresentationGraph& h) {
  const int n = g.vertex_count();
  const int m = h.vertex_count();
  if (n > m) return std::nullopt;

  std::vector<int> map(n, -1);
  std::vector<bool> used(m, false);

  auto compatible = [&](int gv, int hv) {
    for (int prev = 0; prev < gv; ++prev) {
      const auto lg = g.edge_label(prev, gv);
      const auto lh = h.edge_label(map[prev], hv);
      if (lg != lh) return false;
    }
    return true;
  };

  std::function<bool(int)> extend = [&](int gv) {
    if (gv == n) return true;
    for (int hv = 0; hv < m; ++hv) {
      if (used[hv] || !compatible(gv, hv)) continue;
      map[gv] = hv;
      used[hv] = true;
      if (extend(gv + 1)) return true;
      used[hv] = false;
      map[gv] = -1;
    }
    return false;
  };

  if (!extend(0)) return std::nullopt;
  return map;
}

PipRpEvidence pip_rp_certificate(const PresentationGraph& g,
                                 const std::optional<PresentationGraph>& superset,
                                 const PipRpRegistry& registry) {
  std::optional<std::vector<int>> embedding;
  if (superset) {
    embedding = induced_embedding(g, *superset);
    if (!embedding)
      throw input_error("superset \"" + superset->display_name() +
                        "\" does not contain \"" + g.display_name() +
                        "\" as an induced labelled subgraph");
  }

  for (const auto& rule : registry.rules) {
    if (rule.holds(g)) {
      PipRpEvidence evidence;
      evidence.certified = true;
      evidence.rule = rule.id;
      return evidence;
    }
  }

  if (superset) {
    for (const auto& rule : registry.rules) {
      if (rule.holds(*superset)) {
        PipRpEvidence evidence;
        evidence.certified = true;
        evidence.rule = kRuleUserSuperset;
        evidence.superset = superset;
        evidence.superset_rule = rule.id;
        for (int v = 0; v < g.vertex_count(); ++v)
          evidence.embedding.emplace_back(g.name_of(v),
                                          superset->name_of((*embedding)[v]));
        return evidence;
      }
    }
  }

  return PipRpEvidence::unknown();
}

} // namespace artin
