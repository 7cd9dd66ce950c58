#include "pa/classify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pa {

std::size_t cycle_length(DiagramType t) {
  switch (t) {
    case DiagramType::Pentagon3: return 5;
    case DiagramType::FunctorialQuad1:
    case DiagramType::NaturalQuad4:
    case DiagramType::SigmaQuad8: return 4;
    case DiagramType::Octagon9: return 8;
    case DiagramType::Dodecagon10: return 12;
  }
  throw std::logic_error("unknown diagram type");
}

std::string to_string(DiagramType t) {
  switch (t) {
    case DiagramType::Pentagon3: return "pentagon";
    case DiagramType::FunctorialQuad1: return "quad1";
    case DiagramType::NaturalQuad4: return "quad4";
    case DiagramType::SigmaQuad8: return "quad8";
    case DiagramType::Octagon9: return "octagon";
    case DiagramType::Dodecagon10: return "dodecagon";
  }
  throw std::logic_error("unknown diagram type");
}

namespace {

void require_face(const NestedSet& s, int n, std::size_t card, const char* what) {
  check_dimension(n);
  if (s.size() != card) {
    throw std::invalid_argument(std::string(what) + " must have " + std::to_string(card) +
                                " chains, got " + std::to_string(s.size()));
  }
  if (!is_nested(s, n)) {
    throw std::invalid_argument(std::string(what) + " is not 1-nested: " + s.to_string());
  }
}

}  // namespace

EdgeKind classify_1_face(const NestedSet& e, int n) {
  require_face(e, n, static_cast<std::size_t>(n - 1), "a 1-face");
  return full_chains(e, n).empty() ? EdgeKind::Sigma : EdgeKind::Alpha;
}

DiagramType classify_2_face(const NestedSet& f, int n) {
  if (n < 2) throw std::invalid_argument("2-faces need n >= 2");
  require_face(f, n, static_cast<std::size_t>(n - 2), "a 2-face");
  if (f.empty()) {
    throw std::invalid_argument("the empty nested set is the polygon itself, not a proper 2-face");
  }

  if (!full_chains(f, n).empty()) {
    std::vector<const Chain*> doubles;
    for (const Chain& a : f) {
      const int nu = superficial_count(f, a);
      if (nu == 3) return DiagramType::Pentagon3;
      if (nu == 2) doubles.push_back(&a);
    }
    if (doubles.size() == 2) {
      return comparable(*doubles[0], *doubles[1]) ? DiagramType::NaturalQuad4
                                                  : DiagramType::FunctorialQuad1;
    }
    throw std::logic_error("2-face with a full chain fits no diagram: " + f.to_string());
  }

  const std::vector<LabelSet> flat = f.flattened();
  if (!is_set_chain(flat)) {
    throw std::logic_error("union of a 2-face is not a chain of sets: " + f.to_string());
  }
  const auto size = static_cast<int>(flat.size());
  if (size == n - 1) return DiagramType::SigmaQuad8;
  if (size == n - 2) {
    // Position j in the completing full chain holds the set of size n + 1 - j.
    std::vector<bool> present(static_cast<std::size_t>(n) + 1, false);
    for (LabelSet a : flat) present[static_cast<std::size_t>(n + 1 - a.size())] = true;
    std::vector<int> missing;
    for (int j = 1; j <= n; ++j) {
      if (!present[static_cast<std::size_t>(j)]) missing.push_back(j);
    }
    if (missing.size() != 2) {
      throw std::logic_error("2-face union misses unexpected positions: " + f.to_string());
    }
    return missing[1] - missing[0] > 1 ? DiagramType::Octagon9 : DiagramType::Dodecagon10;
  }
  throw std::logic_error("2-face union has unexpected size: " + f.to_string());
}

// ---------------------------------------------------------------------------
// Boundary cycles
// ---------------------------------------------------------------------------

VertexIndex::VertexIndex(int n, const EnumerationLimits& limits)
    : n_(n), vertices_(enumerate_vertices(n, limits)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (const Chain& c : vertices_[i]) by_chain_[c].push_back(i);
  }
}

std::vector<std::size_t> VertexIndex::containing(const NestedSet& face) const {
  if (face.empty()) {
    std::vector<std::size_t> all(vertices_.size());
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<std::size_t> acc;
  bool first = true;
  for (const Chain& c : face) {
    auto it = by_chain_.find(c);
    if (it == by_chain_.end()) return {};
    if (first) {
      acc = it->second;
      first = false;
      continue;
    }
    std::vector<std::size_t> next;
    std::set_intersection(acc.begin(), acc.end(), it->second.begin(), it->second.end(),
                          std::back_inserter(next));
    acc = std::move(next);
  }
  return acc;
}

std::vector<NestedSet> boundary_cycle(const NestedSet& f, const VertexIndex& index) {
  const int n = index.n();
  if (n < 2) throw std::invalid_argument("2-faces need n >= 2");
  require_face(f, n, static_cast<std::size_t>(n - 2), "a 2-face");
  const std::vector<std::size_t> ids = index.containing(f);
  const auto& all = index.vertices();
  const std::size_t m = ids.size();
  if (m < 3) throw std::logic_error("2-face with fewer than three vertices: " + f.to_string());

  std::vector<std::vector<std::size_t>> adj(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (all[ids[a]].common(all[ids[b]]) == static_cast<std::size_t>(n - 1)) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
    }
  }
  for (const auto& nb : adj) {
    if (nb.size() != 2) throw std::logic_error("2-face boundary is not a cycle: " + f.to_string());
  }

  std::vector<NestedSet> cycle;
  std::size_t prev = 0;
  std::size_t cur = 0;
  std::size_t next = std::min(adj[0][0], adj[0][1]);
  do {
    cycle.push_back(all[ids[cur]]);
    prev = cur;
    cur = next;
    next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
  } while (cur != 0 && cycle.size() <= m);
  if (cycle.size() != m) {
    throw std::logic_error("2-face boundary is not a single cycle: " + f.to_string());
  }
  return cycle;
}

std::vector<NestedSet> boundary_cycle(const NestedSet& f, int n) {
  return boundary_cycle(f, VertexIndex(n));
}

std::vector<EdgeKind> boundary_edge_kinds(const std::vector<NestedSet>& cycle, int n) {
  std::vector<EdgeKind> kinds;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const NestedSet& a = cycle[i];
    const NestedSet& b = cycle[(i + 1) % cycle.size()];
    std::vector<Chain> shared;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
    kinds.push_back(classify_1_face(NestedSet(std::move(shared)), n));
  }
  return kinds;
}

std::size_t DiagramCensus::total() const {
  std::size_t t = 0;
  for (const auto& [type, count] : counts) t += count;
  return t;
}

DiagramCensus diagram_census(int n, const EnumerationLimits& limits) {
  if (n < 2) throw std::invalid_argument("2-faces need n >= 2");
  check_enumeration(n, limits);
  DiagramCensus census;
  for (DiagramType t : kAllDiagramTypes) census.counts[t] = 0;
  if (n == 2) {
    census.body_is_2_face = true;
    return census;
  }
  for (const NestedSet& f : faces(n, 2, limits)) ++census.counts[classify_2_face(f, n)];
  return census;
}

}  // namespace pa
