#include "pa/check.hpp"

#include <algorithm>
#include <set>

#include "pa/brackets.hpp"
#include "pa/geometry.hpp"

namespace pa {

namespace {

constexpr std::size_t kMaxSamples = 5;

struct Recorder {
  CheckResult result;

  explicit Recorder(std::string name) { result.name = std::move(name); }

  void fail(const std::string& what) {
    if (result.failures.size() < kMaxSamples) result.failures.push_back(what);
    failed = true;
  }

  CheckResult finish() {
    result.ok = !failed;
    return std::move(result);
  }

  bool failed = false;
};

std::uint64_t euler_target(int n) { return n % 2 == 0 ? 0 : 2; }

}  // namespace

bool CheckReport::ok() const {
  for (const CheckResult& c : checks) {
    if (!c.ok) return false;
  }
  return true;
}

Json CheckReport::to_json() const {
  Json j;
  j["n"] = n;
  j["ok"] = ok();
  j["b1_count"] = b1_count;
  j["f_vector"] = f_vector;
  Json list = Json::array();
  for (const CheckResult& c : checks) {
    Json e;
    e["name"] = c.name;
    e["ok"] = c.ok;
    e["failures"] = c.failures;
    list.push_back(std::move(e));
  }
  j["checks"] = std::move(list);
  return j;
}

CheckReport run_check(int n, const CheckOptions& options) {
  check_enumeration(n, options.limits);
  CheckReport report;
  report.n = n;

  HRepresentation h = h_representation(n);
  report.b1_count = h.chains.size();
  if (options.perturb) {
    for (std::size_t i = 0; i < h.chains.size(); ++i) h.facets[i].rhs -= epsilon(h.chains[i].depth(), n);
  }

  const std::vector<NestedSet> vertices = enumerate_vertices(n, options.limits);
  {
    Recorder count("vertex_count");
    if (vertices.size() != vertex_count(n)) {
      count.fail("expected " + std::to_string(vertex_count(n)) + ", found " + std::to_string(vertices.size()));
    }
    report.checks.push_back(count.finish());
  }

  Recorder equalities("vertex_equalities");
  Recorder strict("strict_inequalities");
  Recorder simple("simplicity");
  Recorder distinct("distinct_vertices");
  std::vector<Point> points;
  std::set<std::vector<Rational>> seen;
  for (const NestedSet& v : vertices) {
    VertexReport r = verify_vertex(v, h);
    const std::string label = print_bracketing(from_nested(v, n));
    for (const Chain& c : v) {
      if (std::find(r.tight.begin(), r.tight.end(), c) == r.tight.end()) {
        equalities.fail(label + " not tight on " + c.to_string());
      }
    }
    if (!r.strict_ok) {
      strict.fail(label + " violates " + (r.violated.empty() ? std::string("the ambient equality")
                                                             : r.violated.front().to_string()));
    }
    if (!r.multiplicity_ok || !r.tight_matches) {
      simple.fail(label + " is tight on " + std::to_string(r.tight.size()) + " facets");
    }
    if (!seen.insert(r.vertex.coords).second) distinct.fail(label + " repeats " + r.vertex.to_string());
    points.push_back(std::move(r.vertex));
  }
  report.checks.push_back(equalities.finish());
  report.checks.push_back(strict.finish());
  report.checks.push_back(simple.finish());
  report.checks.push_back(distinct.finish());

  {
    Recorder facets("facet_defining");
    for (const Chain& c : redundant_facets(h, points)) facets.fail(c.to_string() + " is not a facet");
    report.checks.push_back(facets.finish());
  }

  {
    Recorder graph("graph_equality");
    const RewriteGraph geometric = polytope_graph(n, options.limits);
    const RewriteGraph rewrite = build_graph(n, options.limits);
    if (!(geometric == rewrite)) graph.fail("polytope graph differs from the rewrite graph");
    if (!geometric.is_connected()) graph.fail("graph is disconnected");
    const auto deg = geometric.degrees();
    const auto sig = geometric.sigma_degrees();
    for (std::size_t i = 0; i < deg.size(); ++i) {
      const std::string label = print_bracketing(geometric.vertices[i]);
      if (deg[i] != static_cast<std::size_t>(n)) graph.fail(label + " has degree " + std::to_string(deg[i]));
      if (sig[i] != 1) graph.fail(label + " has " + std::to_string(sig[i]) + " sigma edges");
    }
    report.checks.push_back(graph.finish());
  }

  {
    Recorder lattice("face_counts");
    report.f_vector = f_vector(n, options.limits);
    for (int k = 0; k < n; ++k) {
      const std::size_t cliques = faces_by_cliques(n, k, options.limits).size();
      if (cliques != report.f_vector[static_cast<std::size_t>(k)]) {
        lattice.fail("dimension " + std::to_string(k) + ": " + std::to_string(report.f_vector[static_cast<std::size_t>(k)]) +
                     " faces by subsets, " + std::to_string(cliques) + " by cliques");
      }
    }
    if (report.f_vector.back() != report.b1_count) lattice.fail("facet count differs from |B1|");
    std::int64_t euler = 0;
    for (std::size_t k = 0; k < report.f_vector.size(); ++k) {
      euler += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(report.f_vector[k]);
    }
    if (euler != static_cast<std::int64_t>(euler_target(n))) {
      lattice.fail("Euler characteristic " + std::to_string(euler));
    }
    report.checks.push_back(lattice.finish());
  }
  return report;
}

}  // namespace pa
