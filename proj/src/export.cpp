#include "pa/export.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "pa/classify.hpp"

namespace pa {

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw IoError("write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw IoError("cannot rename into " + path.string() + ": " + ec.message());
  }
}

std::string hrep_ine(const HRepresentation& h) {
  std::ostringstream out;
  out << "H-representation\n";
  out << "linearity 1 1\n";
  out << "begin\n";
  out << h.facets.size() + 1 << ' ' << h.n + 2 << " rational\n";
  auto row = [&out](const Hyperplane& hp) {
    out << to_string(-hp.rhs);
    for (const Integer& a : hp.coeffs) out << ' ' << a.str();
    out << '\n';
  };
  row(h.ambient);
  for (const Hyperplane& f : h.facets) row(f);
  out << "end\n";
  return out.str();
}

Json rational_array(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const Rational& r : v) a.push_back(to_string(r));
  return a;
}

Json chain_array(const std::vector<Chain>& chains) {
  Json a = Json::array();
  for (const Chain& c : chains) a.push_back(c.to_string());
  return a;
}

Json vertex_record(const NestedSet& v, const HRepresentation& h) {
  const VertexReport r = verify_vertex(v, h);
  Json j;
  j["bracketing"] = print_bracketing(from_nested(v, h.n));
  j["nested_set"] = chain_array(v.chains());
  j["coordinates"] = rational_array(r.vertex.coords);
  j["tight_facets"] = chain_array(r.tight);
  return j;
}

Json vrep_json(int n, const EnumerationLimits& limits) {
  const HRepresentation h = h_representation(n);
  const std::vector<NestedSet> vertices = enumerate_vertices(n, limits);
  Json j;
  j["n"] = n;
  j["vertex_count"] = vertices.size();
  Json list = Json::array();
  for (const NestedSet& v : vertices) list.push_back(vertex_record(v, h));
  j["vertices"] = std::move(list);
  return j;
}

Json bracketing_record(const Bracketing& b) {
  const int n = b.n();
  const HRepresentation h = h_representation(n);
  const NestedSet v = to_nested(b);
  const VertexReport r = verify_vertex(v, h);
  const Bracketing back = from_nested(v, n);

  Json j;
  j["n"] = n;
  j["bracketing"] = print_bracketing(b);
  j["nested_set"] = chain_array(v.chains());
  j["coordinates"] = rational_array(r.vertex.coords);
  Json tight = Json::array();
  for (const Chain& c : r.tight) {
    Json t;
    t["chain"] = c.to_string();
    t["inequality"] = h.facet_of(c).to_string();
    if (n == 3) t["diagram"] = to_string(classify_2_face(NestedSet({c}), n));
    tight.push_back(std::move(t));
  }
  j["tight_facets"] = std::move(tight);
  j["is_nested"] = is_nested(v, n);
  j["round_trip"] = back == b && print_bracketing(back) == print_bracketing(b);
  j["vertex_ok"] = r.ok();
  return j;
}

std::string graph_dot(const RewriteGraph& g, int n) {
  std::ostringstream out;
  out << "graph PA" << n << " {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    out << "  " << i << " [label=\"" << print_bracketing(g.vertices[i]) << "\"];\n";
  }
  for (const GraphEdge& e : g.edges) {
    out << "  " << e.u << " -- " << e.v << " [kind=" << to_string(e.kind) << "];\n";
  }
  out << "}\n";
  return out.str();
}

Json faces_json(int n, int dim, bool classify, const EnumerationLimits& limits) {
  if (classify && dim != 2) throw std::invalid_argument("--classify applies to 2-faces only");
  check_enumeration(n, limits);
  Json j;
  j["n"] = n;
  j["dim"] = dim;
  if (classify && n == 2) {
    // The 12-gon itself is the only 2-face; it has no proper classification.
    j["count"] = 1;
    j["body_is_2_face"] = true;
    j["faces"] = Json::array();
    j["census"] = Json::object();
    return j;
  }
  const std::vector<NestedSet> fs = faces(n, dim, limits);
  j["count"] = fs.size();
  Json list = Json::array();
  if (classify) {
    const VertexIndex index(n, limits);
    DiagramCensus census;
    for (DiagramType t : kAllDiagramTypes) census.counts[t] = 0;
    for (const NestedSet& f : fs) {
      const DiagramType t = classify_2_face(f, n);
      ++census.counts[t];
      Json e;
      e["face"] = chain_array(f.chains());
      e["type"] = to_string(t);
      const std::vector<NestedSet> vs = boundary_cycle(f, index);
      Json cycle = Json::array();
      for (const NestedSet& v : vs) cycle.push_back(print_bracketing(from_nested(v, n)));
      Json kinds = Json::array();
      for (EdgeKind k : boundary_edge_kinds(vs, n)) kinds.push_back(to_string(k));
      e["cycle"] = std::move(cycle);
      e["edge_kinds"] = std::move(kinds);
      list.push_back(std::move(e));
    }
    j["faces"] = std::move(list);
    Json c = Json::object();
    for (const auto& [t, count] : census.counts) c[to_string(t)] = count;
    j["census"] = std::move(c);
  } else {
    for (const NestedSet& f : fs) list.push_back(chain_array(f.chains()));
    j["faces"] = std::move(list);
  }
  return j;
}

namespace {

using Vec3 = std::array<Rational, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

std::string decimal(const Rational& r) {
  std::ostringstream s;
  s << std::setprecision(12) << static_cast<double>(r);
  return s.str();
}

}  // namespace

std::string off_mesh(int n) {
  if (n != 3) throw std::invalid_argument("OFF export is defined for n = 3 only");
  const HRepresentation h = h_representation(n);
  const UNormalization un = normalize_u(n);
  const VertexIndex index(n);
  const auto& vertices = index.vertices();

  std::vector<Vec3> pts;
  for (const NestedSet& v : vertices) {
    const std::vector<Rational> y = un.u.apply(vertex_coordinates(v, h).coords);
    pts.push_back({y[0], y[1], y[2]});
  }
  Vec3 centroid{0, 0, 0};
  for (const Vec3& p : pts) {
    for (int i = 0; i < 3; ++i) centroid[i] += p[i];
  }
  for (int i = 0; i < 3; ++i) centroid[i] /= Rational(pts.size());

  const std::vector<NestedSet> facets = faces(n, n - 1);
  std::size_t edge_count = faces(n, 1).size();

  std::ostringstream out;
  out << "OFF\n" << pts.size() << ' ' << facets.size() << ' ' << edge_count << '\n';
  for (const Vec3& p : pts) out << decimal(p[0]) << ' ' << decimal(p[1]) << ' ' << decimal(p[2]) << '\n';

  for (const NestedSet& f : facets) {
    std::vector<std::size_t> ids;
    for (const NestedSet& v : boundary_cycle(f, index)) {
      ids.push_back(static_cast<std::size_t>(
          std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin()));
    }
    const Vec3 normal = cross(sub(pts[ids[1]], pts[ids[0]]), sub(pts[ids[2]], pts[ids[1]]));
    if (dot(normal, sub(pts[ids[0]], centroid)) < 0) std::reverse(ids.begin() + 1, ids.end());
    out << ids.size();
    for (std::size_t id : ids) out << ' ' << id;
    out << '\n';
  }
  return out.str();
}

}  // namespace pa
