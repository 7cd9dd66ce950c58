#include "pa/geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pa {

std::string Point::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) s += ", ";
    s += pa::to_string(coords[i]);
  }
  return s + ")";
}

Rational Hyperplane::lhs(const Point& p) const {
  if (p.coords.size() != coeffs.size()) {
    throw std::invalid_argument("point and hyperplane dimensions differ");
  }
  Rational acc = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) acc += Rational(coeffs[i]) * p.coords[i];
  }
  return acc;
}

int Hyperplane::side(const Point& p) const {
  const Rational d = lhs(p) - rhs;
  return d > 0 ? 1 : d < 0 ? -1 : 0;
}

std::string Hyperplane::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (coeffs[i] != 1) s += coeffs[i].str();
    s += "x" + std::to_string(i);
  }
  s += relation == Relation::Equality ? " = " : " >= ";
  return s + pa::to_string(rhs);
}

Rational epsilon(int k, int n) {
  check_dimension(n);
  if (k < 1 || k > n) throw std::invalid_argument("epsilon: k outside 1..n");
  return Rational(pow3(k) - 3 * k, pow3(n) - n - 1);
}

Rational kappa(int k, int l, int n) {
  check_dimension(n);
  if (k < 1 || l < 0 || k + l > n) {
    throw std::invalid_argument("kappa: need 1 <= k <= k + l <= n, got k=" + std::to_string(k) +
                                " l=" + std::to_string(l) + " n=" + std::to_string(n));
  }
  return Rational(pow3(k + l + 1) - pow3(l + 1), 2) + epsilon(k, n);
}

Hyperplane ambient_hyperplane(int n) {
  check_dimension(n);
  Hyperplane h;
  h.coeffs.assign(static_cast<std::size_t>(n) + 1, Integer(1));
  h.rhs = Rational(pow3(n + 1));
  h.relation = Relation::Equality;
  return h;
}

Hyperplane facet_inequality(const Chain& c, int n) {
  c.validate(n);
  Hyperplane h;
  h.coeffs.assign(static_cast<std::size_t>(n) + 1, Integer(0));
  for (std::size_t j = 0; j < c.ext.size(); ++j) {
    h.coeffs[static_cast<std::size_t>(c.ext[j])] = static_cast<long>(j) + 1;
  }
  const int k = c.depth();
  for (Label x : c.core.labels()) h.coeffs[static_cast<std::size_t>(x)] = k;
  h.rhs = kappa(k, c.spread(), n);
  h.relation = Relation::AtLeast;
  return h;
}

const Hyperplane& HRepresentation::facet_of(const Chain& c) const {
  auto it = std::lower_bound(chains.begin(), chains.end(), c);
  if (it == chains.end() || !(*it == c)) {
    throw std::out_of_range("no facet for chain " + c.to_string());
  }
  return facets[static_cast<std::size_t>(it - chains.begin())];
}

HRepresentation h_representation(int n) {
  HRepresentation h;
  h.n = n;
  h.ambient = ambient_hyperplane(n);
  h.chains = enumerate_b1(n);
  h.facets.reserve(h.chains.size());
  for (const Chain& c : h.chains) h.facets.push_back(facet_inequality(c, n));
  return h;
}

Point vertex_coordinates(const NestedSet& v, const HRepresentation& h) {
  const int n = h.n;
  if (v.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("a 0-face has exactly n chains");
  }
  IntegerMatrix a;
  std::vector<Rational> b;
  for (const Chain& c : v) {
    const Hyperplane& f = h.facet_of(c);
    a.push_back(f.coeffs);
    b.push_back(f.rhs);
  }
  a.push_back(h.ambient.coeffs);
  b.push_back(h.ambient.rhs);
  return Point{solve_exact(a, b)};
}

Point vertex_coordinates(const NestedSet& v, int n) {
  check_dimension(n);
  if (v.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("a 0-face has exactly n chains");
  }
  IntegerMatrix a;
  std::vector<Rational> b;
  for (const Chain& c : v) {
    Hyperplane f = facet_inequality(c, n);
    a.push_back(std::move(f.coeffs));
    b.push_back(f.rhs);
  }
  const Hyperplane pi = ambient_hyperplane(n);
  a.push_back(pi.coeffs);
  b.push_back(pi.rhs);
  return Point{solve_exact(a, b)};
}

namespace {

// The point scaled to integers: coords = scaled / denom.
struct ScaledPoint {
  std::vector<Integer> scaled;
  Integer denom = 1;

  explicit ScaledPoint(const Point& p) {
    for (const Rational& r : p.coords) {
      denom = boost::multiprecision::lcm(denom, boost::multiprecision::denominator(r));
    }
    for (const Rational& r : p.coords) {
      scaled.push_back(boost::multiprecision::numerator(r) * (denom / boost::multiprecision::denominator(r)));
    }
  }

  int side(const Hyperplane& h) const {
    Integer acc = 0;
    for (std::size_t i = 0; i < scaled.size(); ++i) {
      if (h.coeffs[i] != 0) acc += h.coeffs[i] * scaled[i];
    }
    const Integer lhs = acc * boost::multiprecision::denominator(h.rhs);
    const Integer rhs = boost::multiprecision::numerator(h.rhs) * denom;
    return lhs > rhs ? 1 : lhs < rhs ? -1 : 0;
  }
};

}  // namespace

VertexReport verify_vertex(const NestedSet& v, const HRepresentation& h) {
  VertexReport r;
  r.vertex = vertex_coordinates(v, h);
  const ScaledPoint sp(r.vertex);
  bool on_ambient = sp.side(h.ambient) == 0;
  for (std::size_t i = 0; i < h.chains.size(); ++i) {
    const int s = sp.side(h.facets[i]);
    if (s == 0) r.tight.push_back(h.chains[i]);
    if (s < 0) r.violated.push_back(h.chains[i]);
  }
  r.strict_ok = on_ambient && r.violated.empty();
  r.multiplicity_ok = r.tight.size() == static_cast<std::size_t>(h.n);
  r.tight_matches = r.tight == v.chains();
  return r;
}

VertexReport verify_vertex(const NestedSet& v, int n) {
  return verify_vertex(v, h_representation(n));
}

// ---------------------------------------------------------------------------
// Normalization
// ---------------------------------------------------------------------------

std::vector<Rational> AffineMap::apply(std::span<const Rational> x) const {
  std::vector<Rational> y = offset;
  for (std::size_t i = 0; i < linear.size(); ++i) {
    if (linear[i].size() != x.size()) throw std::invalid_argument("affine map dimension mismatch");
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (linear[i][j] != 0) y[i] += linear[i][j] * x[j];
    }
  }
  return y;
}

UNormalization normalize_u(int n) {
  check_dimension(n);
  UNormalization un;
  un.n = n;
  un.scale = pow3(n) - n - 1;
  const auto size = static_cast<std::size_t>(n);
  const Rational inv_scale = Rational(1) / Rational(un.scale);
  un.l.assign(size, std::vector<Rational>(size, Rational(0)));
  un.l_inverse.assign(size, std::vector<Rational>(size, Rational(0)));
  for (std::size_t i = 0; i < size; ++i) {
    un.l[i][i] = inv_scale;
    if (i + 1 < size) un.l[i][i + 1] = -inv_scale;
    for (std::size_t j = i; j < size; ++j) un.l_inverse[i][j] = Rational(un.scale);
  }
  // w_i = 3^(n-i+1) - 3^(n-i) for i < n, w_n = 3.
  for (int i = 1; i <= n; ++i) {
    un.w.push_back(i < n ? Rational(pow3(n - i + 1) - pow3(n - i)) : Rational(3));
  }

  // h(x') = (0, w + L (x' - 3)) = (0, w - 3 L 1) + [0; L] x'
  un.h.linear.assign(size + 1, std::vector<Rational>(size, Rational(0)));
  un.h.offset.assign(size + 1, Rational(0));
  for (std::size_t i = 0; i < size; ++i) {
    Rational row_sum = 0;
    for (std::size_t j = 0; j < size; ++j) {
      un.h.linear[i + 1][j] = un.l[i][j];
      row_sum += un.l[i][j];
    }
    un.h.offset[i + 1] = un.w[i] - 3 * row_sum;
  }

  // u(x) = L^-1 ((x_1..x_n) - w) + 3
  un.u.linear.assign(size, std::vector<Rational>(size + 1, Rational(0)));
  un.u.offset.assign(size, Rational(3));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      un.u.linear[i][j + 1] = un.l_inverse[i][j];
      un.u.offset[i] -= un.l_inverse[i][j] * un.w[j];
    }
  }
  return un;
}

RationalHyperplane RationalHyperplane::normalized() const {
  auto it = std::find_if(coeffs.begin(), coeffs.end(), [](const Rational& r) { return r != 0; });
  if (it == coeffs.end()) return *this;
  const Rational f = *it;
  RationalHyperplane out;
  for (const Rational& c : coeffs) out.coeffs.push_back(c / f);
  out.rhs = rhs / f;
  return out;
}

RationalHyperplane pull_back(const Hyperplane& hp, const AffineMap& map) {
  if (map.linear.size() != hp.coeffs.size()) {
    throw std::invalid_argument("pull_back: dimension mismatch");
  }
  const std::size_t cols = map.linear.empty() ? 0 : map.linear.front().size();
  RationalHyperplane out;
  out.coeffs.assign(cols, Rational(0));
  out.rhs = hp.rhs;
  for (std::size_t i = 0; i < hp.coeffs.size(); ++i) {
    if (hp.coeffs[i] == 0) continue;
    const Rational a(hp.coeffs[i]);
    for (std::size_t j = 0; j < cols; ++j) out.coeffs[j] += a * map.linear[i][j];
    out.rhs -= a * map.offset[i];
  }
  return out;
}

Chain standard_full_chain(int n) {
  check_dimension(n);
  Chain m;
  m.core = LabelSet::of({n});
  for (int i = 1; i < n; ++i) m.ext.push_back(i);
  return m;
}

std::vector<Label> u_correspondent(const Chain& c, int n) {
  c.validate(n);
  const int l = c.spread();
  const int k = c.depth();
  LabelSet expected_core;
  for (int i = n - l; i <= n; ++i) expected_core = expected_core.with(i);
  bool below = c.core == expected_core;
  for (int j = 0; below && j < k - 1; ++j) below = c.ext[static_cast<std::size_t>(j)] == n - l - k + 1 + j;
  if (!below) {
    throw std::invalid_argument("chain " + c.to_string() + " is not below the standard full chain");
  }
  std::vector<Label> y;
  for (int i = n - l - k + 1; i <= n - l; ++i) y.push_back(i);
  return y;
}

std::vector<Point> top_simplex_points(int n) {
  check_dimension(n);
  std::vector<Rational> base;
  for (int j = 0; j < n; ++j) base.push_back(Rational(pow3(n + 1 - j) - pow3(n - j)));
  base.push_back(Rational(3));
  const Rational eps = epsilon(n, n);
  std::vector<Point> out;
  for (int i = 1; i <= n; ++i) {
    Point p{base};
    p.coords[static_cast<std::size_t>(i - 1)] -= eps;
    p.coords[static_cast<std::size_t>(i)] += eps;
    out.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graph and face counts
// ---------------------------------------------------------------------------

RewriteGraph polytope_graph(int n, const EnumerationLimits& limits) {
  const std::vector<NestedSet> vertices = enumerate_vertices(n, limits);
  std::map<NestedSet, std::vector<std::size_t>> by_edge;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (const Chain& c : vertices[i]) by_edge[vertices[i].without(c)].push_back(i);
  }
  std::vector<IndexedEdge> edges;
  edges.reserve(by_edge.size());
  for (const auto& [edge, ends] : by_edge) {
    if (ends.size() != 2) {
      throw std::logic_error("1-face " + edge.to_string() + " lies on " + std::to_string(ends.size()) +
                             " vertices");
    }
    const EdgeKind kind = full_chains(edge, n).empty() ? EdgeKind::Sigma : EdgeKind::Alpha;
    edges.push_back({ends[0], ends[1], kind});
  }
  std::vector<Bracketing> brs;
  brs.reserve(vertices.size());
  for (const NestedSet& v : vertices) brs.push_back(from_nested(v, n));
  return make_rewrite_graph(std::move(brs), std::move(edges));
}

std::vector<std::uint64_t> f_vector(int n, const EnumerationLimits& limits) {
  check_enumeration(n, limits);
  std::vector<std::uint64_t> f;
  for (int k = 0; k < n; ++k) f.push_back(faces(n, k, limits).size());
  return f;
}

std::vector<Chain> redundant_facets(const HRepresentation& h, const std::vector<Point>& points) {
  std::vector<ScaledPoint> scaled;
  scaled.reserve(points.size());
  for (const Point& p : points) scaled.emplace_back(p);
  std::vector<Chain> out;
  for (std::size_t f = 0; f < h.chains.size(); ++f) {
    std::vector<const Point*> on;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (scaled[i].side(h.facets[f]) == 0) on.push_back(&points[i]);
    }
    std::size_t r = 0;
    if (!on.empty()) {
      RationalMatrix diffs;
      for (std::size_t i = 1; i < on.size(); ++i) {
        std::vector<Rational> d;
        for (std::size_t j = 0; j < on[i]->coords.size(); ++j) d.push_back(on[i]->coords[j] - on[0]->coords[j]);
        diffs.push_back(std::move(d));
      }
      r = rank(std::move(diffs)) + 1;  // affinely independent points
    }
    if (r < static_cast<std::size_t>(h.n)) out.push_back(h.chains[f]);
  }
  return out;
}

}  // namespace pa
