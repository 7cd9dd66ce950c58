#include <doctest.h>

#include <algorithm>
#include <random>

#include "pa/geometry.hpp"
#include "support.hpp"

using namespace pa;
using pa::test::ch;
using pa::test::ns;

namespace {

Rational q(long long num, long long den = 1) { return Rational(num, den); }

std::vector<Rational> rationals(std::initializer_list<Rational> xs) { return std::vector<Rational>(xs); }

// Every set of c is one of M's sets.
bool below(const Chain& c, const Chain& m) {
  const auto ms = m.sets();
  for (LabelSet a : c.sets()) {
    if (std::find(ms.begin(), ms.end(), a) == ms.end()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("kappa values") {
  CHECK(kappa(2, 0, 2) == q(25, 2));
  CHECK(kappa(1, 1, 2) == 9);
  CHECK(kappa(3, 0, 3) == q(915, 23));
  for (int n = 1; n <= 6; ++n) {
    CHECK(kappa(1, 0, n) == 3);
    for (int m = 1; m <= n; ++m) CHECK(kappa(1, m - 1, n) == Rational(pow3(m)));
    CHECK(epsilon(1, n) == 0);
  }
  CHECK_THROWS_AS(kappa(0, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(kappa(2, 2, 3), std::invalid_argument);
}

TEST_CASE("facet inequalities") {
  const Hyperplane a = facet_inequality(ch({{1, 2}, {2}}), 2);
  CHECK(a.coeffs == std::vector<Integer>{0, 1, 2});
  CHECK(a.rhs == q(25, 2));
  CHECK(a.to_string() == "x1 + 2x2 >= 25/2");

  const Hyperplane b = facet_inequality(ch({{1, 2}}), 2);
  CHECK(b.coeffs == std::vector<Integer>{0, 1, 1});
  CHECK(b.rhs == 9);

  const Hyperplane m = facet_inequality(ch({{1, 0, 3}, {1, 0}, {1}}), 3);
  CHECK(m.coeffs == std::vector<Integer>{2, 3, 0, 1});
  CHECK(m.rhs == q(915, 23));

  // Single-set chains are the subset-sum bounds of the permutohedron.
  for (int n = 1; n <= 4; ++n) {
    for (const Chain& c : enumerate_b1(n)) {
      if (c.depth() != 1) continue;
      const Hyperplane h = facet_inequality(c, n);
      CHECK(h.rhs == Rational(pow3(c.core.size())));
      for (int i = 0; i <= n; ++i) CHECK(h.coeffs[static_cast<std::size_t>(i)] == (c.core.contains(i) ? 1 : 0));
    }
  }
}

TEST_CASE("H-representation sizes") {
  CHECK(h_representation(1).facets.size() == 2);
  CHECK(h_representation(2).facets.size() == 12);
  CHECK(h_representation(3).facets.size() == 62);
  const HRepresentation h = h_representation(1);
  CHECK(h.ambient.relation == Relation::Equality);
  CHECK(h.ambient.rhs == 9);
  CHECK(h.facet_of(ch({{0}})).to_string() == "x0 >= 3");
  CHECK_THROWS_AS(h.facet_of(ch({{0}, {0, 2}})), std::out_of_range);
}

TEST_CASE("vertex coordinates of small cases") {
  CHECK(vertex_coordinates(ns({ch({{1}})}), 1).coords == rationals({6, 3}));
  CHECK(vertex_coordinates(ns({ch({{0}})}), 1).coords == rationals({3, 6}));
  CHECK(vertex_coordinates(ns({ch({{1, 2}, {2}}), ch({{1, 2}})}), 2).coords == rationals({18, q(11, 2), q(7, 2)}));

  // x1 = 3, x0 + x1 + x3 = 27, 2x0 + 3x1 + x3 = 915/23, sum 81, solved by hand.
  const NestedSet v = ns({ch({{1, 0, 3}, {1, 0}, {1}}), ch({{1}}), ch({{1, 0, 3}})});
  CHECK(vertex_coordinates(v, 3).coords == rationals({q(156, 23), 3, 54, q(396, 23)}));
  const VertexReport r = verify_vertex(v, 3);
  CHECK(r.ok());
  CHECK(r.tight == v.chains());
}

TEST_CASE("every vertex is simple and strictly inside the other facets, n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    const HRepresentation h = h_representation(n);
    for (const NestedSet& v : enumerate_vertices(n)) {
      const VertexReport r = verify_vertex(v, h);
      REQUIRE(r.strict_ok);
      REQUIRE(r.multiplicity_ok);
      REQUIRE(r.tight_matches);
    }
  }
}

TEST_CASE("coordinate denominators divide 2(3^n - n - 1)") {
  for (int n = 1; n <= 4; ++n) {
    const Integer bound = 2 * (pow3(n) - n - 1);
    const HRepresentation h = h_representation(n);
    for (const NestedSet& v : enumerate_vertices(n)) {
      for (const Rational& x : vertex_coordinates(v, h).coords) {
        REQUIRE(bound % boost::multiprecision::denominator(x) == 0);
      }
    }
  }
}

TEST_CASE("lowering one kappa by 1 breaks strictness somewhere") {
  const int n = 3;
  const HRepresentation h = h_representation(n);
  const auto vertices = enumerate_vertices(n);
  bool broken = false;
  for (std::size_t f = 0; f < h.facets.size() && !broken; ++f) {
    HRepresentation mutated = h;
    mutated.facets[f].rhs -= 1;
    for (const NestedSet& v : vertices) {
      if (!verify_vertex(v, mutated).strict_ok) {
        broken = true;
        break;
      }
    }
  }
  CHECK(broken);
}

TEST_CASE("chains touching a common vertex are compatible") {
  for (int n = 1; n <= 3; ++n) {
    const HRepresentation h = h_representation(n);
    for (const NestedSet& v : enumerate_vertices(n)) {
      const auto tight = verify_vertex(v, h).tight;
      for (std::size_t i = 0; i < tight.size(); ++i) {
        for (std::size_t j = i + 1; j < tight.size(); ++j) {
          REQUIRE(is_nested(std::vector<Chain>{tight[i], tight[j]}, n));
        }
      }
    }
  }
}

TEST_CASE("u-normalization") {
  for (int n = 1; n <= 4; ++n) {
    const UNormalization un = normalize_u(n);
    CHECK(un.scale == pow3(n) - n - 1);
    const auto sz = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < sz; ++i) {
      for (std::size_t j = 0; j < sz; ++j) {
        Rational acc = 0;
        for (std::size_t k = 0; k < sz; ++k) acc += un.l[i][k] * un.l_inverse[k][j];
        CHECK(acc == (i == j ? 1 : 0));
      }
    }
    CHECK(un.w.back() == 3);
    if (n >= 2) CHECK(un.w.front() == Rational(pow3(n) - pow3(n - 1)));

    std::mt19937_64 rng(static_cast<unsigned>(n));
    std::uniform_int_distribution<int> d(-50, 50);
    for (int t = 0; t < 10; ++t) {
      std::vector<Rational> x;
      for (int i = 0; i < n; ++i) x.push_back(Rational(d(rng), 7));
      const auto y = un.h.apply(x);
      CHECK(y.front() == 0);
      CHECK(un.u.apply(y) == x);
    }

    const Chain m = standard_full_chain(n);
    for (const Chain& c : enumerate_b1(n)) {
      if (!below(c, m)) {
        CHECK_THROWS_AS(u_correspondent(c, n), std::invalid_argument);
        continue;
      }
      const std::vector<Label> y = u_correspondent(c, n);
      const RationalHyperplane got = pull_back(facet_inequality(c, n), un.h).normalized();
      std::vector<Rational> indicator(sz, 0);
      for (Label i : y) indicator[static_cast<std::size_t>(i - 1)] = 1;
      CHECK(got.coeffs == indicator);
      CHECK(got.rhs == Rational(pow3(static_cast<int>(y.size()))));
    }
    CHECK(u_correspondent(ch({{n}}), n) == std::vector<Label>{n});
    CHECK(u_correspondent(m, n).size() == sz);
  }
}

TEST_CASE("u-images of the PA_3 vertices respect the interval inequalities") {
  const int n = 3;
  const UNormalization un = normalize_u(n);
  const HRepresentation h = h_representation(n);
  const Chain m = standard_full_chain(n);
  for (const NestedSet& v : enumerate_vertices(n)) {
    const auto x = un.u.apply(vertex_coordinates(v, h).coords);
    for (const Chain& c : enumerate_b1(n)) {
      if (!below(c, m)) continue;
      Rational sum = 0;
      const auto y = u_correspondent(c, n);
      for (Label i : y) sum += x[static_cast<std::size_t>(i - 1)];
      const Rational bound(pow3(static_cast<int>(y.size())));
      REQUIRE(sum >= bound);
      REQUIRE((sum == bound) == v.contains(c));
    }
  }
}

TEST_CASE("the slice simplex points") {
  for (int n = 1; n <= 5; ++n) {
    const std::vector<Point> pts = top_simplex_points(n);
    REQUIRE(pts.size() == static_cast<std::size_t>(n));
    const Hyperplane mf = facet_inequality(standard_full_chain(n), n);
    for (int i = 1; i <= n; ++i) {
      // The defining system with equation (i) omitted.
      IntegerMatrix a;
      std::vector<Rational> b;
      a.push_back(mf.coeffs);
      b.push_back(kappa(n, 0, n));
      a.push_back(std::vector<Integer>(static_cast<std::size_t>(n) + 1, 1));
      b.push_back(Rational(pow3(n + 1)));
      for (int r = 1; r <= n; ++r) {
        if (r == i) continue;
        std::vector<Integer> row(static_cast<std::size_t>(n) + 1, 0);
        for (int j = r; j <= n; ++j) row[static_cast<std::size_t>(j)] = 1;
        a.push_back(row);
        b.push_back(Rational(pow3(n + 1 - r)));
      }
      CHECK(solve_exact(a, b) == pts[static_cast<std::size_t>(i - 1)].coords);
      Rational sum = 0;
      for (const Rational& x : pts[static_cast<std::size_t>(i - 1)].coords) sum += x;
      CHECK(sum == Rational(pow3(n + 1)));
    }
    CHECK(pts.back().coords.back() == 3 + epsilon(n, n));
  }

  const int n = 3;
  const Chain m = standard_full_chain(n);
  for (const Point& p : top_simplex_points(n)) {
    for (const Chain& c : enumerate_b1(n)) {
      if (below(c, m)) continue;
      CHECK(facet_inequality(c, n).side(p) > 0);
    }
  }
}

TEST_CASE("exact solver") {
  CHECK(solve_exact({{2, 1}, {1, 3}}, {3, 5}) == rationals({q(4, 5), q(7, 5)}));
  CHECK(solve_exact({{0, 1}, {1, 0}}, {q(1, 2), q(1, 3)}) == rationals({q(1, 3), q(1, 2)}));
  CHECK_THROWS_AS(solve_exact({{1, 2}, {2, 4}}, {1, 2}), std::runtime_error);
  CHECK(rank({{1, 2}, {2, 4}}) == 1);
  CHECK(to_string(q(-3, 6)) == "-1/2");
  CHECK(parse_rational("-1/2") == q(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("graph and face counts") {
  const RewriteGraph g2 = polytope_graph(2);
  CHECK(g2.vertices.size() == 12);
  CHECK(g2.edges.size() == 12);
  CHECK(f_vector(1) == std::vector<std::uint64_t>{2});
  CHECK(f_vector(2) == std::vector<std::uint64_t>{12, 12});
  CHECK(f_vector(3) == std::vector<std::uint64_t>{120, 180, 62});
  CHECK(polytope_graph(3) == build_graph(3));

  const HRepresentation h = h_representation(3);
  std::vector<Point> pts;
  for (const NestedSet& v : enumerate_vertices(3)) pts.push_back(vertex_coordinates(v, h));
  CHECK(redundant_facets(h, pts).empty());
  HRepresentation extra = h;
  extra.chains.push_back(ch({{0}}));
  extra.facets.push_back(Hyperplane{{1, 0, 0, 0}, 0, Relation::AtLeast});
  CHECK(redundant_facets(extra, pts) == std::vector<Chain>{ch({{0}})});
}
