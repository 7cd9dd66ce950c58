#include <doctest.h>

#include <map>
#include <set>

#include "pa/classify.hpp"
#include "pa/geometry.hpp"
#include "support.hpp"

using namespace pa;
using pa::test::ch;
using pa::test::ns;

namespace {

const Chain kM5 = ch({{0, 1, 2, 3, 4}, {0, 1, 2, 3}, {0, 1, 2}, {0, 1}, {0}});

const NestedSet kF1 = ns({kM5, ch({{0, 1, 2, 3}, {0, 1, 2}, {0, 1}, {0}}), ch({{0}})});
const NestedSet kF2 = ns({kM5, ch({{0, 1, 2, 3, 4}, {0, 1, 2, 3}}), ch({{0, 1}, {0}})});
const NestedSet kF3 = ns({kM5, ch({{0, 1, 2, 3}, {0, 1, 2}, {0, 1}, {0}}), ch({{0, 1}, {0}})});
const NestedSet kF4 = ns({ch({{0, 1, 2, 3, 4}}), ch({{0, 1, 2}, {0, 1}, {0}}), ch({{0}})});
const NestedSet kF5 = ns({ch({{0, 1, 2, 3, 4}}), ch({{0, 1, 2}}), ch({{0}})});
const NestedSet kF6 = ns({ch({{0, 1, 2, 3, 4}}), ch({{0, 1}, {0}}), ch({{0}})});

std::set<std::string> cycle_names(const NestedSet& f, const VertexIndex& index) {
  std::set<std::string> out;
  for (const NestedSet& v : boundary_cycle(f, index)) out.insert(print_bracketing(from_nested(v, index.n())));
  return out;
}

std::set<std::string> canonical(std::initializer_list<const char*> texts, int n) {
  std::set<std::string> out;
  for (const char* t : texts) out.insert(print_bracketing(parse_bracketing(t, n)));
  return out;
}

bool all_alpha(const std::vector<EdgeKind>& kinds) {
  for (EdgeKind k : kinds) {
    if (k != EdgeKind::Alpha) return false;
  }
  return true;
}

bool alternating(const std::vector<EdgeKind>& kinds) {
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    if (kinds[i] == kinds[(i + 1) % kinds.size()]) return false;
  }
  return kinds.size() % 2 == 0;
}

}  // namespace

TEST_CASE("diagram names and sizes") {
  CHECK(to_string(DiagramType::Pentagon3) == "pentagon");
  CHECK(to_string(DiagramType::Dodecagon10) == "dodecagon");
  CHECK(cycle_length(DiagramType::Pentagon3) == 5);
  CHECK(cycle_length(DiagramType::FunctorialQuad1) == 4);
  CHECK(cycle_length(DiagramType::NaturalQuad4) == 4);
  CHECK(cycle_length(DiagramType::SigmaQuad8) == 4);
  CHECK(cycle_length(DiagramType::Octagon9) == 8);
  CHECK(cycle_length(DiagramType::Dodecagon10) == 12);
}

TEST_CASE("the six worked 2-faces at n = 5") {
  CHECK(classify_2_face(kF1, 5) == DiagramType::Pentagon3);
  CHECK(classify_2_face(kF2, 5) == DiagramType::FunctorialQuad1);
  CHECK(classify_2_face(kF3, 5) == DiagramType::NaturalQuad4);
  CHECK(classify_2_face(kF4, 5) == DiagramType::SigmaQuad8);
  CHECK(classify_2_face(kF5, 5) == DiagramType::Octagon9);
  CHECK(classify_2_face(kF6, 5) == DiagramType::Dodecagon10);

  const VertexIndex index(5);
  CHECK(cycle_names(kF1, index) == canonical({"5*(4*(3*(2*(1*0))))", "5*(4*((3*2)*(1*0)))",
                                              "5*((4*(3*2))*(1*0))", "5*(((4*3)*2)*(1*0))",
                                              "5*((4*3)*(2*(1*0)))"},
                                             5));
  CHECK(cycle_names(kF4, index) == canonical({"(5*4)*(3*(2*(1*0)))", "(5*3)*(4*(2*(1*0)))",
                                              "(5*4)*((3*2)*(1*0))", "(5*3)*((4*2)*(1*0))"},
                                             5));
  for (const NestedSet* f : {&kF1, &kF2, &kF3, &kF4, &kF5, &kF6}) {
    const auto cycle = boundary_cycle(*f, index);
    CHECK(cycle.size() == cycle_length(classify_2_face(*f, 5)));
  }
  CHECK(all_alpha(boundary_edge_kinds(boundary_cycle(kF2, index), 5)));
  CHECK(alternating(boundary_edge_kinds(boundary_cycle(kF6, index), 5)));
}

TEST_CASE("census of the 62 facets of PA_3") {
  const DiagramCensus c = diagram_census(3);
  CHECK_FALSE(c.body_is_2_face);
  CHECK(c.counts.at(DiagramType::Pentagon3) == 24);
  CHECK(c.counts.at(DiagramType::FunctorialQuad1) == 0);
  CHECK(c.counts.at(DiagramType::NaturalQuad4) == 0);
  CHECK(c.counts.at(DiagramType::SigmaQuad8) == 24);
  CHECK(c.counts.at(DiagramType::Octagon9) == 6);
  CHECK(c.counts.at(DiagramType::Dodecagon10) == 8);
  CHECK(c.total() == 62);
}

TEST_CASE("the 12-gon is its own 2-face") {
  const DiagramCensus c = diagram_census(2);
  CHECK(c.body_is_2_face);
  CHECK(c.total() == 0);
  CHECK_THROWS_AS(classify_2_face(NestedSet{}, 2), std::invalid_argument);
}

TEST_CASE("boundary cycles and edge patterns for n <= 4") {
  for (int n = 3; n <= 4; ++n) {
    const VertexIndex index(n);
    const DiagramCensus census = diagram_census(n);
    CHECK(census.total() == faces(n, 2).size());
    for (const NestedSet& f : faces(n, 2)) {
      const DiagramType t = classify_2_face(f, n);
      const auto cycle = boundary_cycle(f, index);
      REQUIRE(cycle.size() == cycle_length(t));
      REQUIRE(cycle.size() == index.containing(f).size());
      for (const NestedSet& v : cycle) REQUIRE(v.includes(f));
      const auto kinds = boundary_edge_kinds(cycle, n);
      switch (t) {
        case DiagramType::Pentagon3:
        case DiagramType::FunctorialQuad1:
        case DiagramType::NaturalQuad4:
          REQUIRE(all_alpha(kinds));
          break;
        case DiagramType::SigmaQuad8:
        case DiagramType::Octagon9:
        case DiagramType::Dodecagon10:
          // Sides of the drawn diagrams alternate sigma with alpha or its inverse.
          REQUIRE(alternating(kinds));
          break;
      }
    }
  }
}

TEST_CASE("the three facets at the vertex 2301") {
  const Bracketing b = parse_bracketing("((2*3)*(0*1))", 3);
  std::map<Chain, DiagramType> types;
  for (const Chain& c : to_nested(b)) types[c] = classify_2_face(ns({c}), 3);
  CHECK(types.at(ch({{1, 0, 3}, {1, 0}, {1}})) == DiagramType::Pentagon3);
  CHECK(types.at(ch({{1}})) == DiagramType::Dodecagon10);
  CHECK(types.at(ch({{1, 0, 3}})) == DiagramType::Dodecagon10);
}

TEST_CASE("1-faces") {
  const NestedSet e_alpha = ns({ch({{1, 0, 3}, {1, 0}, {1}}), ch({{1}})});
  const NestedSet e_sigma = ns({ch({{1}}), ch({{1, 0, 3}})});
  CHECK(classify_1_face(e_alpha, 3) == EdgeKind::Alpha);
  CHECK(classify_1_face(e_sigma, 3) == EdgeKind::Sigma);
  CHECK_THROWS_AS(classify_1_face(ns({ch({{1}})}), 3), std::invalid_argument);
  CHECK_THROWS_AS(classify_1_face(ns({ch({{2}}), ch({{1, 2}})}), 3), std::invalid_argument);

  std::size_t sigma = 0;
  for (const NestedSet& e : faces(3, 1)) sigma += classify_1_face(e, 3) == EdgeKind::Sigma ? 1 : 0;
  CHECK(sigma == 60);
}

TEST_CASE("invalid 2-faces") {
  CHECK_THROWS_AS(classify_2_face(ns({ch({{1}}), ch({{2}})}), 3), std::invalid_argument);
  CHECK_THROWS_AS(classify_2_face(ns({ch({{0, 1}}), ch({{1, 2}}), ch({{0}})}), 4), std::invalid_argument);
  CHECK_THROWS_AS(diagram_census(1), std::invalid_argument);
}
