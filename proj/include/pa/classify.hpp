#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pa/brackets.hpp"
#include "pa/limits.hpp"
#include "pa/nestedsets.hpp"

namespace pa {

/// Coherence diagram attached to a 2-face.
enum class DiagramType {
  Pentagon3,        // Mac Lane pentagon
  FunctorialQuad1,  // functoriality quadrilateral
  NaturalQuad4,     // naturality quadrilateral
  SigmaQuad8,       // sigma commutes with alpha on one factor
  Octagon9,
  Dodecagon10,
};

inline constexpr DiagramType kAllDiagramTypes[] = {
    DiagramType::Pentagon3, DiagramType::FunctorialQuad1, DiagramType::NaturalQuad4,
    DiagramType::SigmaQuad8, DiagramType::Octagon9,       DiagramType::Dodecagon10,
};

/// Number of vertices on the boundary of a face of this type.
std::size_t cycle_length(DiagramType t);

/// Short names used in reports: "pentagon", "quad1", "quad4", "quad8",
/// "octagon", "dodecagon".
std::string to_string(DiagramType t);

/// Alpha iff the 1-face holds a maximal 0-nested set.
EdgeKind classify_1_face(const NestedSet& e, int n);

DiagramType classify_2_face(const NestedSet& f, int n);

/// All 0-faces of one n with a chain -> vertex index for face lookups.
class VertexIndex {
 public:
  explicit VertexIndex(int n, const EnumerationLimits& limits = {});

  int n() const { return n_; }
  const std::vector<NestedSet>& vertices() const { return vertices_; }

  /// Indices of the 0-faces including `face`, ascending.
  std::vector<std::size_t> containing(const NestedSet& face) const;

 private:
  int n_;
  std::vector<NestedSet> vertices_;
  std::map<Chain, std::vector<std::size_t>> by_chain_;
};

/// The 0-faces of a 2-face in cyclic order, starting from the smallest and
/// heading to its smaller neighbour.
std::vector<NestedSet> boundary_cycle(const NestedSet& f, const VertexIndex& index);
std::vector<NestedSet> boundary_cycle(const NestedSet& f, int n);

/// Kinds of the cycle's edges: entry i joins cycle[i] and cycle[i+1 mod len].
std::vector<EdgeKind> boundary_edge_kinds(const std::vector<NestedSet>& cycle, int n);

struct DiagramCensus {
  std::map<DiagramType, std::size_t> counts;
  /// n = 2: the only 2-face is the polygon itself, reported here.
  bool body_is_2_face = false;

  std::size_t total() const;
};

DiagramCensus diagram_census(int n, const EnumerationLimits& limits = {});

}  // namespace pa
