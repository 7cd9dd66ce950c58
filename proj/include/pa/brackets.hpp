#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pa/label_set.hpp"
#include "pa/limits.hpp"
#include "pa/nestedsets.hpp"

namespace pa {

/// Inclusive range of leaf positions covered by a bracket pair.
struct Interval {
  int lo = 0;
  int hi = 0;

  int width() const { return hi - lo + 1; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Preorder on intervals of one tree: by left end, outer before inner.
struct PreorderLess {
  bool operator()(const Interval& a, const Interval& b) const {
    return a.lo != b.lo ? a.lo < b.lo : a.hi > b.hi;
  }
};

/// A complete bracketing of a permuted product i_0 * i_1 * ... * i_n.
///
/// `perm[j]` is the label at leaf position j. The full binary tree is kept as
/// the set of leaf intervals of its n internal nodes, sorted in preorder, so
/// two bracketings are equal iff their members are.
struct Bracketing {
  std::vector<Label> perm;
  std::vector<Interval> brackets;

  int n() const { return static_cast<int>(perm.size()) - 1; }

  /// Sorts `brackets` and validates; throws std::invalid_argument.
  static Bracketing make(std::vector<Label> perm, std::vector<Interval> brackets);

  /// Throws std::invalid_argument unless perm is a permutation of 0..n and
  /// the brackets form a full binary tree over leaves 0..n.
  void validate() const;

  bool has_bracket(const Interval& iv) const;

  /// Leaf position where the right child of bracket `iv` starts.
  int split(const Interval& iv) const;

  /// Smallest bracket strictly containing `iv`; nullopt for the root.
  std::optional<Interval> parent(const Interval& iv) const;

  friend bool operator==(const Bracketing&, const Bracketing&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  /// Byte offset into the input.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// All full binary trees with `leaves` leaves, as preorder interval lists.
std::vector<std::vector<Interval>> full_binary_trees(int leaves);

/// Every (permutation, tree) pair for n, permutations in lexicographic order.
std::vector<Bracketing> enumerate_bracketings(int n, const EnumerationLimits& limits = {});

/// Grammar: expr := INT | '(' expr op expr ')', op is '*' or U+00B7;
/// whitespace ignored; outermost parentheses optional.
Bracketing parse_bracketing(std::string_view text, int n);

/// Fully parenthesized, '*' separated, no whitespace.
std::string print_bracketing(const Bracketing& b);

/// The maximal 1-nested set of b: the bracket over leaves [a, b] maps to
/// the chain {M_{a+1}, ..., M_b} with M_j = {i_j, ..., i_n}.
NestedSet to_nested(const Bracketing& b);

/// Inverse of to_nested. Throws std::invalid_argument unless v is a maximal
/// 1-nested set over {0..n}.
Bracketing from_nested(const NestedSet& v, int n);

/// The n - 1 bracketings one reassociation away, one per non-root bracket.
std::vector<Bracketing> alpha_neighbors(const Bracketing& b);

/// Swaps the two leaves adjacent to the root split.
Bracketing sigma_neighbor(const Bracketing& b);

/// Incidence of a facet and a vertex via ordered partitions of X, without
/// going through to_nested.
bool chain_incident(const Bracketing& b, const Chain& c);

enum class EdgeKind { Alpha, Sigma };

std::string to_string(EdgeKind kind);

struct GraphEdge {
  std::size_t u = 0;  // u < v
  std::size_t v = 0;
  EdgeKind kind = EdgeKind::Alpha;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// Vertices sorted by their printed form; edges sorted by (u, v).
struct RewriteGraph {
  std::vector<Bracketing> vertices;
  std::vector<GraphEdge> edges;

  std::optional<std::size_t> index_of(const Bracketing& b) const;
  std::vector<std::size_t> degrees() const;
  std::vector<std::size_t> sigma_degrees() const;
  bool is_connected() const;

  friend bool operator==(const RewriteGraph&, const RewriteGraph&) = default;
};

/// The rewrite graph on all (2n)!/n! bracketings with alpha and sigma edges.
RewriteGraph build_graph(int n, const EnumerationLimits& limits = {});

/// Edge given by indices into the vertex list it accompanies.
struct IndexedEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  EdgeKind kind = EdgeKind::Alpha;
};

/// Sorts vertices by printed form, renumbers the edges accordingly and sorts
/// them. Duplicate edges are kept so callers can detect them.
RewriteGraph make_rewrite_graph(std::vector<Bracketing> vertices, std::vector<IndexedEdge> edges);

}  // namespace pa
