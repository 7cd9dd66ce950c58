#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pa/label_set.hpp"
#include "pa/limits.hpp"

namespace pa {

/// An element of the building set B1: a descending chain of label sets
/// A_1 > A_2 > ... > A_k with singleton steps.
///
/// Stored as the innermost set A_k (`core`) together with the labels added
/// on the way out, listed outermost first: A_j = A_{j+1} + {ext[j-1]}.
struct Chain {
  LabelSet core;
  std::vector<Label> ext;

  /// Number of sets in the chain (k).
  int depth() const { return static_cast<int>(ext.size()) + 1; }

  /// |core| - 1 (l).
  int spread() const { return core.size() - 1; }

  /// The outermost set A_1.
  LabelSet top() const;

  /// A_1, ..., A_k, largest first.
  std::vector<LabelSet> sets() const;

  /// Throws std::invalid_argument if the chain is not a member of B1 over {0..n}.
  void validate(int n) const;

  /// Builds a chain from its sets (any order); throws unless they form a
  /// singleton-step chain.
  static Chain from_sets(std::vector<LabelSet> sets);

  /// "[{0,1,3},{0,1},{1}]"
  std::string to_string() const;

  friend bool operator==(const Chain&, const Chain&) = default;
  /// Canonical order: (|core| + |ext|, core, ext), core compared as an
  /// ascending list.
  friend std::strong_ordering operator<=>(const Chain& a, const Chain& b);
};

/// A set of chains kept sorted in canonical order without duplicates.
/// Nestedness is not enforced by the type; see is_nested().
class NestedSet {
 public:
  NestedSet() = default;
  explicit NestedSet(std::vector<Chain> chains);

  const std::vector<Chain>& chains() const { return chains_; }
  std::size_t size() const { return chains_.size(); }
  bool empty() const { return chains_.empty(); }
  auto begin() const { return chains_.begin(); }
  auto end() const { return chains_.end(); }

  bool contains(const Chain& c) const;
  bool includes(const NestedSet& other) const;

  /// Copy with one chain removed.
  NestedSet without(const Chain& c) const;

  /// Number of chains shared with `other`.
  std::size_t common(const NestedSet& other) const;

  /// The set-union of all chains, largest set first.
  std::vector<LabelSet> flattened() const;

  std::string to_string() const;

  friend bool operator==(const NestedSet&, const NestedSet&) = default;
  friend auto operator<=>(const NestedSet& a, const NestedSet& b) {
    return a.chains_ <=> b.chains_;
  }

 private:
  std::vector<Chain> chains_;
};

/// True if the family is totally ordered by inclusion (membership in C1).
bool is_set_chain(std::vector<LabelSet> family);

/// True if the family is a chain of sets with some step of size >= 2
/// (membership in C1 - B1).
bool is_gapped_chain(std::vector<LabelSet> family);

/// Comparable as sets of label sets.
bool comparable(const Chain& a, const Chain& b);

/// Pairwise nestedness: comparable, or the union lies in C1 - B1.
bool compatible(const Chain& a, const Chain& b);

/// Every chain of B1 over {0..n} in canonical order.
std::vector<Chain> enumerate_b1(int n);

/// Pairwise criterion for 1-nestedness.
bool is_nested(std::span<const Chain> cands, int n);
bool is_nested(const NestedSet& s, int n);

/// Checks the definition directly: the union of every antichain of size >= 2
/// must lie in C1 - B1. Exponential in |cands|.
bool is_nested_oracle(std::span<const Chain> cands, int n);

/// Maximal 1-nested sets (0-faces), canonical order. Count is (2n)!/n!.
std::vector<NestedSet> enumerate_vertices(int n, const EnumerationLimits& limits = {});

/// 1-nested sets of cardinality n - dim, obtained as subsets of 0-faces.
std::vector<NestedSet> faces(int n, int dim, const EnumerationLimits& limits = {});

/// Same result as faces(), computed as cliques of the pairwise
/// compatibility graph on B1.
std::vector<NestedSet> faces_by_cliques(int n, int dim, const EnumerationLimits& limits = {});

/// Number of sets of `a` contained in no chain of `face` that is a proper
/// sub-chain of `a`.
int superficial_count(const NestedSet& face, const Chain& a);

/// Chains with n sets (maximal 0-nested sets) among `s`.
std::vector<Chain> full_chains(const NestedSet& s, int n);

std::uint64_t catalan(int n);

/// (2n)!/n!
std::uint64_t vertex_count(int n);

}  // namespace pa
