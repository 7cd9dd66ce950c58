#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pa/brackets.hpp"
#include "pa/exact.hpp"
#include "pa/limits.hpp"
#include "pa/nestedsets.hpp"

namespace pa {

struct Point {
  std::vector<Rational> coords;

  std::string to_string() const;

  friend bool operator==(const Point&, const Point&) = default;
};

enum class Relation { Equality, AtLeast };

/// coeffs . x (= | >=) rhs over x_0..x_n.
struct Hyperplane {
  std::vector<Integer> coeffs;
  Rational rhs;
  Relation relation = Relation::AtLeast;

  Rational lhs(const Point& p) const;

  /// Sign of lhs(p) - rhs.
  int side(const Point& p) const;

  /// "x1 + 2x2 >= 25/2"
  std::string to_string() const;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// (3^k - 3k) / (3^n - n - 1), the fractional part of kappa.
Rational epsilon(int k, int n);

/// (3^(k+l+1) - 3^(l+1)) / 2 + epsilon(k); requires 1 <= k <= k + l <= n.
Rational kappa(int k, int l, int n);

/// x_0 + ... + x_n = 3^(n+1)
Hyperplane ambient_hyperplane(int n);

/// Coefficient j on the j-th extension label, depth k on every core label,
/// right-hand side kappa(k, |core| - 1).
Hyperplane facet_inequality(const Chain& c, int n);

struct HRepresentation {
  int n = 0;
  Hyperplane ambient;
  std::vector<Chain> chains;        // canonical B1 order
  std::vector<Hyperplane> facets;   // facets[i] belongs to chains[i]

  /// Row of `c`; throws std::out_of_range if absent.
  const Hyperplane& facet_of(const Chain& c) const;
};

HRepresentation h_representation(int n);

/// Solves the n facet equalities of v together with the ambient hyperplane.
Point vertex_coordinates(const NestedSet& v, int n);
Point vertex_coordinates(const NestedSet& v, const HRepresentation& h);

struct VertexReport {
  Point vertex;
  std::vector<Chain> tight;     // facets met with equality
  std::vector<Chain> violated;  // facets not satisfied at all
  bool strict_ok = false;       // every non-tight facet holds strictly
  bool multiplicity_ok = false; // |tight| == n
  bool tight_matches = false;   // tight == v

  bool ok() const { return strict_ok && multiplicity_ok && tight_matches; }
};

VertexReport verify_vertex(const NestedSet& v, int n);
VertexReport verify_vertex(const NestedSet& v, const HRepresentation& h);

/// x -> linear * x + offset
struct AffineMap {
  RationalMatrix linear;
  std::vector<Rational> offset;

  std::vector<Rational> apply(std::span<const Rational> x) const;
};

/// The normalization u = h^-1 o p for the standard full chain
/// {{1..n}, ..., {n}}. `h` embeds R^n into x_0 = 0; `u` maps R^(n+1) to R^n
/// by dropping x_0 and inverting h.
struct UNormalization {
  int n = 0;
  Integer scale;             // 3^n - n - 1
  RationalMatrix l;          // n x n
  RationalMatrix l_inverse;  // n x n
  std::vector<Rational> w;   // (3^n - 3^(n-1), ..., 6, 3)
  AffineMap h;               // R^n -> R^(n+1)
  AffineMap u;               // R^(n+1) -> R^n
};

UNormalization normalize_u(int n);

/// A hyperplane with rational coefficients over x'_1..x'_n.
struct RationalHyperplane {
  std::vector<Rational> coeffs;
  Rational rhs;

  /// Scaled so the first nonzero coefficient is 1.
  RationalHyperplane normalized() const;

  friend bool operator==(const RationalHyperplane&, const RationalHyperplane&) = default;
};

/// The hyperplane {x' : H(map(x'))} for an affine map into R^(n+1).
RationalHyperplane pull_back(const Hyperplane& hp, const AffineMap& map);

/// The standard full chain {{1..n}, {2..n}, ..., {n}}.
Chain standard_full_chain(int n);

/// The interval Y of 1..n attached to a chain below the standard full chain;
/// throws std::invalid_argument for other chains.
std::vector<Label> u_correspondent(const Chain& c, int n);

/// The n points spanning the slice of the permutohedron by
/// x_1 + 2x_2 + ... + n x_n = kappa(n, 0).
std::vector<Point> top_simplex_points(int n);

/// Vertices are the 0-faces (as bracketings); edges join 0-faces sharing
/// n - 1 chains, kind Alpha iff the shared 1-face holds a full chain.
RewriteGraph polytope_graph(int n, const EnumerationLimits& limits = {});

/// f_0, ..., f_(n-1)
std::vector<std::uint64_t> f_vector(int n, const EnumerationLimits& limits = {});

/// Facets whose tight vertices span less than an (n-1)-dimensional affine
/// space. Empty when every inequality is facet-defining.
std::vector<Chain> redundant_facets(const HRepresentation& h, const std::vector<Point>& points);

}  // namespace pa
