#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "pa/brackets.hpp"
#include "pa/geometry.hpp"
#include "pa/limits.hpp"
#include "pa/nestedsets.hpp"

namespace pa {

using Json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes through a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// cdd .ine text: the ambient equality first, then one row per facet in
/// canonical chain order.
std::string hrep_ine(const HRepresentation& h);

Json rational_array(const std::vector<Rational>& v);
Json chain_array(const std::vector<Chain>& chains);

/// One vertex: bracketing, chains, exact coordinates and tight facets.
Json vertex_record(const NestedSet& v, const HRepresentation& h);

/// All vertices in canonical order.
Json vrep_json(int n, const EnumerationLimits& limits = {});

/// Parse, print and look up a bracketing: the vertex record plus round-trip
/// flags. Facets that are 2-faces (n = 3) carry their diagram name.
Json bracketing_record(const Bracketing& b);

std::string graph_dot(const RewriteGraph& g, int n);

/// Faces of one dimension; with `classify` (dim 2 only) every face carries its
/// diagram type, boundary cycle and edge kinds, and a census is attached.
Json faces_json(int n, int dim, bool classify, const EnumerationLimits& limits = {});

/// Mesh of PA_3 in u-normalized coordinates, facets oriented outwards.
std::string off_mesh(int n);

}  // namespace pa
