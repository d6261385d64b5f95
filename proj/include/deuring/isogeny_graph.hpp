#pragma once

// The correspondence
//   D0 = -alpha^q (Y+1)^(q-1) Y,   D1 = -alpha Y^q / (Y+1)^(q-1)
// read as a directed graph on Delta-invariants, restricted to the roots of the
// Deuring polynomial h.

#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "deuring/drinfeld.hpp"

namespace deuring {

/// -alpha^q (Y+1)^(q-1) Y - delta0, a polynomial in Y over the field of delta0.
FieldPoly neighbor_polynomial(const FieldElement& delta0, const PrimeModulus& p);
/// alpha Y^q + delta1 (Y+1)^(q-1), whose roots Y give the edges ending at delta1.
FieldPoly reverse_polynomial(const FieldElement& delta1, const PrimeModulus& p);

/// Targets D1 of the q edges leaving delta0, with multiplicity, sorted by code.
/// Throws DomainError for delta0 = 0 and AmbientTooSmall when `ambient` does
/// not contain all q roots Y.
std::vector<FieldElement> neighbors(const FieldElement& delta0, const PrimeModulus& p, const FieldPtr& ambient);
/// Sources D0 of the q edges entering delta1, with multiplicity.
std::vector<FieldElement> reverse_neighbors(const FieldElement& delta1, const PrimeModulus& p, const FieldPtr& ambient);

struct GraphEdge {
  static constexpr std::size_t kOutside = std::numeric_limits<std::size_t>::max();
  std::size_t from = 0;
  std::size_t to = kOutside;  ///< vertex index, or kOutside when the target is not a vertex
  FieldElement target;
  unsigned multiplicity = 0;
};

struct IsogenyGraph {
  PrimeModulus prime;
  FieldPoly h;
  FieldPtr ambient;
  /// Degree of the ambient field over the residue field.
  unsigned ambient_degree = 1;
  /// Degree over the residue field of the splitting field of h.
  unsigned h_splitting_degree = 1;
  /// Roots of h, sorted by code.
  std::vector<FieldElement> vertices;
  /// Forward edges (D0 -> D1), sorted by (from, target code).
  std::vector<GraphEdge> edges;
  /// Reverse edges: `from` is the vertex D1, `to` the source D0.
  std::vector<GraphEdge> reverse_edges;
  /// Number of neighbor roots Y of multiplicity greater than one.
  std::size_t repeated_roots = 0;
};

/// Vertices are the roots of h (computed directly from the Ore expansion); the
/// ambient field starts as the splitting field of h and is enlarged until every
/// neighbor polynomial splits.
IsogenyGraph build_supersingular_graph(const PrimeModulus& p);
IsogenyGraph build_supersingular_graph(const PrimeModulus& p, const FieldPoly& h);

struct ComponentReport {
  std::size_t size = 0;
  std::size_t expected_size = 0;
  /// out-degree (with multiplicity) -> number of vertices
  std::map<unsigned, std::size_t> out_degree_histogram;
  bool regular = false;
  /// Every edge, in either direction, stays inside the vertex set.
  bool closed = false;
  /// Connected as an undirected multigraph.
  bool connected = false;
  /// Every edge satisfies (D0 + alpha^q)^(q+1)/D0^q = (D1 + alpha)^(q+1)/D1.
  bool edges_on_curve = false;
  std::size_t self_loops = 0;
  unsigned ambient_degree = 1;
  unsigned h_splitting_degree = 1;
  /// Observation only: every vertex lies in F_(q^(2d)).
  bool vertices_in_q2d = false;
  std::vector<std::string> warnings;

  bool ok() const { return size == expected_size && regular && closed && connected && edges_on_curve; }
};

ComponentReport verify_component(const IsogenyGraph& g);

nlohmann::json to_json(const IsogenyGraph& g);
nlohmann::json to_json(const ComponentReport& r);
std::string to_dot(const IsogenyGraph& g);

}  // namespace deuring
