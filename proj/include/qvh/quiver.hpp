#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qvh/base.hpp"

namespace qvh {

struct quiver_vertex {
	index_t id;
	value_t filt;
};

struct quiver_edge {
	index_t id;
	index_t src, tgt;  // vertex ids
	value_t filt;
};

// A finite quiver with filtration values on vertices and edges. Vertices and
// edges are kept sorted by id; edge filtrations dominate their endpoint
// filtrations in any valid instance (see validate).
struct filtered_quiver {
	std::vector<quiver_vertex> vertices;
	std::vector<quiver_edge> edges;

	index_t vertex_pos(index_t id) const;  // -1 when absent
	index_t edge_pos(index_t id) const;
	void sort_by_id();
};

struct edge_flags {
	bool is_loop = false;
	bool is_multiple = false;
	bool is_double = false;
	bool has_loop = false;  // an endpoint carries a loop
};

// A total order on the vertices, as the permutation of vertex ids.
struct vertex_order {
	std::vector<index_t> ids;
};

// Returns the list of violated invariants; empty when the quiver is valid.
std::vector<std::string> validate(const filtered_quiver& q);

std::vector<edge_flags> compute_edge_flags(const filtered_quiver& q);

// The sublevel quiver of everything with filtration strictly below t.
// Returns nullopt when no vertex survives.
std::optional<filtered_quiver> sublevel(const filtered_quiver& q, value_t t);

// Closed variant (filtration <= t); the state "just after" the critical value t.
std::optional<filtered_quiver> sublevel_closed(const filtered_quiver& q, value_t t);

// Loops removed, parallel edges collapsed to one edge with the minimum
// filtration of the family. Vertices are unchanged.
filtered_quiver reduced_digraph(const filtered_quiver& q);

// Collapses each parallel-edge family whose endpoints carry a loop to a single
// edge at the family minimum filtration; loops and everything else unchanged.
filtered_quiver partially_reduced(const filtered_quiver& q);

vertex_order loop_maximal_order(const filtered_quiver& q);
bool is_loop_maximal(const filtered_quiver& q, const vertex_order& order);

// Edge ids of loops that are contractible without changing homomorphism
// homology: the unique loop at its vertex such that every edge to another
// vertex is not a multiple edge and is either not a double edge or runs to a
// vertex that has a loop of its own.
std::vector<index_t> degenerate_loops(const filtered_quiver& q);

// Removes the given loops; every id must be certified by degenerate_loops.
filtered_quiver loop_contract(const filtered_quiver& q, const std::vector<index_t>& loop_ids);

// The directed n-simplex: vertices 0..n, one edge a -> b for every a < b.
filtered_quiver directed_simplex(index_t n);

// Vertex map of the coface inclusion delta_i : simplex(n) -> simplex(n+1),
// j -> j for j < i and j -> j + 1 otherwise. Requires 0 <= i <= n + 1.
std::vector<index_t> simplex_face(index_t n, index_t i);

filtered_quiver strong_box_product(const filtered_quiver& a, const filtered_quiver& b);

}  // namespace qvh
