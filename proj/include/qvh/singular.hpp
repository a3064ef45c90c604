#pragma once

#include <map>
#include <vector>

#include "qvh/quiver.hpp"
#include "qvh/z2.hpp"

namespace qvh {

// Quiver maps may send an edge to a vertex; homomorphisms send edges to edges;
// inclusions are injective homomorphisms.
enum class morphism_kind { map, homomorphism, inclusion };

// The edge-image entry recording that an edge of the simplex collapsed onto a
// vertex (quiver maps only).
inline constexpr index_t collapse_marker = -1;

// A morphism simplex(n) -> G recorded by its images: vertex_image[t] is the
// vertex id of f(t); edge_image, in lexicographic pair order (i < j), holds
// the edge id of f(i -> j) or collapse_marker.
struct singular_simplex {
	std::vector<index_t> vertex_image;
	std::vector<index_t> edge_image;

	int dimension() const { return static_cast<int>(vertex_image.size()) - 1; }
	bool operator==(const singular_simplex& o) const = default;
};

struct oracle_limits {
	double max_candidates = 1e7;
};

// Exhaustive, duplicate-free, lexicographically ordered enumeration of all
// morphisms simplex(n) -> q of the given kind. Throws bound_error when the
// candidate count |V|^(n+1), or the number of produced simplices, exceeds the
// limit.
std::vector<singular_simplex> enumerate_singular(const filtered_quiver& q, int n,
                                                 morphism_kind kind,
                                                 const oracle_limits& limits = {});

// True iff f(i-1) = f(i) with the connecting edge collapsed, for some i.
// Only quiver maps can be degenerate; other kinds are rejected.
bool is_degenerate(const singular_simplex& f, morphism_kind kind);

// Boundary matrix between two exhaustive canonically ordered enumerations.
z2_matrix singular_boundary(const std::vector<singular_simplex>& at_n,
                            const std::vector<singular_simplex>& at_n_minus_1);

std::vector<index_t> oracle_betti(const filtered_quiver& q, morphism_kind kind, int max_dim,
                                  const oracle_limits& limits = {});

// Betti vectors of the closed sublevel quivers at every critical filtration
// value, plus a final entry at +infinity.
std::map<value_t, std::vector<index_t>> oracle_sublevel_betti(const filtered_quiver& q,
                                                              morphism_kind kind, int max_dim,
                                                              const oracle_limits& limits = {});

std::vector<value_t> critical_values(const filtered_quiver& q);

}  // namespace qvh
