#pragma once

#include <string>
#include <vector>

#include "qvh/base.hpp"
#include "qvh/quiver.hpp"
#include "qvh/z2.hpp"

namespace qvh {

// One cell of a graded complex. In dimension 0, faces holds the single vertex
// id; in dimension n >= 1 it holds indices into the previous dimension — for a
// delta set exactly the n + 1 images of d_0..d_n in that order, for a cell
// complex an arbitrary-length Z2 boundary list.
struct cell_t {
	std::vector<index_t> faces;
	value_t filt;
};

typedef std::vector<std::vector<cell_t>> graded_cells;

struct filtered_delta_set {
	graded_cells dims;
};

struct filtered_cell_complex {
	graded_cells dims;
};

// Simplices as ascending vertex-id lists, graded by dimension.
struct simplex_entry {
	std::vector<index_t> vertices;
	value_t filt;
};

struct filtered_simplicial_complex {
	std::vector<std::vector<simplex_entry>> dims;
};

// A k-partial (n+1)-simplex: the already assembled tail of a prospective
// boundary. faces[t] is the image of d_{n+1-t}, so faces.front() is the seed
// face d_{n+1} and faces.size() == k + 1 for a k-partial simplex.
struct partial_simplex {
	std::vector<index_t> faces;
	value_t filt;
};

// Empty report iff the semi-simplicial identities (respectively boundary-of-
// boundary over Z2) and filtration monotonicity hold, and all indices are in
// range.
std::vector<std::string> validate_faces(const filtered_delta_set& x);
std::vector<std::string> validate_faces(const filtered_cell_complex& x);

std::vector<std::string> validate_simplicial(const filtered_simplicial_complex& k);

// Delta set of a simplicial complex: d_i removes the i-th vertex of a simplex
// under the given total order on vertex ids.
filtered_delta_set from_simplicial(const filtered_simplicial_complex& k, const vertex_order& order);

// Boundary of dimension n over Z2: one column per n-cell holding its odd-
// multiplicity faces. Returns an empty matrix for n above the top dimension.
z2_matrix chain_boundary(const graded_cells& dims, int n);
inline z2_matrix chain_boundary(const filtered_delta_set& x, int n) {
	return chain_boundary(x.dims, n);
}
inline z2_matrix chain_boundary(const filtered_cell_complex& x, int n) {
	return chain_boundary(x.dims, n);
}

// Z2 Betti numbers in dimensions 0..max_dim.
std::vector<index_t> betti(const graded_cells& dims, int max_dim);
inline std::vector<index_t> betti(const filtered_delta_set& x, int max_dim) {
	return betti(x.dims, max_dim);
}
inline std::vector<index_t> betti(const filtered_cell_complex& x, int max_dim) {
	return betti(x.dims, max_dim);
}
std::vector<index_t> betti(const filtered_simplicial_complex& k, int max_dim);

}  // namespace qvh
