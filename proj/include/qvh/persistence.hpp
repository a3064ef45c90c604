#pragma once

#include <string>
#include <vector>

#include "qvh/complex.hpp"
#include "qvh/z2.hpp"

namespace qvh {

struct matrix_column {
	int dim;
	value_t filt;
	z2_column boundary;  // global row indices, ascending
};

// All cells of dimensions 0..max_dim+1 in one global order: ascending
// (filtration, dimension, build index). Rows and columns share the order, so
// every boundary row precedes its column.
struct filtered_boundary_matrix {
	std::vector<matrix_column> cols;
	std::vector<std::pair<int, index_t>> cell_of;  // column -> (dimension, build index)
};

filtered_boundary_matrix build_matrix(const filtered_delta_set& x, int max_dim);
filtered_boundary_matrix build_matrix(const filtered_cell_complex& x, int max_dim);

struct reduction_options {
	bool clearing = false;        // skip columns already known to reduce to zero
	bool anti_transpose = false;  // reduce the cohomology ordering instead
};

struct persistence_pairing {
	std::vector<std::pair<index_t, index_t>> pairs;  // (birth column, death column)
	std::vector<index_t> essential;                  // unpaired positive columns
};

// Standard left-to-right Z2 column reduction; the low-row map is the pairing.
persistence_pairing reduce(const filtered_boundary_matrix& d, reduction_options opts = {});

struct bar_t {
	int dim;
	value_t birth, death;  // death == +inf for essential classes
};

struct barcode_t {
	std::vector<bar_t> bars;  // sorted by (dim, birth, death)
};

// Zero-length intervals are discarded unless keep_zero_length is set.
barcode_t barcode(const persistence_pairing& pairing, const filtered_boundary_matrix& d,
                  bool keep_zero_length = false);

// Counts intervals with birth <= t < death per dimension 0..max_dim. At
// t == +inf this counts the essential classes, matching the sublevel complex
// of everything with finite filtration.
std::vector<index_t> betti_at(const barcode_t& b, value_t t, int max_dim);

// Header `dim,birth,death`, `inf`/`-inf` literals, rows sorted by (dim, birth, death).
std::string barcode_csv(const barcode_t& b);

}  // namespace qvh
