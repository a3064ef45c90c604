#pragma once

#include <vector>

#include "qvh/base.hpp"

namespace qvh {

// A Z2 chain as the strictly ascending list of rows with coefficient 1.
typedef std::vector<index_t> z2_column;

// Sparse Z2 matrix stored column-wise; rows is the ambient row count.
struct z2_matrix {
	index_t rows = 0;
	std::vector<z2_column> cols;
};

// a ^= b, keeping rows strictly ascending.
void xor_into(z2_column& a, const z2_column& b);

// Collapses a multiset of rows to the rows of odd multiplicity.
z2_column odd_rows(std::vector<index_t> rows);

index_t z2_rank(const z2_matrix& m);

}  // namespace qvh
