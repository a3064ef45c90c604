#include "qvh/z2.hpp"

#include <algorithm>
#include <unordered_map>

namespace qvh {

void xor_into(z2_column& a, const z2_column& b) {
	z2_column out;
	out.reserve(a.size() + b.size());
	auto ia = a.begin(), ib = b.begin();
	while (ia != a.end() && ib != b.end()) {
		if (*ia < *ib)
			out.push_back(*ia++);
		else if (*ib < *ia)
			out.push_back(*ib++);
		else {
			++ia;
			++ib;
		}
	}
	out.insert(out.end(), ia, a.end());
	out.insert(out.end(), ib, b.end());
	a.swap(out);
}

z2_column odd_rows(std::vector<index_t> rows) {
	std::sort(rows.begin(), rows.end());
	z2_column out;
	for (std::size_t i = 0; i < rows.size();) {
		std::size_t j = i;
		while (j < rows.size() && rows[j] == rows[i]) ++j;
		if ((j - i) & 1) out.push_back(rows[i]);
		i = j;
	}
	return out;
}

index_t z2_rank(const z2_matrix& m) {
	std::vector<z2_column> cols = m.cols;
	std::unordered_map<index_t, index_t> pivot_of;  // low row -> column holding it
	index_t rank = 0;
	for (std::size_t j = 0; j < cols.size(); ++j) {
		z2_column& c = cols[j];
		while (!c.empty()) {
			auto it = pivot_of.find(c.back());
			if (it == pivot_of.end()) break;
			xor_into(c, cols[it->second]);
		}
		if (!c.empty()) {
			pivot_of[c.back()] = static_cast<index_t>(j);
			++rank;
		}
	}
	return rank;
}

}  // namespace qvh
