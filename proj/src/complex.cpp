#include "qvh/complex.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace qvh {

namespace {

std::string where(int dim, std::size_t idx) {
	return "dim " + std::to_string(dim) + " cell " + std::to_string(idx);
}

// Range and monotonicity checks shared by both complex kinds.
void check_common(const graded_cells& dims, std::vector<std::string>& report) {
	for (std::size_t n = 1; n < dims.size(); ++n) {
		const index_t prev = static_cast<index_t>(dims[n - 1].size());
		for (std::size_t i = 0; i < dims[n].size(); ++i) {
			const cell_t& c = dims[n][i];
			if (std::isnan(c.filt)) report.push_back(where(n, i) + ": filtration is NaN");
			for (index_t f : c.faces) {
				if (f < 0 || f >= prev) {
					report.push_back(where(n, i) + ": face index " + std::to_string(f) +
					                 " out of range");
					continue;
				}
				if (dims[n - 1][f].filt > c.filt)
					report.push_back(where(n, i) + ": face filtration exceeds cell filtration");
			}
		}
	}
}

}  // namespace

std::vector<std::string> validate_faces(const filtered_delta_set& x) {
	std::vector<std::string> report;
	check_common(x.dims, report);
	if (!report.empty()) return report;
	for (std::size_t n = 1; n < x.dims.size(); ++n)
		for (std::size_t i = 0; i < x.dims[n].size(); ++i)
			if (x.dims[n][i].faces.size() != n + 1)
				report.push_back(where(n, i) + ": expected " + std::to_string(n + 1) + " faces");
	if (!report.empty()) return report;
	// d_i d_j = d_{j-1} d_i for i < j, checked on every cell of dimension >= 2.
	for (std::size_t n = 2; n < x.dims.size(); ++n)
		for (std::size_t c = 0; c < x.dims[n].size(); ++c) {
			const auto& faces = x.dims[n][c].faces;
			for (std::size_t j = 1; j < faces.size(); ++j)
				for (std::size_t i = 0; i < j; ++i) {
					index_t lhs = x.dims[n - 1][faces[j]].faces[i];
					index_t rhs = x.dims[n - 1][faces[i]].faces[j - 1];
					if (lhs != rhs)
						report.push_back(where(n, c) + ": face identity d" + std::to_string(i) +
						                 " d" + std::to_string(j) + " violated");
				}
		}
	return report;
}

std::vector<std::string> validate_faces(const filtered_cell_complex& x) {
	std::vector<std::string> report;
	check_common(x.dims, report);
	if (!report.empty()) return report;
	// Boundary-of-boundary vanishes over Z2.
	for (std::size_t n = 2; n < x.dims.size(); ++n)
		for (std::size_t c = 0; c < x.dims[n].size(); ++c) {
			std::vector<index_t> acc;
			for (index_t f : odd_rows(x.dims[n][c].faces))
				for (index_t g : x.dims[n - 1][f].faces) acc.push_back(g);
			if (!odd_rows(std::move(acc)).empty())
				report.push_back(where(n, c) + ": boundary of boundary is nonzero");
		}
	return report;
}

std::vector<std::string> validate_simplicial(const filtered_simplicial_complex& k) {
	std::vector<std::string> report;
	std::vector<std::unordered_map<std::vector<index_t>, value_t, vector_hash>> seen(k.dims.size());
	for (std::size_t n = 0; n < k.dims.size(); ++n)
		for (std::size_t i = 0; i < k.dims[n].size(); ++i) {
			const auto& s = k.dims[n][i];
			if (s.vertices.size() != n + 1)
				report.push_back(where(n, i) + ": expected " + std::to_string(n + 1) + " vertices");
			else if (!std::is_sorted(s.vertices.begin(), s.vertices.end()) ||
			         std::adjacent_find(s.vertices.begin(), s.vertices.end()) != s.vertices.end())
				report.push_back(where(n, i) + ": vertex list not strictly ascending");
			if (seen[n].count(s.vertices))
				report.push_back(where(n, i) + ": duplicate simplex");
			seen[n][s.vertices] = s.filt;
		}
	if (!report.empty()) return report;
	for (std::size_t n = 1; n < k.dims.size(); ++n)
		for (std::size_t i = 0; i < k.dims[n].size(); ++i) {
			const auto& s = k.dims[n][i];
			for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
				std::vector<index_t> face = s.vertices;
				face.erase(face.begin() + drop);
				auto it = seen[n - 1].find(face);
				if (it == seen[n - 1].end())
					report.push_back(where(n, i) + ": not closed under subsets");
				else if (it->second > s.filt)
					report.push_back(where(n, i) + ": face filtration exceeds simplex filtration");
			}
		}
	return report;
}

filtered_delta_set from_simplicial(const filtered_simplicial_complex& k,
                                   const vertex_order& order) {
	std::unordered_map<index_t, index_t> rank;
	for (std::size_t i = 0; i < order.ids.size(); ++i)
		rank[order.ids[i]] = static_cast<index_t>(i);
	auto ordered = [&](std::vector<index_t> verts) {
		std::sort(verts.begin(), verts.end(),
		          [&](index_t a, index_t b) { return rank.at(a) < rank.at(b); });
		return verts;
	};
	filtered_delta_set out;
	out.dims.resize(k.dims.size());
	std::vector<std::unordered_map<std::vector<index_t>, index_t, vector_hash>> index_of(
	    k.dims.size());
	for (std::size_t n = 0; n < k.dims.size(); ++n) {
		for (std::size_t i = 0; i < k.dims[n].size(); ++i) {
			const auto& s = k.dims[n][i];
			std::vector<index_t> verts = ordered(s.vertices);
			index_of[n][verts] = static_cast<index_t>(i);
			cell_t c;
			c.filt = s.filt;
			if (n == 0) {
				c.faces = verts;
			} else {
				for (std::size_t drop = 0; drop < verts.size(); ++drop) {
					std::vector<index_t> face = verts;
					face.erase(face.begin() + drop);
					c.faces.push_back(index_of[n - 1].at(face));
				}
			}
			out.dims[n].push_back(std::move(c));
		}
	}
	return out;
}

z2_matrix chain_boundary(const graded_cells& dims, int n) {
	z2_matrix m;
	if (n < 1 || n >= static_cast<int>(dims.size())) {
		m.rows = (n >= 1 && n - 1 < static_cast<int>(dims.size()))
		             ? static_cast<index_t>(dims[n - 1].size())
		             : 0;
		return m;
	}
	m.rows = static_cast<index_t>(dims[n - 1].size());
	m.cols.reserve(dims[n].size());
	for (const auto& c : dims[n]) m.cols.push_back(odd_rows(c.faces));
	return m;
}

std::vector<index_t> betti(const graded_cells& dims, int max_dim) {
	std::vector<index_t> out(max_dim + 1, 0);
	std::vector<index_t> rank(max_dim + 2, 0);
	for (int n = 1; n <= max_dim + 1; ++n) rank[n] = z2_rank(chain_boundary(dims, n));
	for (int n = 0; n <= max_dim; ++n) {
		index_t cells = n < static_cast<int>(dims.size()) ? static_cast<index_t>(dims[n].size()) : 0;
		out[n] = cells - rank[n] - rank[n + 1];
	}
	return out;
}

std::vector<index_t> betti(const filtered_simplicial_complex& k, int max_dim) {
	vertex_order order;
	for (const auto& v : k.dims.empty() ? std::vector<simplex_entry>{} : k.dims[0])
		order.ids.push_back(v.vertices[0]);
	return betti(from_simplicial(k, order).dims, max_dim);
}

}  // namespace qvh
