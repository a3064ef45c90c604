#include "qvh/singular.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace qvh {

namespace {

struct enum_state {
	const filtered_quiver* q;
	morphism_kind kind;
	int n;
	double limit;
	// adjacency[(u,v)] = edge ids u -> v, ascending; loops live at u == v
	std::unordered_map<index_t, std::unordered_map<index_t, std::vector<index_t>>> adjacency;
	std::vector<index_t> verts;  // vertex ids assigned to positions 0..t-1
	std::vector<index_t> edges;  // full C(n+1, 2) slots in lexicographic pair order
	std::vector<singular_simplex>* out;
};

// Fixes the edge images of the newly placed vertex at position t, iterating
// the choice for pair (i, t) and recursing over i; when all pairs are fixed,
// continues with position t + 1.
void assign_vertex(enum_state& st, int t);

void assign_pair_edges(enum_state& st, int t, int i) {
	if (i == t) {
		assign_vertex(st, t + 1);
		return;
	}
	const index_t slot = pair_index(i, t, st.n + 1);
	index_t u = st.verts[i], v = st.verts[t];
	if (u == v && st.kind == morphism_kind::map) {
		st.edges[slot] = collapse_marker;
		assign_pair_edges(st, t, i + 1);
	}
	auto uit = st.adjacency.find(u);
	if (uit != st.adjacency.end()) {
		auto vit = uit->second.find(v);
		if (vit != uit->second.end()) {
			for (index_t eid : vit->second) {
				st.edges[slot] = eid;
				assign_pair_edges(st, t, i + 1);
			}
		}
	}
}

void assign_vertex(enum_state& st, int t) {
	if (t == st.n + 1) {
		if (static_cast<double>(st.out->size()) >= st.limit)
			throw bound_error(st.limit, "enumeration produced more simplices than the bound");
		st.out->push_back({st.verts, st.edges});
		return;
	}
	for (const auto& v : st.q->vertices) {
		if (st.kind == morphism_kind::inclusion &&
		    std::find(st.verts.begin(), st.verts.end(), v.id) != st.verts.end())
			continue;
		st.verts.push_back(v.id);
		assign_pair_edges(st, t, 0);
		st.verts.pop_back();
	}
}

}  // namespace

std::vector<singular_simplex> enumerate_singular(const filtered_quiver& q, int n,
                                                 morphism_kind kind,
                                                 const oracle_limits& limits) {
	if (n < 0) throw std::invalid_argument("enumerate_singular: n < 0");
	double candidates = std::pow(static_cast<double>(q.vertices.size()), n + 1);
	if (candidates > limits.max_candidates)
		throw bound_error(candidates, "candidate count " + std::to_string(candidates) +
		                                  " exceeds enumeration bound");
	enum_state st;
	st.q = &q;
	st.kind = kind;
	st.n = n;
	st.limit = limits.max_candidates;
	for (const auto& e : q.edges) st.adjacency[e.src][e.tgt].push_back(e.id);
	st.edges.assign(n * (n + 1) / 2, collapse_marker);
	std::vector<singular_simplex> out;
	st.out = &out;
	assign_vertex(st, 0);
	std::sort(out.begin(), out.end(), [](const singular_simplex& a, const singular_simplex& b) {
		if (a.vertex_image != b.vertex_image) return a.vertex_image < b.vertex_image;
		return a.edge_image < b.edge_image;
	});
	return out;
}

bool is_degenerate(const singular_simplex& f, morphism_kind kind) {
	if (kind != morphism_kind::map)
		throw std::invalid_argument("is_degenerate: only quiver maps can be degenerate");
	const index_t m = static_cast<index_t>(f.vertex_image.size());
	for (index_t i = 1; i < m; ++i)
		if (f.vertex_image[i - 1] == f.vertex_image[i] &&
		    f.edge_image[pair_index(i - 1, i, m)] == collapse_marker)
			return true;
	return false;
}

namespace {

singular_simplex face_of(const singular_simplex& f, int drop) {
	const int n = f.dimension();
	singular_simplex g;
	g.vertex_image.reserve(n);
	for (int t = 0; t <= n; ++t)
		if (t != drop) g.vertex_image.push_back(f.vertex_image[t]);
	auto shift = [&](int t) { return t < drop ? t : t + 1; };
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j)
			g.edge_image.push_back(f.edge_image[pair_index(shift(i), shift(j), n + 1)]);
	return g;
}

struct simplex_hash {
	std::size_t operator()(const singular_simplex& s) const {
		vector_hash h;
		return h(s.vertex_image) * 31 + h(s.edge_image);
	}
};

}  // namespace

z2_matrix singular_boundary(const std::vector<singular_simplex>& at_n,
                            const std::vector<singular_simplex>& at_n_minus_1) {
	std::unordered_map<singular_simplex, index_t, simplex_hash> index_of;
	for (std::size_t i = 0; i < at_n_minus_1.size(); ++i)
		index_of[at_n_minus_1[i]] = static_cast<index_t>(i);
	z2_matrix m;
	m.rows = static_cast<index_t>(at_n_minus_1.size());
	m.cols.reserve(at_n.size());
	for (const auto& f : at_n) {
		std::vector<index_t> rows;
		for (int i = 0; i <= f.dimension(); ++i) {
			auto it = index_of.find(face_of(f, i));
			if (it == index_of.end())
				throw std::logic_error("singular_boundary: face missing from enumeration");
			rows.push_back(it->second);
		}
		m.cols.push_back(odd_rows(std::move(rows)));
	}
	return m;
}

std::vector<index_t> oracle_betti(const filtered_quiver& q, morphism_kind kind, int max_dim,
                                  const oracle_limits& limits) {
	std::vector<std::vector<singular_simplex>> chains;
	for (int n = 0; n <= max_dim + 1; ++n) chains.push_back(enumerate_singular(q, n, kind, limits));
	std::vector<index_t> rank(max_dim + 2, 0);
	for (int n = 1; n <= max_dim + 1; ++n)
		rank[n] = z2_rank(singular_boundary(chains[n], chains[n - 1]));
	std::vector<index_t> out(max_dim + 1);
	for (int n = 0; n <= max_dim; ++n)
		out[n] = static_cast<index_t>(chains[n].size()) - rank[n] - rank[n + 1];
	return out;
}

std::vector<value_t> critical_values(const filtered_quiver& q) {
	std::set<value_t> vals;
	for (const auto& v : q.vertices)
		if (v.filt < pos_inf) vals.insert(v.filt);
	for (const auto& e : q.edges)
		if (e.filt < pos_inf) vals.insert(e.filt);
	return {vals.begin(), vals.end()};
}

std::map<value_t, std::vector<index_t>> oracle_sublevel_betti(const filtered_quiver& q,
                                                              morphism_kind kind, int max_dim,
                                                              const oracle_limits& limits) {
	std::map<value_t, std::vector<index_t>> out;
	auto betti_of = [&](const std::optional<filtered_quiver>& sub) {
		if (!sub) return std::vector<index_t>(max_dim + 1, 0);
		return oracle_betti(*sub, kind, max_dim, limits);
	};
	for (value_t c : critical_values(q)) out[c] = betti_of(sublevel_closed(q, c));
	out[pos_inf] = betti_of(sublevel(q, pos_inf));
	return out;
}

}  // namespace qvh
