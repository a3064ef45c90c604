#include "qvh/quiver.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace qvh {

namespace {

template <typename T>
index_t pos_by_id(const std::vector<T>& items, index_t id) {
	auto it = std::lower_bound(items.begin(), items.end(), id,
	                           [](const T& a, index_t b) { return a.id < b; });
	if (it == items.end() || it->id != id) return -1;
	return static_cast<index_t>(it - items.begin());
}

std::unordered_set<index_t> looped_vertices(const filtered_quiver& q) {
	std::unordered_set<index_t> out;
	for (const auto& e : q.edges)
		if (e.src == e.tgt) out.insert(e.src);
	return out;
}

}  // namespace

index_t filtered_quiver::vertex_pos(index_t id) const { return pos_by_id(vertices, id); }
index_t filtered_quiver::edge_pos(index_t id) const { return pos_by_id(edges, id); }

void filtered_quiver::sort_by_id() {
	std::sort(vertices.begin(), vertices.end(),
	          [](const quiver_vertex& a, const quiver_vertex& b) { return a.id < b.id; });
	std::sort(edges.begin(), edges.end(),
	          [](const quiver_edge& a, const quiver_edge& b) { return a.id < b.id; });
}

std::vector<std::string> validate(const filtered_quiver& q) {
	std::vector<std::string> report;
	if (q.vertices.empty()) report.push_back("vertex set is empty");
	for (std::size_t i = 0; i + 1 < q.vertices.size(); ++i)
		if (q.vertices[i].id >= q.vertices[i + 1].id)
			report.push_back("vertex ids not strictly ascending at position " + std::to_string(i + 1));
	for (std::size_t i = 0; i + 1 < q.edges.size(); ++i)
		if (q.edges[i].id >= q.edges[i + 1].id)
			report.push_back("edge ids not strictly ascending at position " + std::to_string(i + 1));
	for (const auto& v : q.vertices)
		if (std::isnan(v.filt)) report.push_back("vertex " + std::to_string(v.id) + ": filtration is NaN");
	for (const auto& e : q.edges) {
		const std::string tag = "edge " + std::to_string(e.id);
		if (std::isnan(e.filt)) report.push_back(tag + ": filtration is NaN");
		index_t sp = q.vertex_pos(e.src), tp = q.vertex_pos(e.tgt);
		if (sp < 0) report.push_back(tag + ": dangling source " + std::to_string(e.src));
		if (tp < 0) report.push_back(tag + ": dangling target " + std::to_string(e.tgt));
		if (sp >= 0 && e.filt < q.vertices[sp].filt)
			report.push_back(tag + ": efilt < source vfilt");
		if (tp >= 0 && e.filt < q.vertices[tp].filt)
			report.push_back(tag + ": efilt < target vfilt");
	}
	return report;
}

std::vector<edge_flags> compute_edge_flags(const filtered_quiver& q) {
	std::map<std::pair<index_t, index_t>, int> pair_count;
	for (const auto& e : q.edges) pair_count[{e.src, e.tgt}]++;
	auto loops = looped_vertices(q);
	std::vector<edge_flags> out(q.edges.size());
	for (std::size_t i = 0; i < q.edges.size(); ++i) {
		const auto& e = q.edges[i];
		edge_flags f;
		f.is_loop = e.src == e.tgt;
		f.is_multiple = pair_count[{e.src, e.tgt}] > 1;
		f.is_double = e.src != e.tgt && pair_count.count({e.tgt, e.src}) > 0;
		f.has_loop = loops.count(e.src) || loops.count(e.tgt);
		out[i] = f;
	}
	return out;
}

static std::optional<filtered_quiver> sublevel_impl(const filtered_quiver& q, value_t t,
                                                    bool closed) {
	auto below = [&](value_t f) { return closed ? f <= t : f < t; };
	filtered_quiver out;
	for (const auto& v : q.vertices)
		if (below(v.filt)) out.vertices.push_back(v);
	if (out.vertices.empty()) return std::nullopt;
	for (const auto& e : q.edges)
		if (below(e.filt) && out.vertex_pos(e.src) >= 0 && out.vertex_pos(e.tgt) >= 0)
			out.edges.push_back(e);
	return out;
}

std::optional<filtered_quiver> sublevel(const filtered_quiver& q, value_t t) {
	return sublevel_impl(q, t, false);
}

std::optional<filtered_quiver> sublevel_closed(const filtered_quiver& q, value_t t) {
	return sublevel_impl(q, t, true);
}

filtered_quiver reduced_digraph(const filtered_quiver& q) {
	filtered_quiver out;
	out.vertices = q.vertices;
	std::map<std::pair<index_t, index_t>, value_t> best;
	for (const auto& e : q.edges) {
		if (e.src == e.tgt) continue;
		auto key = std::make_pair(e.src, e.tgt);
		auto it = best.find(key);
		if (it == best.end() || e.filt < it->second) best[key] = e.filt;
	}
	// Fresh canonical edge ids: sequential in (src, tgt) order.
	index_t next_id = 0;
	for (const auto& [key, filt] : best)
		out.edges.push_back({next_id++, key.first, key.second, filt});
	return out;
}

filtered_quiver partially_reduced(const filtered_quiver& q) {
	auto loops = looped_vertices(q);
	std::map<std::pair<index_t, index_t>, std::vector<index_t>> families;
	for (std::size_t i = 0; i < q.edges.size(); ++i) {
		const auto& e = q.edges[i];
		if (e.src != e.tgt) families[{e.src, e.tgt}].push_back(static_cast<index_t>(i));
	}
	filtered_quiver out;
	out.vertices = q.vertices;
	index_t max_id = 0;
	for (const auto& e : q.edges) max_id = std::max(max_id, e.id);
	std::map<std::pair<index_t, index_t>, value_t> collapsed;
	std::set<index_t> drop;
	for (const auto& [key, members] : families) {
		bool has_loop = loops.count(key.first) || loops.count(key.second);
		if (members.size() < 2 || !has_loop) continue;
		value_t fmin = pos_inf;
		for (index_t p : members) {
			fmin = std::min(fmin, q.edges[p].filt);
			drop.insert(p);
		}
		collapsed[key] = fmin;
	}
	for (std::size_t i = 0; i < q.edges.size(); ++i)
		if (!drop.count(static_cast<index_t>(i))) out.edges.push_back(q.edges[i]);
	index_t next_id = max_id + 1;
	for (const auto& [key, filt] : collapsed)
		out.edges.push_back({next_id++, key.first, key.second, filt});
	out.sort_by_id();
	return out;
}

vertex_order loop_maximal_order(const filtered_quiver& q) {
	auto loops = looped_vertices(q);
	vertex_order order;
	for (const auto& v : q.vertices)
		if (!loops.count(v.id)) order.ids.push_back(v.id);
	for (const auto& v : q.vertices)
		if (loops.count(v.id)) order.ids.push_back(v.id);
	return order;
}

bool is_loop_maximal(const filtered_quiver& q, const vertex_order& order) {
	if (order.ids.size() != q.vertices.size()) return false;
	std::unordered_set<index_t> seen;
	for (index_t id : order.ids)
		if (q.vertex_pos(id) < 0 || !seen.insert(id).second) return false;
	auto loops = looped_vertices(q);
	bool saw_loop = false;
	for (index_t id : order.ids) {
		if (loops.count(id))
			saw_loop = true;
		else if (saw_loop)
			return false;
	}
	return true;
}

std::vector<index_t> degenerate_loops(const filtered_quiver& q) {
	auto loops = looped_vertices(q);
	auto flags = compute_edge_flags(q);
	std::unordered_map<index_t, int> loop_count;
	for (const auto& e : q.edges)
		if (e.src == e.tgt) loop_count[e.src]++;
	std::vector<index_t> out;
	for (std::size_t i = 0; i < q.edges.size(); ++i) {
		const auto& l = q.edges[i];
		if (l.src != l.tgt || loop_count[l.src] != 1) continue;
		bool ok = true;
		// Quantified over incident edges in either direction.
		for (std::size_t j = 0; j < q.edges.size(); ++j) {
			const auto& e = q.edges[j];
			if (e.src == e.tgt) continue;
			index_t other;
			if (e.src == l.src)
				other = e.tgt;
			else if (e.tgt == l.src)
				other = e.src;
			else
				continue;
			if (flags[j].is_multiple || (!loops.count(other) && flags[j].is_double)) {
				ok = false;
				break;
			}
		}
		if (ok) out.push_back(l.id);
	}
	return out;
}

filtered_quiver loop_contract(const filtered_quiver& q, const std::vector<index_t>& loop_ids) {
	auto certified = degenerate_loops(q);
	std::set<index_t> cert(certified.begin(), certified.end());
	std::set<index_t> drop;
	for (index_t id : loop_ids) {
		if (!cert.count(id))
			throw std::invalid_argument("loop_contract: edge " + std::to_string(id) +
			                            " is not a degenerate loop");
		drop.insert(id);
	}
	filtered_quiver out;
	out.vertices = q.vertices;
	for (const auto& e : q.edges)
		if (!drop.count(e.id)) out.edges.push_back(e);
	return out;
}

filtered_quiver directed_simplex(index_t n) {
	if (n < 0) throw std::invalid_argument("directed_simplex: n < 0");
	filtered_quiver q;
	for (index_t v = 0; v <= n; ++v) q.vertices.push_back({v, neg_inf});
	index_t id = 0;
	for (index_t a = 0; a <= n; ++a)
		for (index_t b = a + 1; b <= n; ++b) q.edges.push_back({id++, a, b, neg_inf});
	return q;
}

std::vector<index_t> simplex_face(index_t n, index_t i) {
	if (n < 0 || i < 0 || i > n + 1) throw std::invalid_argument("simplex_face: bad arguments");
	std::vector<index_t> map(n + 1);
	for (index_t j = 0; j <= n; ++j) map[j] = j < i ? j : j + 1;
	return map;
}

filtered_quiver strong_box_product(const filtered_quiver& a, const filtered_quiver& b) {
	filtered_quiver out;
	const index_t nb = static_cast<index_t>(b.vertices.size());
	auto vid = [&](index_t ia, index_t ib) { return ia * nb + ib; };
	for (std::size_t ia = 0; ia < a.vertices.size(); ++ia)
		for (std::size_t ib = 0; ib < b.vertices.size(); ++ib)
			out.vertices.push_back({vid(static_cast<index_t>(ia), static_cast<index_t>(ib)),
			                        std::max(a.vertices[ia].filt, b.vertices[ib].filt)});
	index_t id = 0;
	// E x V, then V x E, then E x E; filtration of a product cell is the max of factors.
	for (const auto& e : a.edges)
		for (std::size_t ib = 0; ib < b.vertices.size(); ++ib)
			out.edges.push_back({id++, vid(a.vertex_pos(e.src), static_cast<index_t>(ib)),
			                     vid(a.vertex_pos(e.tgt), static_cast<index_t>(ib)),
			                     std::max(e.filt, b.vertices[ib].filt)});
	for (std::size_t ia = 0; ia < a.vertices.size(); ++ia)
		for (const auto& e : b.edges)
			out.edges.push_back({id++, vid(static_cast<index_t>(ia), b.vertex_pos(e.src)),
			                     vid(static_cast<index_t>(ia), b.vertex_pos(e.tgt)),
			                     std::max(a.vertices[ia].filt, e.filt)});
	for (const auto& ea : a.edges)
		for (const auto& eb : b.edges)
			out.edges.push_back({id++, vid(a.vertex_pos(ea.src), b.vertex_pos(eb.src)),
			                     vid(a.vertex_pos(ea.tgt), b.vertex_pos(eb.tgt)),
			                     std::max(ea.filt, eb.filt)});
	return out;
}

}  // namespace qvh
