#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace qvh {

typedef std::int64_t index_t;
typedef double value_t;

inline constexpr value_t neg_inf = -std::numeric_limits<value_t>::infinity();
inline constexpr value_t pos_inf = std::numeric_limits<value_t>::infinity();

// Thrown when a text input cannot be parsed; line is 1-based.
struct parse_error : std::runtime_error {
	int line;
	parse_error(int line_, const std::string& what_)
	    : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Thrown when a brute-force enumeration would exceed the configured bound.
struct bound_error : std::runtime_error {
	double candidates;
	bound_error(double candidates_, const std::string& what_)
	    : std::runtime_error(what_), candidates(candidates_) {}
};

inline index_t binomial(index_t n, index_t k) {
	if (k < 0 || k > n) return 0;
	if (k > n - k) k = n - k;
	index_t b = 1;
	for (index_t i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
	return b;
}

// Lexicographic index of the pair (i, j), i < j, among all pairs of {0, ..., m - 1}.
inline index_t pair_index(index_t i, index_t j, index_t m) {
	return i * (2 * m - i - 1) / 2 + (j - i - 1);
}

// Runs fn(0), ..., fn(n - 1), chunked over `workers` threads. Each fn(i) must write
// only to its own output slot so the merged result is identical for any worker count.
inline void parallel_for(index_t n, int workers, const std::function<void(index_t)>& fn) {
	if (workers <= 1 || n <= 1) {
		for (index_t i = 0; i < n; ++i) fn(i);
		return;
	}
	int t = static_cast<int>(std::min<index_t>(workers, n));
	std::vector<std::thread> pool;
	pool.reserve(t);
	for (int w = 0; w < t; ++w)
		pool.emplace_back([&, w]() {
			for (index_t i = w; i < n; i += t) fn(i);
		});
	for (auto& th : pool) th.join();
}

struct vector_hash {
	std::size_t operator()(const std::vector<index_t>& v) const {
		std::size_t h = 1469598103934665603ull;
		for (index_t x : v) {
			h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
			h *= 1099511628211ull;
		}
		return h;
	}
};

}  // namespace qvh
