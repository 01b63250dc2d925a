#include "kedge/graph.hpp"

#include <charconv>
#include <deque>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "kedge/errors.hpp"

namespace kedge {

std::optional<Vertex> VertexMapping::local(Vertex original) const {
	for (std::size_t i = 0; i < to_original.size(); ++i)
		if (to_original[i] == original)
			return static_cast<Vertex>(i);
	return std::nullopt;
}

std::vector<Vertex> VertexMapping::lift(std::span<const Vertex> local) const {
	std::vector<Vertex> out;
	out.reserve(local.size());
	for (Vertex v : local)
		out.push_back(original(v));
	return out;
}

VertexSet VertexMapping::lift(const VertexSet &local) const {
	VertexSet out{original_order};
	local.for_each([&](Vertex v) { out.set(original(v)); });
	return out;
}

VertexSet VertexMapping::restrict(const VertexSet &original) const {
	VertexSet out{to_original.size()};
	for (std::size_t i = 0; i < to_original.size(); ++i)
		if (original.test(to_original[i]))
			out.set(i);
	return out;
}

VertexMapping VertexMapping::identity(std::size_t n) {
	VertexMapping m;
	m.original_order = n;
	m.to_original.resize(n);
	for (std::size_t i = 0; i < n; ++i)
		m.to_original[i] = static_cast<Vertex>(i);
	return m;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels) {
	if (!labels.empty() && labels.size() != n)
		throw PreconditionError("label count does not match vertex count");
	Graph g;
	g.rows_.assign(n, Bitset{n});
	g.degrees_.assign(n, 0);
	for (const auto &e : edges) {
		if (e.u >= n || e.v >= n)
			throw PreconditionError("edge endpoint out of range");
		if (e.u == e.v)
			throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
		if (g.rows_[e.u].test(e.v))
			continue;
		g.rows_[e.u].set(e.v);
		g.rows_[e.v].set(e.u);
		++g.degrees_[e.u];
		++g.degrees_[e.v];
		++g.m_;
	}
	g.labels_ = std::move(labels);
	return g;
}

std::string Graph::label(Vertex v) const {
	if (labels_.empty())
		return std::to_string(v);
	return labels_.at(v);
}

std::optional<Vertex> Graph::find_label(std::string_view label) const {
	for (std::size_t v = 0; v < order(); ++v)
		if (this->label(static_cast<Vertex>(v)) == label)
			return static_cast<Vertex>(v);
	return std::nullopt;
}

std::vector<Edge> Graph::edges() const {
	std::vector<Edge> out;
	out.reserve(m_);
	for (Vertex u = 0; u < order(); ++u)
		rows_[u].for_each([&](Vertex v) {
			if (u < v)
				out.push_back({u, v});
		});
	return out;
}

Graph Graph::complement() const {
	const std::size_t n = order();
	Graph g;
	g.rows_.reserve(n);
	g.degrees_.resize(n);
	for (Vertex v = 0; v < n; ++v) {
		Bitset row = Bitset::full(n) - rows_[v];
		row.reset(v);
		g.degrees_[v] = n - 1 - degrees_[v];
		g.rows_.push_back(std::move(row));
	}
	g.m_ = n * (n - (n ? 1 : 0)) / 2 - m_;
	g.labels_ = labels_;
	return g;
}

std::pair<Graph, VertexMapping> Graph::induced(const VertexSet &s) const {
	VertexMapping map;
	map.original_order = order();
	map.to_original = s.to_vector();
	const std::size_t k = map.to_original.size();

	std::vector<Vertex> local(order(), 0);
	for (std::size_t i = 0; i < k; ++i)
		local[map.to_original[i]] = static_cast<Vertex>(i);

	std::vector<Edge> edges;
	for (std::size_t i = 0; i < k; ++i) {
		const Vertex u = map.to_original[i];
		(rows_[u] & s).for_each([&](Vertex v) {
			if (u < v)
				edges.push_back({static_cast<Vertex>(i), local[v]});
		});
	}
	std::vector<std::string> labels;
	if (!labels_.empty())
		for (Vertex v : map.to_original)
			labels.push_back(labels_[v]);
	return {from_edges(k, edges, std::move(labels)), std::move(map)};
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
	std::vector<std::string_view> out;
	std::size_t i = 0;
	while (i < line.size()) {
		while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
			++i;
		std::size_t j = i;
		while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
			++j;
		if (j > i)
			out.push_back(line.substr(i, j - i));
		i = j;
	}
	return out;
}

std::size_t parse_count(std::string_view tok, std::size_t line) {
	std::size_t value = 0;
	auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
	if (ec != std::errc{} || ptr != tok.data() + tok.size())
		throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
	return value;
}

Graph parse_dimacs(const std::vector<std::pair<std::size_t, std::string_view>> &lines) {
	std::optional<std::size_t> n;
	std::vector<Edge> edges;
	for (const auto &[lineno, line] : lines) {
		auto toks = split_tokens(line);
		if (toks[0] == "c")
			continue;
		if (toks[0] == "p") {
			if (n)
				throw ParseError(lineno, "duplicate problem line");
			if (toks.size() != 4)
				throw ParseError(lineno, "problem line must read 'p edge <n> <m>'");
			n = parse_count(toks[2], lineno);
			continue;
		}
		if (toks[0] == "e") {
			if (!n)
				throw ParseError(lineno, "edge before problem line");
			if (toks.size() != 3)
				throw ParseError(lineno, "edge line must read 'e <u> <v>'");
			const auto u = parse_count(toks[1], lineno);
			const auto v = parse_count(toks[2], lineno);
			if (u < 1 || v < 1 || u > *n || v > *n)
				throw ParseError(lineno, "vertex out of range 1.." + std::to_string(*n));
			if (u == v)
				throw ParseError(lineno, "self-loop at vertex " + std::string(toks[1]));
			edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
			continue;
		}
		throw ParseError(lineno, "unknown DIMACS line type '" + std::string(toks[0]) + "'");
	}
	if (!n)
		throw ParseError(0, "missing problem line");
	return Graph::from_edges(*n, edges);
}

Graph parse_edge_list(const std::vector<std::pair<std::size_t, std::string_view>> &lines) {
	std::unordered_map<std::string, Vertex> ids;
	std::vector<std::string> labels;
	std::vector<Edge> edges;
	auto intern = [&](std::string_view tok) {
		auto [it, inserted] = ids.try_emplace(std::string(tok), static_cast<Vertex>(labels.size()));
		if (inserted)
			labels.emplace_back(tok);
		return it->second;
	};
	for (const auto &[lineno, line] : lines) {
		auto toks = split_tokens(line);
		if (toks.size() == 1) {
			intern(toks[0]);
			continue;
		}
		if (toks.size() != 2)
			throw ParseError(lineno, "expected 'u v', got " + std::to_string(toks.size()) + " tokens");
		if (toks[0] == toks[1])
			throw ParseError(lineno, "self-loop at vertex " + std::string(toks[0]));
		const Vertex u = intern(toks[0]);
		const Vertex v = intern(toks[1]);
		edges.push_back({u, v});
	}
	const std::size_t n = labels.size();
	return Graph::from_edges(n, edges, std::move(labels));
}

} // namespace

Graph parse_graph(std::string_view text) {
	std::vector<std::pair<std::size_t, std::string_view>> lines;
	std::size_t lineno = 0;
	std::size_t pos = 0;
	while (pos <= text.size()) {
		std::size_t end = text.find('\n', pos);
		if (end == std::string_view::npos)
			end = text.size();
		++lineno;
		std::string_view line = text.substr(pos, end - pos);
		if (auto hash = line.find('#'); hash != std::string_view::npos)
			line = line.substr(0, hash);
		if (!split_tokens(line).empty())
			lines.emplace_back(lineno, line);
		pos = end + 1;
	}
	if (!lines.empty()) {
		auto first = split_tokens(lines.front().second)[0];
		if (first == "p" || first == "c")
			return parse_dimacs(lines);
	}
	return parse_edge_list(lines);
}

Graph read_graph_file(const std::string &path) {
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw PreconditionError("cannot open graph file '" + path + "'");
	std::ostringstream buf;
	buf << in.rdbuf();
	return parse_graph(buf.str());
}

std::size_t edge_count_induced(const Graph &g, const VertexSet &s) {
	if (s.none())
		throw PreconditionError("induced edge count of an empty vertex set");
	std::size_t twice = 0;
	s.for_each([&](Vertex v) { twice += intersection_count(g.neighbors(v), s); });
	return twice / 2;
}

std::size_t edge_count_induced(const Graph &g, std::span<const Vertex> s) {
	return edge_count_induced(g, Bitset::from_list(g.order(), s));
}

std::vector<std::optional<std::size_t>> distances_from(const Graph &g, Vertex source) {
	if (source >= g.order())
		throw PreconditionError("vertex " + std::to_string(source) + " out of range");
	std::vector<std::optional<std::size_t>> dist(g.order());
	std::deque<Vertex> queue{source};
	dist[source] = 0;
	while (!queue.empty()) {
		const Vertex u = queue.front();
		queue.pop_front();
		g.neighbors(u).for_each([&](Vertex w) {
			if (!dist[w]) {
				dist[w] = *dist[u] + 1;
				queue.push_back(w);
			}
		});
	}
	return dist;
}

std::optional<std::size_t> distance(const Graph &g, Vertex u, Vertex v) {
	if (v >= g.order())
		throw PreconditionError("vertex " + std::to_string(v) + " out of range");
	return distances_from(g, u)[v];
}

VertexSet r_ball(const Graph &g, const VertexSet &seeds, std::size_t r) {
	VertexSet ball = seeds;
	VertexSet frontier = seeds;
	for (std::size_t step = 0; step < r && frontier.any(); ++step) {
		VertexSet next{g.order()};
		frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
		next -= ball;
		ball |= next;
		frontier = std::move(next);
	}
	return ball;
}

VertexSet r_ball(const Graph &g, Vertex v, std::size_t r) {
	if (v >= g.order())
		throw PreconditionError("vertex " + std::to_string(v) + " out of range");
	VertexSet seed{g.order()};
	seed.set(v);
	return r_ball(g, seed, r);
}

std::pair<Graph, VertexMapping> remove_isolated(const Graph &g) {
	VertexSet keep{g.order()};
	for (Vertex v = 0; v < g.order(); ++v)
		if (g.degree(v) > 0)
			keep.set(v);
	return g.induced(keep);
}

VertexSet small_degree_vertices(const Graph &g, std::size_t d) {
	VertexSet out{g.order()};
	for (Vertex v = 0; v < g.order(); ++v)
		if (g.degree(v) >= 1 && g.degree(v) <= d)
			out.set(v);
	return out;
}

VertexSet vertices_with_degree_at_most(const Graph &g, std::size_t d) {
	VertexSet out{g.order()};
	for (Vertex v = 0; v < g.order(); ++v)
		if (g.degree(v) <= d)
			out.set(v);
	return out;
}

VertexSet neighborhood(const Graph &g, const VertexSet &s) {
	VertexSet out{g.order()};
	s.for_each([&](Vertex v) { out |= g.neighbors(v); });
	return out;
}

bool is_clique(const Graph &g, const VertexSet &s) {
	const std::size_t k = s.count();
	bool ok = true;
	s.for_each([&](Vertex v) {
		if (ok && intersection_count(g.neighbors(v), s) != k - 1)
			ok = false;
	});
	return ok;
}

bool is_independent(const Graph &g, const VertexSet &s) {
	bool ok = true;
	s.for_each([&](Vertex v) {
		if (ok && g.neighbors(v).intersects(s))
			ok = false;
	});
	return ok;
}

bool is_connected(const Graph &g) {
	if (g.order() == 0)
		return true;
	return r_ball(g, Vertex{0}, g.order()).count() == g.order();
}

} // namespace kedge
