#include "kedge/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "kedge/counting.hpp"
#include "kedge/decomposer.hpp"
#include "kedge/errors.hpp"
#include "kedge/random_graphs.hpp"
#include "kedge/structure_finders.hpp"

namespace kedge::cli {

namespace {

struct Options {
	std::string input;
	std::uint64_t k = 0;
	std::optional<std::string> override_pk;
	std::optional<std::string> override_d0;
	std::optional<std::string> override_ramsey;
	bool unsafe_overrides = false;
	std::size_t guard = kDefaultCountGuard;
	std::uint64_t seed = 1;
	std::string format = "text";
	bool strict_nice = false;

	std::string witness_file;
	std::string set;
	std::size_t ell = 0;
	std::size_t radius = 1;
	std::string family = "er";
	std::size_t n = 10;
	double p = 0.3;
	std::string sizes;
	std::string sidecar;
	bool table = false;
};

// Key/value records; text mode prints "key value", structured "key: value".
class Report {
public:
	Report(std::ostream &out, bool structured) : out_{out}, structured_{structured} { }

	void field(std::string_view key, const std::string &value) {
		if (structured_)
			out_ << key << ": " << value << '\n';
		else
			out_ << key << ' ' << value << '\n';
	}
	void line(const std::string &text) { out_ << text << '\n'; }
	bool structured() const { return structured_; }

private:
	std::ostream &out_;
	bool structured_;
};

std::string join_labels(const Graph &g, const std::vector<Vertex> &vs) {
	std::string s;
	for (Vertex v : vs) {
		if (!s.empty())
			s += ' ';
		s += g.label(v);
	}
	return s;
}

std::string join_labels(const Graph &g, const VertexSet &vs) { return join_labels(g, vs.to_vector()); }

Graph load_graph(const Options &opt) {
	if (opt.input.empty())
		throw PreconditionError("--input is required");
	if (opt.input == "-") {
		std::ostringstream buf;
		buf << std::cin.rdbuf();
		return parse_graph(buf.str());
	}
	return read_graph_file(opt.input);
}

BigInt parse_big(const std::string &text, const char *flag) {
	try {
		BigInt v{text};
		return v;
	} catch (const std::exception &) {
		throw PreconditionError(std::string(flag) + " expects an integer, got '" + text + "'");
	}
}

ThresholdOverrides overrides_of(const Options &opt) {
	ThresholdOverrides o;
	if (opt.override_pk)
		o.p_k = parse_big(*opt.override_pk, "--override-pk");
	if (opt.override_d0)
		o.d0 = parse_big(*opt.override_d0, "--override-d0");
	if (opt.override_ramsey)
		o.ramsey_bound = parse_big(*opt.override_ramsey, "--override-ramsey");
	if (o.any() && !opt.unsafe_overrides)
		throw PreconditionError("threshold overrides require --unsafe-overrides");
	return o;
}

void override_header(Report &r, const ThresholdOverrides &o) {
	if (!o.any())
		return;
	std::string s;
	auto add = [&](const char *name, const std::optional<BigInt> &v) {
		if (v)
			s += std::string(s.empty() ? "" : " ") + name + "=" + v->str();
	};
	add("p_k", o.p_k);
	add("d0", o.d0);
	add("ramsey", o.ramsey_bound);
	r.field("unsafe-overrides", s);
}

std::vector<Vertex> resolve_vertices(const Graph &g, const std::string &text) {
	std::string normalised = text;
	std::replace(normalised.begin(), normalised.end(), ',', ' ');
	std::istringstream in(normalised);
	std::vector<Vertex> out;
	std::string token;
	while (in >> token) {
		auto v = g.find_label(token);
		if (!v)
			throw PreconditionError("unknown vertex label '" + token + "'");
		out.push_back(*v);
	}
	std::sort(out.begin(), out.end());
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return out;
}

std::string read_text_file(const std::string &path) {
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw PreconditionError("cannot open '" + path + "'");
	std::ostringstream buf;
	buf << in.rdbuf();
	std::string text = buf.str();
	// Drop comment lines.
	std::istringstream lines(text);
	std::string line, kept;
	while (std::getline(lines, line))
		kept += line.substr(0, line.find('#')) + ' ';
	return kept;
}

// Every vertex is declared on its own line first so ids survive a round trip.
void write_edge_list(std::ostream &out, const Graph &g) {
	out << "# vertices " << g.order() << " edges " << g.edge_count() << '\n';
	for (Vertex v = 0; v < g.order(); ++v)
		out << g.label(v) << '\n';
	for (const Edge &e : g.edges())
		out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
}

int cmd_solve(const Options &opt, Report &r) {
	const Graph g = load_graph(opt);
	const auto overrides = overrides_of(opt);
	override_header(r, overrides);
	const SolverConfig cfg = SolverConfig::with_overrides(opt.k, overrides);
	const SolveResult res = solve(g, opt.k, cfg);
	r.field("k", std::to_string(opt.k));
	r.field("answer", res.yes() ? "yes" : "no");
	if (res.witness) {
		if (!verify_witness(g, *res.witness))
			throw InvariantViolation("solver witness failed re-verification");
		r.field("witness", join_labels(g, res.witness->vertices));
		r.field("provenance", std::string(to_string(res.witness->provenance)));
	}
	r.field("route", res.route);
	return ok;
}

int cmd_verify(const Options &opt, Report &r) {
	const Graph g = load_graph(opt);
	std::string text = opt.set;
	if (!opt.witness_file.empty())
		text += ' ' + read_text_file(opt.witness_file);
	const auto vs = resolve_vertices(g, text);
	if (vs.empty())
		throw PreconditionError("no witness given (use --witness FILE or --set LABELS)");
	const VertexSet s = Bitset::from_list(g.order(), vs);
	const std::size_t edges = edge_count_induced(g, s);
	const bool valid = verify_witness(g, s, opt.k, opt.strict_nice);
	r.field("result", valid ? "valid" : "invalid");
	r.field("k", std::to_string(opt.k));
	r.field("edges", std::to_string(edges));
	if (opt.strict_nice) {
		std::vector<Vertex> isolated;
		s.for_each([&](Vertex v) {
			if (!g.neighbors(v).intersects(s))
				isolated.push_back(v);
		});
		r.field("isolated", join_labels(g, isolated));
	}
	return ok;
}

int cmd_count(const Options &opt, Report &r, bool nice) {
	const Graph g = load_graph(opt);
	nice = nice || opt.strict_nice;
	const auto c = nice ? count_eis_nice(g, opt.k, opt.guard) : count_eis(g, opt.k, opt.guard);
	if (r.structured()) {
		r.field("count", std::to_string(c));
		r.field("k", std::to_string(opt.k));
		r.field("nice", nice ? "true" : "false");
	} else {
		r.line(std::to_string(c));
	}
	return ok;
}

int cmd_reduce(const Options &opt, std::ostream &out, Report &r) {
	const Graph g = load_graph(opt);
	const BlockGraph h = build_reduction_graph(g, opt.k);
	if (opt.table) {
		const CountTable t = count_is_table(g, opt.k, opt.guard);
		for (std::size_t x = 0; x < t.s.size(); ++x)
			r.field("X=" + std::to_string(x), "s " + std::to_string(t.s[x]) + " t " + std::to_string(t.t[x]));
		r.field("t_full", std::to_string(t.t.back()));
		r.field("independent_sets", std::to_string(t.result));
		return ok;
	}
	std::ostringstream blocks;
	for (std::size_t i = 0; i < h.blocks.size(); ++i)
		blocks << "block " << (i + 1) << ": " << join_labels(h.graph, h.blocks[i]) << '\n';
	if (!opt.sidecar.empty()) {
		std::ofstream side(opt.sidecar, std::ios::binary);
		if (!side)
			throw PreconditionError("cannot write sidecar '" + opt.sidecar + "'");
		side << blocks.str();
	} else {
		std::istringstream lines(blocks.str());
		for (std::string line; std::getline(lines, line);)
			out << "# " << line << '\n';
	}
	write_edge_list(out, h.graph);
	return ok;
}

int cmd_decompose(const Options &opt, Report &r) {
	const Graph g = load_graph(opt);
	const auto overrides = overrides_of(opt);
	override_header(r, overrides);
	const SolverConfig cfg = SolverConfig::with_overrides(opt.k, overrides);
	const DecomposeOutcome outcome = decompose(g, opt.k, cfg);
	r.field("outcome", std::string(to_string(outcome.kind)));
	if (outcome.witness) {
		r.field("witness", join_labels(g, outcome.witness->vertices));
		r.field("provenance", std::string(to_string(outcome.witness->provenance)));
	}
	if (outcome.split) {
		const auto &s = *outcome.split;
		r.field("v0", g.label(s.v0));
		r.field("V1", join_labels(g, s.v1));
		r.field("V2", join_labels(g, s.v2));
		r.field("B", join_labels(g, s.b));
		const auto problem = check_split_invariants(g, s, cfg.thresholds);
		r.field("invariants", problem ? "violated: " + *problem : "ok");
		if (problem)
			return invariant_violation;
	}
	return ok;
}

int cmd_scattered(const Options &opt, Report &r) {
	const Graph g = load_graph(opt);
	const VertexSet s = opt.set.empty() ? g.all_vertices() : Bitset::from_list(g.order(), resolve_vertices(g, opt.set));
	const bool decision = is_scattered(g, s, opt.ell, opt.radius);
	r.field("scattered", decision ? "yes" : "no");
	r.field("T", join_labels(g, greedy_scattered(g, s, opt.radius)));
	return ok;
}

std::vector<std::size_t> parse_sizes(const std::string &text) {
	std::string normalised = text;
	std::replace(normalised.begin(), normalised.end(), ',', ' ');
	std::istringstream in(normalised);
	std::vector<std::size_t> out;
	for (long long v; in >> v;) {
		if (v < 0)
			throw PreconditionError("clique sizes must be non-negative");
		out.push_back(static_cast<std::size_t>(v));
	}
	if (!in.eof())
		throw PreconditionError("cannot parse --sizes '" + text + "'");
	return out;
}

int cmd_gen(const Options &opt, std::ostream &out) {
	Rng rng{opt.seed};
	out << "# family " << opt.family << " seed " << opt.seed << '\n';
	if (opt.family == "er") {
		write_edge_list(out, erdos_renyi(opt.n, opt.p, rng));
	} else if (opt.family == "cliques") {
		const auto sizes = opt.sizes.empty() ? std::vector<std::size_t>{opt.n, opt.n, opt.n} : parse_sizes(opt.sizes);
		write_edge_list(out, disjoint_cliques(sizes));
	} else if (opt.family == "star") {
		write_edge_list(out, star(opt.n));
	} else if (opt.family == "bridge") {
		const GeneratedBridge b = random_bridge(opt.n, opt.p, rng);
		out << "# V1 " << join_labels(b.graph, b.v1) << '\n';
		out << "# V2 " << join_labels(b.graph, b.v2) << '\n';
		out << "# B " << join_labels(b.graph, b.b) << '\n';
		out << "# d " << b.d << '\n';
		write_edge_list(out, b.graph);
	} else {
		throw PreconditionError("unknown family '" + opt.family + "' (er, cliques, star, bridge)");
	}
	return ok;
}

void add_common(CLI::App *cmd, Options &opt) {
	cmd->add_option("--input", opt.input, "graph file (edge list or DIMACS), '-' for stdin");
	cmd->add_option("--k", opt.k, "edge count / parameter");
	cmd->add_option("--format", opt.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
	cmd->add_option("--guard", opt.guard, "largest vertex count for exhaustive enumeration");
	cmd->add_option("--seed", opt.seed, "random seed");
	cmd->add_flag("--strict-nice", opt.strict_nice, "require no isolated vertices");
}

void add_overrides(CLI::App *cmd, Options &opt) {
	cmd->add_option("--override-pk", opt.override_pk, "replace p_k");
	cmd->add_option("--override-d0", opt.override_d0, "replace D0(k)");
	cmd->add_option("--override-ramsey", opt.override_ramsey, "replace the Ramsey bound");
	cmd->add_flag("--unsafe-overrides", opt.unsafe_overrides, "acknowledge test-only thresholds");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
	Options opt;
	CLI::App app{"k-edge induced subgraph solver, counter and test laboratory", "kedge"};
	app.require_subcommand(1, 1);

	auto *solve_cmd = app.add_subcommand("solve", "decide whether G has a k-edge induced subgraph");
	auto *verify_cmd = app.add_subcommand("verify", "check a witness set");
	auto *count_cmd = app.add_subcommand("count", "count k-edge induced subgraphs");
	auto *nice_cmd = app.add_subcommand("count-nice", "count k-edge induced subgraphs without isolated vertices");
	auto *reduce_cmd = app.add_subcommand("reduce", "emit the block graph of the counting reduction");
	auto *decompose_cmd = app.add_subcommand("decompose", "run one decomposition step");
	auto *scattered_cmd = app.add_subcommand("scattered", "decide whether S holds ell vertices pairwise farther than r");
	auto *gen_cmd = app.add_subcommand("gen", "generate a random graph");
	for (auto *cmd : app.get_subcommands({}))
		add_common(cmd, opt);
	add_overrides(solve_cmd, opt);
	add_overrides(decompose_cmd, opt);
	verify_cmd->add_option("--witness", opt.witness_file, "file listing witness vertex labels");
	verify_cmd->add_option("--set", opt.set, "witness labels, comma or space separated");
	reduce_cmd->add_option("--sidecar", opt.sidecar, "write the block annotation here");
	reduce_cmd->add_flag("--table", opt.table, "print the s_X / t_X table instead of H");
	scattered_cmd->add_option("--set", opt.set, "candidate set S (default: all vertices)");
	scattered_cmd->add_option("--ell", opt.ell, "number of vertices");
	scattered_cmd->add_option("--radius", opt.radius, "distance r");
	gen_cmd->add_option("--family", opt.family, "er, cliques, star or bridge");
	gen_cmd->add_option("--n", opt.n, "vertex count (leaves for star, clique size for cliques)");
	gen_cmd->add_option("--p", opt.p, "edge probability");
	gen_cmd->add_option("--sizes", opt.sizes, "clique sizes for the cliques family");

	try {
		std::vector<std::string> reversed(args.rbegin(), args.rend());
		app.parse(reversed);
	} catch (const CLI::ParseError &e) {
		const int code = app.exit(e, out, err);
		return code == 0 ? ok : input_error;
	}

	Report report{out, opt.format == "structured"};
	try {
		const bool emits_graph = gen_cmd->parsed() || (reduce_cmd->parsed() && !opt.table);
		if (report.structured() && !emits_graph)
			report.field("verb", app.get_subcommands().front()->get_name());
		if (solve_cmd->parsed())
			return cmd_solve(opt, report);
		if (verify_cmd->parsed())
			return cmd_verify(opt, report);
		if (count_cmd->parsed())
			return cmd_count(opt, report, false);
		if (nice_cmd->parsed())
			return cmd_count(opt, report, true);
		if (reduce_cmd->parsed())
			return cmd_reduce(opt, out, report);
		if (decompose_cmd->parsed())
			return cmd_decompose(opt, report);
		if (scattered_cmd->parsed())
			return cmd_scattered(opt, report);
		return cmd_gen(opt, out);
	} catch (const GuardExceeded &e) {
		err << "error: " << e.what() << '\n';
		return guard_exceeded;
	} catch (const InvariantViolation &e) {
		err << "internal error: " << e.what() << '\n';
		return invariant_violation;
	} catch (const RamseyExhausted &e) {
		err << "internal error: " << e.what() << '\n';
		return invariant_violation;
	} catch (const Error &e) {
		err << "error: " << e.what() << '\n';
		return input_error;
	}
}

} // namespace kedge::cli
